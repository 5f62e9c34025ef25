//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p mockq-cli --test acceptance`. The process exits
//! nonzero when any criterion fails.

mod common;

use mockq::catalog::{self, JonesForm};
use mockq::chars::{m_matrix, theorem_matrices, verify_s_transform, PeriodicFunction};
use mockq::lfunc::{self, LMethod, COS_RATIO_IDS, T_SERIES_IDS};
use mockq::wrt;
use mockq::{Cyclo, VerificationReport, Q};
use mockq_cli::dsl::parse_expr;
use num_complex::Complex64;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn summarize(reports: &[VerificationReport]) -> Outcome {
    let bad: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    if bad.is_empty() {
        Ok(format!("{} checks", reports.len()))
    } else {
        Err(format!("{} of {} failed; first: {}", bad.len(), reports.len(), bad[0]))
    }
}

fn records(filter: impl Fn(&str) -> bool, t: i64) -> Outcome {
    let ids: Vec<&str> = catalog::identity_ids().into_iter().filter(|id| filter(id)).collect();
    if ids.is_empty() {
        return Err("no records selected".into());
    }
    let reports: Vec<_> = ids.par_iter().map(|id| catalog::verify_identity(id, t).unwrap()).collect();
    summarize(&reports)
}

fn c1() -> Outcome {
    records(|id| id.starts_with("prop_"), 200)
}

fn c2() -> Outcome {
    records(|id| id == "omega_sq_eq_nu" || id.starts_with("rho_psi_d5_chain/"), 300)
}

fn c3() -> Outcome {
    let finite = records(|id| ["chi0_star_finite_forms", "chi1_star_finite_form", "phi_star_terminating", "nu_star_terminating"].contains(&id), 200)?;
    let surgery = records(|id| id.ends_with("_surgery") || id == "F0_star_double_sum", 100)?;
    Ok(format!("terminating {finite}; surgery {surgery}"))
}

fn c4() -> Outcome {
    let ids = ["selftest_euler", "selftest_triple_product", "selftest_q_binomial"];
    let reports: Vec<_> = ids
        .par_iter()
        .map(|id| {
            let r = catalog::identity_records().iter().find(|r| r.id == *id).unwrap();
            r.verify(r.default_truncation)
        })
        .collect();
    summarize(&reports)
}

fn c5() -> Outcome {
    let mut reports = vec![];
    for th in wrt::theorem_records() {
        reports.extend(wrt::cross_verify(th.id, 2..=20).map_err(|e| e.to_string())?);
    }
    let bad: Vec<&str> = wrt::theorem_records()
        .iter()
        .map(|th| th.id)
        .filter(|id| reports.iter().any(|r| r.id.starts_with(&format!("{id}/")) && !r.passed()))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} checks", reports.len()))
    } else {
        let first = reports.iter().find(|r| !r.passed()).unwrap();
        Err(format!("theorems without agreement: {}; first: {first}", bad.join(", ")))
    }
}

fn c6() -> Outcome {
    for id in COS_RATIO_IDS {
        let chi = mockq::chars::character(id).map_err(|e| e.to_string())?;
        for k in 0..=10 {
            let a = lfunc::l_value(&chi, k, LMethod::Bernoulli).map_err(|e| e.to_string())?;
            let b = lfunc::l_value(&chi, k, LMethod::CosGenerating).map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("{id} k={k}: {a} vs {b}"));
            }
        }
    }
    let chi = mockq::chars::character("chi60_111").unwrap();
    for (k, want) in [(0, 2), (1, -238)] {
        let want = Q::from_integer(want.into());
        for m in [LMethod::Bernoulli, LMethod::CosGenerating] {
            let v = lfunc::l_value(&chi, k, m).map_err(|e| e.to_string())?;
            if v != want {
                return Err(format!("L(-{}) by {m:?} = {v}, expected {want}", 2 * k));
            }
        }
    }
    Ok(format!("{} characters, k <= 10; L(0) = 2, L(-2) = -238", COS_RATIO_IDS.len()))
}

fn c7() -> Outcome {
    summarize(&T_SERIES_IDS.iter().map(|id| lfunc::verify_t_series(id, 10)).collect::<Vec<_>>())
}

fn c8() -> Outcome {
    let ns = [50, 100, 200];
    let p2 = (vec![PeriodicFunction::psi(2, 1).unwrap()], m_matrix(2).unwrap().s);
    let (m30, c30) = theorem_matrices("2_3_5").unwrap();
    let mut reports = vec![];
    for k in [0, 2, 4] {
        reports.push(lfunc::verify_asymptotic_decay("P=2", &p2.0, &p2.1, 0, k, &ns, 0.15));
        for a in 0..c30.len() {
            reports.push(lfunc::verify_asymptotic_decay("P=30", &c30, &m30.s, a, k, &ns, 0.15));
        }
    }
    summarize(&reports)
}

fn c9() -> Outcome {
    let taus = [Complex64::new(0.0, 1.0), Complex64::new(0.0, 2.0), Complex64::new(0.2, 0.8)];
    let jobs: Vec<(u64, Complex64)> = (2..=30).flat_map(|p| taus.iter().map(move |&t| (p, t))).collect();
    let mut reports: Vec<_> = jobs.par_iter().map(|&(p, t)| verify_s_transform(p, t, 1e-12).unwrap()).collect();
    let zs = [Complex64::new(0.3, -0.7), Complex64::new(0.0, -0.5)];
    for p in [2u64, 3] {
        for a in 1..p {
            for z in zs {
                reports.push(lfunc::verify_nearly_modular_hat(p, a, z, 1e-6));
            }
        }
    }
    summarize(&reports)
}

fn c10() -> Outcome {
    for n in 1..=12 {
        let a: Cyclo = catalog::jones_trefoil(JonesForm::Cyclotomic, n).map_err(|e| e.to_string())?;
        let b = catalog::jones_trefoil(JonesForm::Geometric, n).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("N={n}: {a} vs {b}"));
        }
    }
    Ok("N = 1..12".into())
}

fn c11() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_mockq");
    let all = Command::new(bin).args(["verify", "--all"]).output().map_err(|e| e.to_string())?;
    if all.status.code() != Some(0) {
        return Err(format!("verify --all exited {:?}", all.status.code()));
    }
    let fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corrupted.mq");
    let bad = Command::new(bin)
        .args(["--json", "verify", "--file", fixture.to_str().unwrap()])
        .output()
        .map_err(|e| e.to_string())?;
    if bad.status.code() != Some(1) {
        return Err(format!("corrupted fixture exited {:?}", bad.status.code()));
    }
    let mismatch = String::from_utf8_lossy(&bad.stdout)
        .lines()
        .filter_map(|l| serde_json::from_str::<serde_json::Value>(l).ok())
        .find(|v| v["status"] == "fail")
        .and_then(|v| v["first_mismatch"].as_str().map(String::from))
        .ok_or("no first_mismatch in JSON output")?;
    let mut runner = TestRunner::new(Config { cases: 100, failure_persistence: None, ..Config::default() });
    runner
        .run(&common::expr(), |e| {
            let src = e.to_string();
            proptest::prop_assert_eq!(parse_expr(&src).unwrap(), e, "{}", src);
            Ok(())
        })
        .map_err(|e| format!("round trip: {e}"))?;
    Ok(format!("verify --all exit 0; fixture exit 1, first mismatch at q^{mismatch}; 100 round trips"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 11] = [
        ("proposition suite at T=200", c1, 300),
        ("structural equalities at T=300", c2, 30),
        ("terminating forms and surgery sums", c3, 180),
        ("classical self-tests", c4, 60),
        ("WRT cross-method, N=2..20", c5, 600),
        ("L-values by two routes", c6, 10),
        ("t-series to t^10", c7, 30),
        ("asymptotic decay exponents", c8, 120),
        ("modular transforms", c9, 120),
        ("trefoil Jones dual forms", c10, 10),
        ("command-line interface", c11, 60),
    ];
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut r = f();
        let el = t.elapsed();
        if r.is_ok() && el > Duration::from_secs(*budget) {
            r = Err(format!("took {el:.1?}, budget {budget}s"));
        }
        let (tag, msg) = match r {
            Ok(m) => ("PASS", m),
            Err(m) => {
                failed += 1;
                ("FAIL", m)
            }
        };
        println!("{tag} {:>2}. {name} [{el:.1?}]: {msg}", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
