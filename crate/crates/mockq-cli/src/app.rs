//! Subcommands and the exit-code contract: 0 all pass, 1 verification failure,
//! 2 usage or domain error.

use crate::cache::Cache;
use crate::config::Config;
use crate::dsl;
use crate::format;
use crate::report::RunReport;
use clap::{Parser, Subcommand};
use mockq::chars::{character, m_matrix, theorem_matrices, PeriodicFunction};
use mockq::lfunc::{self, LMethod};
use mockq::wrt::{self, Method};
use mockq::{catalog, Error};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(name = "mockq", version, about = "Exact q-series workbench: mock and false theta identities, WRT invariants, L-values")]
pub struct Cli {
    /// One JSON object per report on stdout
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for independent checks
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Result cache directory
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Config file (`key = value` lines)
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Expand a catalog function as a truncated series
    Expand {
        id: String,
        #[arg(long)]
        order: Option<i64>,
        #[arg(long)]
        variant: Option<String>,
    },
    /// Verify registered identities, or the identities in a DSL file
    Verify {
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        order: Option<i64>,
    },
    /// WRT invariant of a Seifert manifold at e^{2πi/N}
    Wrt {
        manifold: String,
        n: u64,
        #[arg(long, default_value = "eichler_limit")]
        method: String,
        /// Compare every available method instead
        #[arg(long)]
        cross: bool,
    },
    /// L(−2k, chi) as an exact rational
    Lvalue {
        chi: String,
        k: usize,
        /// bernoulli, cos_generating, or both
        #[arg(long, default_value = "bernoulli")]
        method: String,
    },
    /// Asymptotic expansion of Ψ̃ near 1/N, remainder after K terms
    Asym {
        p: u64,
        a: usize,
        n: u64,
        k: usize,
        /// Use a theorem character vector (e.g. 2_3_5) instead of the ψ basis
        #[arg(long)]
        vector: Option<String>,
    },
    /// Nearly modular transformation of the hat Eichler integral at z = re + i·im
    Hatcheck {
        p: u64,
        a: u64,
        #[arg(allow_hyphen_values = true)]
        re: f64,
        #[arg(allow_hyphen_values = true)]
        im: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Evaluate a DSL expression or identity
    Dsl {
        expr: String,
        #[arg(long)]
        order: Option<i64>,
    },
    /// List functions, identities, manifolds or characters
    List { what: Option<String> },
}

/// Failure before any report exists: bad usage or a domain error.
pub struct Usage(pub String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

const DEFAULT_ORDER: i64 = 50;

fn manifold_id(s: &str) -> String {
    let t = s.trim();
    if t.eq_ignore_ascii_case("s3") {
        return "S3".into();
    }
    let t = t.strip_prefix("sigma_").or_else(|| t.strip_prefix("M_")).or_else(|| t.strip_prefix("m_")).unwrap_or(t);
    let t = t.strip_prefix("M(").or_else(|| t.strip_prefix("Σ(")).and_then(|r| r.strip_suffix(')')).unwrap_or(t);
    t.replace([',', ' '], "_").replace("__", "_")
}

struct Ctx<'a> {
    cfg: &'a Config,
    command: &'static str,
    inputs: Value,
}

impl Ctx<'_> {
    fn report(&self, id: impl Into<String>) -> RunReport {
        RunReport::new(self.command, &self.inputs, id)
    }

    fn verification(&self, r: &mockq::VerificationReport) -> RunReport {
        RunReport::from_verification(self.command, &self.inputs, r)
    }
}

fn decimal(c: &mockq::Cyclo, bits: u32) -> String {
    let digits = ((bits as f64) * 0.30103).floor() as usize;
    let (re, im) = c.to_complex(bits).to_decimal(digits.min(60));
    format!("{re} + {im}i")
}

fn expand(ctx: &Ctx, id: &str, order: i64, variant: Option<&str>) -> Result<Vec<RunReport>, Usage> {
    let s = catalog::expand(id, order, variant)?;
    let mut r = ctx.report(id);
    r.truncation = Some(order.to_string());
    r.detail = format::series(&s);
    r.result = Some(json!({ "series": s.to_string() }));
    Ok(vec![r])
}

fn verify_file(ctx: &Ctx, path: &PathBuf, order: i64) -> Result<Vec<RunReport>, Usage> {
    let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let mut items = vec![];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        // optional `label: identity`
        let (label, body, offset) = match line.split_once(':') {
            Some((l, b)) if !l.is_empty() && l.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '-') => {
                (l.to_string(), b, l.chars().count() + 1)
            }
            _ => (format!("line{}", i + 1), line, 0),
        };
        let indent = raw.chars().count() - raw.trim_start().chars().count();
        let stmt = dsl::parse(body).map_err(|e| match e {
            Error::Parse { col, msg, .. } => {
                Usage(format!("{}:{}:{}: {msg}", path.display(), i + 1, col + offset + indent))
            }
            e => Usage(e.to_string()),
        })?;
        if !matches!(stmt, dsl::Stmt::Eq(..)) {
            return Err(Usage(format!("{}:{}: expected an identity `lhs == rhs`", path.display(), i + 1)));
        }
        items.push((label, stmt));
    }
    Ok(items
        .par_iter()
        .map(|(label, stmt)| {
            let t0 = Instant::now();
            let mut r = match dsl::eval_stmt(stmt, order, label) {
                Ok(dsl::Outcome::Report(v)) => ctx.verification(&v),
                Ok(dsl::Outcome::Series(_)) => unreachable!("identities evaluate to reports"),
                Err(e) => {
                    let mut r = ctx.report(label.clone());
                    r.status = "error".into();
                    r.detail = e.to_string();
                    r
                }
            };
            r.result = Some(json!({ "identity": stmt.to_string() }));
            r.timing_ms = t0.elapsed().as_secs_f64() * 1e3;
            r
        })
        .collect())
}

fn verify(ctx: &Ctx, id: Option<&str>, all: bool, file: Option<&PathBuf>, order: Option<i64>) -> Result<Vec<RunReport>, Usage> {
    match (id, all, file) {
        (None, true, None) => Ok(catalog::verify_all(order).iter().map(|r| ctx.verification(r)).collect()),
        (Some(id), false, None) => {
            let rec = catalog::identity_records().iter().find(|r| r.id == id);
            let t = order.or(rec.map(|r| r.default_truncation)).unwrap_or_else(|| {
                catalog::identity_records()
                    .iter()
                    .filter(|r| r.id.starts_with(id))
                    .map(|r| r.default_truncation)
                    .max()
                    .unwrap_or(DEFAULT_ORDER)
            });
            Ok(vec![ctx.verification(&catalog::verify_identity(id, t)?)])
        }
        (None, false, Some(f)) => verify_file(ctx, f, order.or(ctx.cfg.truncation).unwrap_or(DEFAULT_ORDER)),
        _ => Err(Usage("verify takes exactly one of <identity-id>, --all, --file".into())),
    }
}

fn wrt_cmd(ctx: &Ctx, manifold: &str, n: u64, method: &str, cross: bool) -> Result<Vec<RunReport>, Usage> {
    let m = manifold_id(manifold);
    if cross {
        return Ok(wrt::cross_verify(&m, n..=n)?.iter().map(|r| ctx.verification(r)).collect());
    }
    let method: Method = method.parse()?;
    let w = wrt::wrt_invariant(&m, n, method)?;
    let mut r = ctx.report(format!("{m}/N={n}"));
    r.detail = match &w.value {
        Some(v) => format!("tau_N = {}", decimal(v, ctx.cfg.precision_bits)),
        None => w.note.clone(),
    };
    r.result = Some(serde_json::to_value(&w).map_err(|e| Usage(e.to_string()))?);
    Ok(vec![r])
}

fn lvalue_cmd(ctx: &Ctx, chi_id: &str, k: usize, method: &str) -> Result<Vec<RunReport>, Usage> {
    let chi = character(chi_id)?;
    let mut r = ctx.report(format!("L(-{}, {chi_id})", 2 * k));
    if method == "both" {
        let a = lfunc::l_value(&chi, k, LMethod::Bernoulli)?;
        let b = lfunc::l_value(&chi, k, LMethod::CosGenerating)?;
        r.status = if a == b { "pass" } else { "fail" }.into();
        r.detail = format!("bernoulli {a}, cos_generating {b}");
        r.result = Some(json!({ "bernoulli": a.to_string(), "cos_generating": b.to_string() }));
    } else {
        let v = lfunc::l_value(&chi, k, method.parse()?)?;
        r.detail = v.to_string();
        r.result = Some(json!({ "value": v.to_string(), "method": method }));
    }
    Ok(vec![r])
}

fn asym_cmd(ctx: &Ctx, p: u64, a: usize, n: u64, k: usize, vector: Option<&str>) -> Result<Vec<RunReport>, Usage> {
    let (s, chars) = match vector {
        Some(v) => {
            let (m, c) = theorem_matrices(v)?;
            (m.s, c)
        }
        None => {
            let m = m_matrix(p)?;
            let c: Vec<PeriodicFunction> = (1..p).map(|b| PeriodicFunction::psi(p, b)).collect::<mockq::Result<_>>()?;
            (m.s, c)
        }
    };
    if a == 0 || a > chars.len() {
        return Err(Usage(format!("component a must be in 1..={}", chars.len())));
    }
    let rep = lfunc::asymptotic_check(&chars, &s, a - 1, n, k)?;
    let mut r = ctx.report(format!("asym P={} a={a} N={n} K={k}", rep.p));
    r.status = if rep.ratio <= 2.0 { "pass" } else { "fail" }.into();
    r.detail = format!("remainder {:.3e}, (K+1)-th term {:.3e}, ratio {:.3}", rep.remainder, rep.next_term, rep.ratio);
    r.result = Some(serde_json::to_value(&rep).map_err(|e| Usage(e.to_string()))?);
    Ok(vec![r])
}

fn dsl_cmd(ctx: &Ctx, expr: &str, order: i64) -> Result<Vec<RunReport>, Usage> {
    let stmt = dsl::parse(expr)?;
    Ok(vec![match dsl::eval_stmt(&stmt, order, "dsl")? {
        dsl::Outcome::Report(v) => ctx.verification(&v.with_id(stmt.to_string())),
        dsl::Outcome::Series(s) => {
            let mut r = ctx.report(stmt.to_string());
            r.truncation = Some(order.to_string());
            r.detail = format::series(&s);
            r.result = Some(json!({ "series": s.to_string() }));
            r
        }
    }])
}

fn list_cmd(ctx: &Ctx, what: Option<&str>) -> Result<Vec<RunReport>, Usage> {
    let items: Vec<String> = match what.unwrap_or("functions") {
        "functions" => catalog::registry().iter().map(|f| format!("{} [{}]", f.id, f.variant_names().join(", "))).collect(),
        "identities" => catalog::identity_ids().iter().map(|s| s.to_string()).collect(),
        "manifolds" => wrt::theorem_records().iter().map(|t| format!("{} {}", t.id, t.name)).collect(),
        "characters" => mockq::chars::CHARACTER_IDS.iter().map(|s| s.to_string()).collect(),
        w => return Err(Usage(format!("unknown list `{w}` (functions, identities, manifolds, characters)"))),
    };
    let mut r = ctx.report(what.unwrap_or("functions"));
    r.detail = items.join("\n");
    r.result = Some(json!(items));
    Ok(vec![r])
}

fn describe(cmd: &Cmd, cfg: &Config) -> (&'static str, Value) {
    match cmd {
        Cmd::Expand { id, order, variant } => {
            ("expand", json!({ "id": id, "order": order.or(cfg.truncation).unwrap_or(20), "variant": variant }))
        }
        Cmd::Verify { id, all, file, order } => (
            "verify",
            json!({ "id": id, "all": all, "file": file.as_ref().map(|f| f.display().to_string()), "order": order }),
        ),
        Cmd::Wrt { manifold, n, method, cross } => {
            ("wrt", json!({ "manifold": manifold_id(manifold), "n": n, "method": method, "cross": cross }))
        }
        Cmd::Lvalue { chi, k, method } => ("lvalue", json!({ "chi": chi, "k": k, "method": method })),
        Cmd::Asym { p, a, n, k, vector } => ("asym", json!({ "p": p, "a": a, "n": n, "k": k, "vector": vector })),
        Cmd::Hatcheck { p, a, re, im, tol } => ("hatcheck", json!({ "p": p, "a": a, "re": re, "im": im, "tol": tol })),
        Cmd::Dsl { expr, order } => ("dsl", json!({ "expr": expr, "order": order.or(cfg.truncation).unwrap_or(DEFAULT_ORDER) })),
        Cmd::List { what } => ("list", json!({ "what": what })),
    }
}

/// Cheap commands, and file checks whose inputs live outside the key, bypass the cache.
fn cacheable(cmd: &Cmd) -> bool {
    !matches!(cmd, Cmd::List { .. } | Cmd::Dsl { .. } | Cmd::Verify { file: Some(_), .. })
}

fn execute(cmd: &Cmd, ctx: &Ctx) -> Result<Vec<RunReport>, Usage> {
    let order = ctx.inputs["order"].as_i64();
    match cmd {
        Cmd::Expand { id, variant, .. } => expand(ctx, id, order.unwrap_or(20), variant.as_deref()),
        Cmd::Verify { id, all, file, order } => verify(ctx, id.as_deref(), *all, file.as_ref(), *order),
        Cmd::Wrt { manifold, n, method, cross } => wrt_cmd(ctx, manifold, *n, method, *cross),
        Cmd::Lvalue { chi, k, method } => lvalue_cmd(ctx, chi, *k, method),
        Cmd::Asym { p, a, n, k, vector } => asym_cmd(ctx, *p, *a, *n, *k, vector.as_deref()),
        Cmd::Hatcheck { p, a, re, im, tol } => {
            Ok(vec![ctx.verification(&lfunc::verify_nearly_modular_hat(*p, *a, Complex64::new(*re, *im), *tol))])
        }
        Cmd::Dsl { expr, .. } => dsl_cmd(ctx, expr, order.unwrap_or(DEFAULT_ORDER)),
        Cmd::List { what } => list_cmd(ctx, what.as_deref()),
    }
}

/// Run with explicit arguments, output streams and environment.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write, env: &dyn Fn(&str) -> Option<String>) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let mut cfg = match Config::load(cli.config.as_deref(), env) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    if let Some(j) = cli.jobs {
        cfg.jobs = Some(j.max(1));
    }
    if let Some(c) = &cli.cache {
        cfg.cache_dir = Some(c.clone());
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let cache = cfg.cache_dir.as_ref().and_then(|d| Cache::open(d).ok());
    let t0 = Instant::now();
    let (command, inputs) = describe(&cli.cmd, &cfg);
    let key = Cache::key(command, &inputs);
    let cache = cache.filter(|_| cacheable(&cli.cmd));
    let result = pool.install(|| -> Result<Vec<RunReport>, Usage> {
        if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
            return Ok(hit);
        }
        let ctx = Ctx { cfg: &cfg, command, inputs: inputs.clone() };
        let mut reports = execute(&cli.cmd, &ctx)?;
        let total = t0.elapsed().as_secs_f64() * 1e3;
        for r in reports.iter_mut().filter(|r| r.timing_ms == 0.0) {
            r.timing_ms = total;
        }
        if let Some(c) = &cache {
            let _ = c.put(&key, &reports);
        }
        Ok(reports)
    });
    match result {
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Ok(reports) => {
            for r in &reports {
                let _ = if cli.json {
                    writeln!(out, "{}", serde_json::to_string(r).unwrap_or_default())
                } else {
                    writeln!(out, "{}", r.text())
                };
            }
            i32::from(reports.iter().any(RunReport::failed))
        }
    }
}

