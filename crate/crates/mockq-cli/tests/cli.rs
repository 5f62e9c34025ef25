use std::path::PathBuf;
use std::process::{Command, Output};

fn mockq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mockq"))
        .args(args)
        .env_remove("MOCKQ_CONFIG")
        .env_remove("MOCKQ_TRUNCATION")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&o.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["expand", "F0_star", "--order", "20"], 0),
        (&["dsl", "poch(q;1;2) == 1 - q - q^2 + q^3"], 0),
        (&["dsl", "poch(q;1;2) == 1 - q + q^2 + q^3"], 1),
        (&["dsl", "poch(q;1 2)"], 2),
        (&["verify", "selftest_q_binomial"], 0),
        (&["verify", "no_such_identity"], 2),
        (&["verify"], 2),
        (&["wrt", "sigma_2_3_5", "5", "--cross"], 0),
        (&["wrt", "2_3_5", "1"], 2),
        (&["wrt", "S3", "7"], 0),
        (&["lvalue", "chi60_111", "1", "--method", "both"], 0),
        (&["lvalue", "psi4_1", "1", "--method", "cos_generating"], 2),
        (&["hatcheck", "2", "1", "0.3", "-0.7"], 0),
        (&["hatcheck", "2", "1", "0.3", "0.7"], 1),
        (&["frobnicate"], 2),
        (&["expand"], 2),
        (&["--help"], 0),
    ];
    for (args, code) in cases {
        let o = mockq(args);
        assert_eq!(o.status.code(), Some(*code), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn expand_text() {
    let o = mockq(&["expand", "F0_star", "--order", "20"]);
    let s = String::from_utf8_lossy(&o.stdout);
    assert!(s.contains("1 - q - q^5 + q^10 - q^11 + q^18 + O(q^20)"), "{s}");
}

#[test]
fn json_schema() {
    let o = mockq(&["--json", "lvalue", "chi60_111", "1"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "lvalue");
    assert_eq!(v["result"]["value"], "-238");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["command", "inputs", "status", "first_mismatch", "timing_ms", "version"] {
        assert!(keys.contains(&k), "{k}");
    }
}

#[test]
fn wrt_json() {
    let o = mockq(&["--json", "wrt", "2_3_7", "4"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["result"]["manifold"], "2_3_7");
    assert!(v["result"]["value"].as_str().unwrap().starts_with("M="));
}

#[test]
fn dsl_files() {
    let o = mockq(&["--json", "verify", "--file", &fixture("identities.mq"), "--order", "60"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json_lines(&o);
    assert_eq!(r.len(), 6);
    assert!(r.iter().all(|x| x["status"] == "pass"));

    let o = mockq(&["--json", "verify", "--file", &fixture("corrupted.mq"), "--order", "60"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json_lines(&o);
    let bad: Vec<_> = r.iter().filter(|x| x["status"] == "fail").collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0]["id"], "pentagonal");
    assert_eq!(bad[0]["first_mismatch"], "2");

    let o = mockq(&["verify", "--file", &fixture("malformed.mq")]);
    assert_eq!(o.status.code(), Some(2));
    let e = String::from_utf8_lossy(&o.stderr);
    assert!(e.contains("malformed.mq:2:19"), "{e}");
}

#[test]
fn cache_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().display().to_string();
    let a = mockq(&["--json", "--cache", &d, "wrt", "2_3_5", "6"]);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let b = mockq(&["--json", "--cache", &d, "wrt", "2_3_5", "6"]);
    assert_eq!(json_lines(&a), json_lines(&b));
}

#[test]
fn config_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("mockq.conf");
    std::fs::write(&f, "truncation = 7\n").unwrap();
    let run = |env: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_mockq"));
        c.args(["--json", "--config", f.to_str().unwrap(), "expand", "chi0"]).env_remove("MOCKQ_TRUNCATION");
        if let Some(v) = env {
            c.env("MOCKQ_TRUNCATION", v);
        }
        json_lines(&c.output().unwrap())[0]["truncation"].as_str().unwrap().to_string()
    };
    assert_eq!(run(None), "7");
    assert_eq!(run(Some("9")), "9");
    std::fs::write(&f, "bogus = 1\n").unwrap();
    let o = mockq(&["--config", f.to_str().unwrap(), "expand", "chi0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn jobs_flag_is_deterministic() {
    let a = mockq(&["--json", "--jobs", "1", "verify", "--file", &fixture("identities.mq"), "--order", "40"]);
    let b = mockq(&["--json", "--jobs", "4", "verify", "--file", &fixture("identities.mq"), "--order", "40"]);
    let ids = |o: &Output| json_lines(o).iter().map(|v| v["id"].to_string()).collect::<Vec<_>>();
    assert_eq!(ids(&a), ids(&b));
}
