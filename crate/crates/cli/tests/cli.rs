use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_quasival"));
    c.env_remove("QUASIVAL_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Writes `json` to a fresh file under the target temp dir.
fn spec_file(name: &str, json: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-specs");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path
}

fn eval_text(spec: &str, name: &str, elements: &[&str]) -> String {
    let path = spec_file(name, spec);
    let mut args = vec!["eval", "--spec", path.to_str().unwrap()];
    args.extend_from_slice(elements);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn eval_nadic() {
    let out = eval_text(r#"{"kind":"nadic","n":12}"#, "nadic.json", &["12", "3/2", "18"]);
    assert_eq!(out, "12 ↦ 1\n3/2 ↦ -1\n18 ↦ 0\n");
}

#[test]
fn eval_kummer_on_i() {
    let path = spec_file("kummer.json", r#"{"kind":"kummer","p":5,"d":-1,"gamma":"1"}"#);
    let o = run(&["eval", "--spec", path.to_str().unwrap(), "i", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["element"], "i");
    assert_eq!(v[0]["value"]["coords"][0], "-1");
}

#[test]
fn eval_filter_gives_cut() {
    let spec = r#"{"kind":"filter","algebra":{"kind":"quad_order","p":5,"d":-1,"c":5}}"#;
    assert_eq!(eval_text(spec, "filter.json", &["i"]), "i ↦ (-1)⁺\n");
    let path = spec_file("filter-csv.json", spec);
    let o = run(&["--format", "csv", "eval", "--spec", path.to_str().unwrap(), "i", "2"]);
    assert_eq!(stdout(&o), "element,value\ni,(-1)⁺\n2,(0)⁺\n");
}

#[test]
fn parse_errors_exit_2() {
    let path = spec_file("nadic6.json", r#"{"kind":"nadic","n":6}"#);
    let o = run(&["eval", "--spec", path.to_str().unwrap(), "1+"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty() && o.stdout.is_empty());

    let broken = spec_file("broken.json", "{\"kind\":");
    let o = run(&["eval", "--spec", broken.to_str().unwrap(), "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["eval", "--spec", "/nonexistent/spec.json", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_suite_exits_2() {
    let o = run(&["verify", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--suite", "pims", "--format", "yaml"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corrupted_spec_exits_1_with_witness() {
    let path = spec_file("negated.json", r#"[{"kind":"negated","p":3}]"#);
    let o = run(&["verify", "--suite", "axioms", "--spec", path.to_str().unwrap(), "--samples", "200"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.starts_with("counterexample: axioms failed on -v_3"), "{err}");
    assert!(stdout(&o).contains("FAIL axioms"));
}

#[test]
fn cut_oracle_passes() {
    let o = run(&["verify", "--suite", "cut-oracle", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r["passed"] == true && r["violations"] == 0));
}

#[test]
fn domination_with_spec_pair() {
    let path = spec_file(
        "pair.json",
        r#"[{"w":{"kind":"kummer","p":5,"d":-1,"gamma":1},
             "u":{"field":"Q_sqrt","p":5,"d":-1,"branch":1}}]"#,
    );
    let o = run(&["verify", "--suite", "domination", "--spec", path.to_str().unwrap(), "--samples", "300"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS domination"));
}

#[test]
fn pims_listings() {
    let o = run(&["pims", "--monoid", "cut", "--rank", "2", "--h-level", "1"]);
    assert!(stdout(&o).starts_with("2 PIMs of M(ℤ^2) over H level 1\n"));
    let o = run(&["pims", "--monoid", "cut", "--rank", "1", "--h-level", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 1);
    let o = run(&["pims", "--monoid", "lexmax", "--bound", "5", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
    let o = run(&["pims", "--monoid", "lexmax", "--h-level", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn identical_config_identical_bytes() {
    for format in ["json", "csv", "text"] {
        let args = ["verify", "--suite", "exponential", "--samples", "150", "--seed", "42", "--format", format];
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn seed_from_environment() {
    let args = ["verify", "--suite", "axioms", "--samples", "50", "--format", "csv"];
    let flag = bin().args(args).args(["--seed", "9"]).output().unwrap();
    let env = bin().args(args).env("QUASIVAL_SEED", "9").output().unwrap();
    let default = run(&args);
    assert_eq!(flag.stdout, env.stdout);
    assert_ne!(flag.stdout, default.stdout);
    // The flag wins over the variable.
    let both = bin().args(args).args(["--seed", "9"]).env("QUASIVAL_SEED", "3").output().unwrap();
    assert_eq!(both.stdout, flag.stdout);
}
