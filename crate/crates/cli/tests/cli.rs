use std::process::{Command, Output};

use serde_json::Value;

fn g2color(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2color"))
        .args(args)
        .env_remove("G2COLOR_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = g2color(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn table_text_matches_fixture_lines() {
    let o = g2color(&["table", "--basis", "color-case3", "--sign-factor", "case3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("[e1,e11] = e13 - e14"), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(" = ")).count(), 91);
}

#[test]
fn table_json_shape() {
    let v = json(&["--json", "table", "--basis", "g2"]);
    assert_eq!(v["basis"], "g2");
    assert_eq!(v["sign_factor"], "zero");
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 91);
    for e in entries {
        assert!(e["left"].is_string() && e["right"].is_string());
        assert!(e["kind"] == "comm" || e["kind"] == "anticomm");
        for t in e["terms"].as_array().unwrap() {
            assert!(t["label"].is_string());
            assert!(t["coeff"].is_object());
        }
    }
}

#[test]
fn latex_table() {
    let o = g2color(&["table", "--basis", "cartan-weyl", "--format", "latex"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("\\begin{tabular}"));
    assert!(text.contains("$-3a_{12}$"));
}

#[test]
fn verify_all_passes() {
    let v = json(&["--json", "-q", "verify"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["failures"], 0);
    assert!(v["checks_run"].as_u64().unwrap() > 40_000);
}

#[test]
fn verify_reports_failure_with_status_1() {
    let o = g2color(&[
        "-q",
        "verify",
        "--suite",
        "jacobi",
        "--basis",
        "color-case1",
        "--sign-factor",
        "zero",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
}

#[test]
fn search_json_shape_and_count() {
    let v = json(&[
        "--json",
        "-q",
        "search",
        "--sign-factor",
        "case1",
        "--expect-count",
        "64",
    ]);
    assert_eq!(v["count"], 64);
    assert_eq!(v["gauge_fixed"], true);
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 64);
    let first = &sols[0];
    assert_eq!(first["flips"].as_array().unwrap().len(), 14);
    for e in first["epsilon"].as_array().unwrap() {
        let s = e["sign"].as_i64().unwrap();
        assert!(s == 1 || s == -1);
    }
}

#[test]
fn search_expect_count_mismatch_fails() {
    let o = g2color(&[
        "-q",
        "search",
        "--sign-factor",
        "identity",
        "--expect-count",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = g2color(&[
        "-q",
        "search",
        "--sign-factor",
        "identity",
        "--expect-count",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn search_is_deterministic_across_thread_counts() {
    let a = g2color(&[
        "--json",
        "-q",
        "--threads",
        "1",
        "search",
        "--sign-factor",
        "case2",
    ]);
    let b = g2color(&[
        "--json",
        "-q",
        "--sequential",
        "search",
        "--sign-factor",
        "case2",
    ]);
    let c = g2color(&["--json", "-q", "search", "--sign-factor", "case2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn seven_by_seven_search() {
    let v = json(&[
        "--json",
        "-q",
        "search",
        "--base",
        "g2-7x7",
        "--sign-factor",
        "z2z2",
    ]);
    assert_eq!(v["count"], 16);
}

#[test]
fn classify_json() {
    let v = json(&["--json", "classify"]);
    assert_eq!(v["n"], 3);
    assert_eq!(v["factors"], 64);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    assert_eq!(v["invariants_match_orbits"], true);
}

#[test]
fn octonions_json() {
    let v = json(&["--json", "octonions"]);
    assert_eq!(v["lines"].as_array().unwrap().len(), 7);
    assert_eq!(v["labels"].as_array().unwrap().len(), 7);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["table", "--basis", "nope"][..],
        &["table", "--sign-factor", "bogus"],
        &["verify", "--suite", "nope"],
        &["frobnicate"],
        &["--threads", "0", "classify"],
    ] {
        assert_eq!(g2color(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let o = g2color(&["--json", "--out", path.to_str().unwrap(), "table"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 91);
}
