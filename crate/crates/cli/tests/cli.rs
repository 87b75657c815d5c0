//! End-to-end tests of the binary: output formats and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-motives"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn compute_rank2_latex() {
    let out = run(&[
        "compute",
        "--rank",
        "2",
        "--n",
        "2",
        "--m",
        "3",
        "--variety",
        "irr",
        "--format",
        "latex",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "q - 2");
}

#[test]
fn compute_rank3_text() {
    let out = run(&["compute", "--rank", "3", "--n", "4", "--m", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "6q^4 + 24q^3 - 24q^2 - 108q + 162");
}

#[test]
fn compute_json_round_trips() {
    let out = run(&[
        "compute",
        "--rank",
        "2",
        "--n",
        "2",
        "--m",
        "3",
        "--variety",
        "total",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["variable"], "q");
    assert_eq!(value["coefficients"][0], "-2");
    assert_eq!(value["coefficients"][1], "2");
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        vec!["compute", "--rank", "2", "--n", "2", "--m", "4"],
        vec!["compute", "--rank", "5", "--n", "2", "--m", "3"],
        vec![
            "count", "--n", "2", "--m", "3", "--rank", "2", "--pi1", "bogus", "--pi2", "1^2",
        ],
        vec!["ffcount", "--n", "2", "--m", "3", "--q", "7"],
        vec!["breakdown", "--rank", "3", "--config", "99"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn count_single_pair() {
    let out = run(&[
        "count", "--n", "5", "--m", "7", "--rank", "3", "--pi1", "1^3", "--pi2", "1^3", "--method",
        "closed",
    ]);
    assert!(out.status.success());
    // (1/3)·C(4,2)·C(6,2) = 30
    assert!(stdout(&out).contains("= 30"), "got: {}", stdout(&out));
}

#[test]
fn ffcount_trefoil_passes() {
    let out = run(&["ffcount", "--n", "2", "--m", "3", "--q", "13"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("measured = 33672"), "got: {text}");
    assert!(text.contains("PASS"), "got: {text}");
    let out = run(&[
        "ffcount",
        "--n",
        "2",
        "--m",
        "3",
        "--q",
        "13",
        "--irreducible",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("measured = 24024"));
}

#[test]
fn breakdown_explain_prints_exponents() {
    let out = run(&["breakdown", "--rank", "2", "--explain"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[M_k^irr] = q - 2"), "got: {text}");
    assert!(text.contains("C_ij"), "got: {text}");
}

#[test]
fn verify_paper_suite_exits_zero() {
    let out = run(&["verify", "--suite", "paper"]);
    assert!(out.status.success(), "stdout: {}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS rank4-golden"), "got: {text}");
    assert!(!text.contains("FAIL"), "got: {text}");
}

#[test]
fn verify_oracle_suite_reports_field_limits() {
    // Two triples genuinely lack the required roots of unity; the suite
    // reports them as FAIL and the process exits 1.
    let out = run(&["verify", "--suite", "oracle"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("PASS ff-oracle-n2-m3-q13"), "got: {text}");
    assert!(text.contains("FAIL ff-oracle-n3-m4-q13"), "got: {text}");
    assert!(text.contains("FAIL ff-oracle-n2-m5-q11"), "got: {text}");
    assert!(text.contains("PASS counting-consistency"), "got: {text}");
}
