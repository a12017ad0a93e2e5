//! Binary-level tests: job grammar, exit codes, report determinism, and the
//! --json flag.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn resint() -> Command {
    Command::new(env!("CARGO_BIN_EXE_resint"))
}

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf()
}

fn job(name: &str) -> PathBuf {
    repo_root().join("jobs").join(name)
}

fn run(args: &[&str]) -> Output {
    resint().args(args).output().expect("binary runs")
}

#[test]
fn quotient_of_the_link_reports_height_two() {
    let out = run(&["quotient", job("link_2x3.job").to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["height"], 2);
    assert_eq!(value["is_unit"], false);
}

#[test]
fn residual_report_carries_the_spec_fields() {
    let out = run(&["residual", job("link_2x3.job").to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in [
        "ideal_hashes",
        "s",
        "g",
        "sigma_a",
        "beg_I_mod_a",
        "flags",
        "reg_bound",
        "reg_actual",
        "tight",
        "cm",
        "canonical_match",
    ] {
        assert!(value.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(value["reg_bound"], 0);
    assert_eq!(value["tight"], true);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let path = job("gen6_s3.job");
    let a = run(&["residual", path.to_str().unwrap()]);
    let b = run(&["residual", path.to_str().unwrap()]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join("resint-test-json");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("beta.json");
    let out = run(&[
        "beta-table",
        "--m",
        "4",
        "--t",
        "6",
        "--json",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let file = std::fs::read(&out_path).unwrap();
    assert_eq!(out.stdout, file);
}

#[test]
fn exit_code_one_on_parse_errors() {
    let dir = std::env::temp_dir().join("resint-test-badjob");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.job");
    std::fs::write(&path, "ring x,y\nideal I = x ++ y\n").unwrap();
    let out = run(&["quotient", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    // Unknown variable in an otherwise fine file is also a parse failure.
    std::fs::write(&path, "ring x,y\nideal I = w\nideal a = w\n").unwrap();
    let out = run(&["quotient", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_code_two_on_hypothesis_failure() {
    let dir = std::env::temp_dir().join("resint-test-hyp");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h3.job");
    std::fs::write(
        &path,
        "field Q\nring x,y,z\nideal I = x, y, z\nideal a = x, y, z\n",
    )
    .unwrap();
    let out = run(&["en", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["kind"], "hypothesis-failure");
}

#[test]
fn exit_code_three_on_budget_exhaustion_with_truncation_report() {
    let out = run(&[
        "quotient",
        job("res3_2x3.job").to_str().unwrap(),
        "--budget",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["truncated"], true);
    assert_eq!(value["kind"], "budget-exceeded");
}

#[test]
fn field_override_is_respected() {
    let out = run(&[
        "quotient",
        job("link_2x3.job").to_str().unwrap(),
        "--field",
        "Q",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["job"]["field"], "Q");
    assert_eq!(value["height"], 2);
}

#[test]
fn corpus_summary_passes() {
    let out = run(&["corpus"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["pass"], true);
    assert_eq!(value["height_two"]["pass"], true);
    assert_eq!(value["canonical_module"]["pass"], true);
}
