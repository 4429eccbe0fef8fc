use std::process::{Command, Output};

fn symai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symai"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = symai(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn ai_from_value_vector_and_table() {
    let out = stdout(&["ai", "--value-vector", "000111"]);
    assert!(out.contains("ai: 3\n"), "{out}");
    let out = stdout(&["ai", "--table", "96"]);
    assert!(out.contains("n: 3\n") && out.contains("ai: 1\n"), "{out}");
    let out = stdout(&["ai", "--table", "2", "--n", "1"]);
    assert!(out.contains("ai: 1\n"), "{out}");
    assert!(!symai(&["ai"]).status.success());
    assert!(!symai(&["ai", "--table", "xyz"]).status.success());
}

#[test]
fn convert_both_directions() {
    assert_eq!(
        stdout(&["convert", "--sanf", "011000"]),
        "value_vector: 011001\n"
    );
    assert_eq!(
        stdout(&["convert", "--value-vector", "0111100001"]),
        "sanf: 0111100000\n"
    );
}

#[test]
fn lemma4_listing() {
    let out = stdout(&["lemma4", "--i", "1"]);
    assert!(out.contains("sanf: 0100  value_vector: 0101"), "{out}");
    let out = stdout(&["lemma4", "--i", "4", "--all"]);
    assert!(out.contains("n: 9\n"), "{out}");
    assert!(!symai(&["lemma4", "--i", "0"]).status.success());
}

#[test]
fn gap_annihilator_output() {
    let out = stdout(&["gap-annihilator", "--n", "5", "--i", "1"]);
    let weights = out
        .lines()
        .find_map(|l| l.strip_prefix("support_weights: "))
        .unwrap();
    assert!(weights.split(',').all(|w| w == "2" || w == "4"), "{out}");
    assert!(!symai(&["gap-annihilator", "--n", "6", "--i", "1"])
        .status
        .success());
}

#[test]
fn theorem3_verdict_and_annihilator() {
    assert_eq!(
        stdout(&["theorem3", "--n", "5", "--sanf", "000110"]),
        "condition: true\n"
    );
    let out = stdout(&[
        "theorem3",
        "--n",
        "5",
        "--sanf",
        "010000",
        "--emit-annihilator",
    ]);
    assert!(out.starts_with("condition: false\n"), "{out}");
    assert!(out.contains("annihilator_degree: 1\n"), "{out}");
    assert!(!symai(&["theorem3", "--n", "6", "--sanf", "010000"])
        .status
        .success());
}

#[test]
fn survey_formats_and_out_file() {
    let csv = stdout(&["survey", "--n", "3", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 17);
    assert!(csv.starts_with(
        "n,value_vector,sanf,degree,weight,balanced,trivial_balanced,ai,theorem3_ok\n"
    ));

    let json = stdout(&["survey", "--n", "5", "--filter", "trivial-balanced"]);
    let records: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(records.as_array().unwrap().len(), 8);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    stdout(&[
        "survey",
        "--n",
        "4",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read_to_string(path).unwrap().lines().count(), 33);

    assert!(!symai(&["survey", "--n", "14"]).status.success());
}

#[test]
fn verify_exit_status() {
    let out = symai(&["verify", "--n", "7"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["lemma2_holds"], true);
    assert_eq!(report["theorem3_holds"], true);
    assert!(!symai(&["verify", "--n", "8"]).status.success());
}
