use std::process::Command;

use serde_json::Value;
use symmetroid_core::verify::validate_report;

fn symmetroid(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symmetroid"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut v = args.to_vec();
    v.push("--json");
    let (code, stdout, _) = symmetroid(&v);
    let doc = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("not json ({e}): {stdout}"));
    (code, doc)
}

fn scratch_dir(tag: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("symmetroid-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn schubert_integral() {
    let (code, out, _) = symmetroid(&["schubert", "--ring", "g(3,5)", "--integrate", "s2*s1^4"]);
    assert_eq!((code, out.trim()), (0, "2"));
    let (code, doc) = json(&["schubert", "--ring", "G(2,4)", "--integrate", "s1^4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["integral"], "2");
}

#[test]
fn schubert_multiply_round_trips() {
    let (code, doc) = json(&["schubert", "--ring", "g(2,4)", "--multiply", "s1", "s1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["expr"], "s2 + s1_1");
    let class = symmetroid_core::chow::class_from_json(&doc["product"]).unwrap();
    assert_eq!(symmetroid_core::chow::class_to_json(&class), doc["product"]);
}

#[test]
fn expression_errors_are_input_errors() {
    let (code, _, err) = symmetroid(&["schubert", "--ring", "g(3,5)", "--integrate", "s1^^2"]);
    assert_eq!(code, 3);
    assert!(err.contains("offset 3"), "{err}");
    assert!(!err.contains("panicked"));
    let (code, doc) = json(&["schubert", "--ring", "g(3,5)", "--integrate", "s1"]);
    assert_eq!(code, 3);
    assert_eq!(doc["error"]["kind"], "input");
    let (code, _, _) = symmetroid(&["schubert", "--ring", "p(4)", "--integrate", "s1"]);
    assert_eq!(code, 3);
}

#[test]
fn bott_trivial_bundle() {
    let (code, doc) = json(&["bott", "--n", "5", "--r", "3", "--beta", "0,0,0", "--gamma", "0,0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["kind"], "cohomology");
    assert_eq!(doc["degree"], 0);
    assert_eq!(doc["dimension"], 1);
}

#[test]
fn bott_twist_and_file_input() {
    let (code, doc) = json(&[
        "bott", "--n", "3", "--r", "1", "--beta", "0", "--gamma", "0,-2", "--twist", "-3",
    ]);
    assert_eq!(code, 0);
    assert_eq!((doc["degree"].as_u64(), doc["dimension"].as_u64()), (Some(1), Some(3)));
    let dir = scratch_dir("bott");
    let path = dir.join("input.json");
    std::fs::write(&path, r#"{"n": 3, "r": 1, "beta": [-1], "gamma": [0, 0]}"#).unwrap();
    let (code, doc) = json(&["bott", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["kind"], "all_vanish");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn bott_bad_shape() {
    let (code, _, _) = symmetroid(&["bott", "--n", "5", "--r", "3", "--beta", "0,0", "--gamma", "0,0"]);
    assert_eq!(code, 3);
    let (code, _, _) = symmetroid(&["bott", "--n", "5", "--r", "3", "--beta", "0,x,0", "--gamma", "0,0"]);
    assert_eq!(code, 3);
}

#[test]
fn chern_identities() {
    let (code, doc) = json(&["chern", "--op", "sym2", "--rank", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["classes"]["c1"], "3*c1");
    assert_eq!(doc["classes"]["c2"], "2*c1^2 + 4*c2");
    assert_eq!(doc["classes"]["c3"], "4*c1*c2");
    let (_, doc) = json(&["chern", "--op", "segre", "--rank", "2", "--degree", "2"]);
    assert_eq!(doc["classes"]["s2"], "c1^2 - c2");
    let (_, doc) = json(&["chern", "--op", "tensor", "--rank", "1", "--other-rank", "2"]);
    assert_eq!(doc["classes"]["c1"], "2*c1 + d1");
    let (code, _, _) = symmetroid(&["chern", "--op", "cube", "--rank", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn pencil_symmetroid_and_scans() {
    let (code, doc) = json(&["pencil", "--symmetroid"]);
    assert_eq!(code, 0);
    assert_eq!(doc["degree"], 5);
    let (code, doc) = json(&["pencil", "--scan-rank3", "--prime", "31"]);
    assert_eq!((code, doc["count"].as_u64()), (0, Some(0)));
    let (code, _, _) = symmetroid(&["pencil", "--scan-base", "--prime", "33"]);
    assert_eq!(code, 3);
    let (code, _, _) = symmetroid(&["pencil", "--scan-base"]);
    assert_eq!(code, 2);
}

#[test]
fn pencil_nodes() {
    let (code, doc) = json(&["pencil", "--nodes", "--z", "-1,0,0,1,2", "--w", "-1,2,0,-1,0"]);
    assert_eq!(code, 0);
    let pts = doc["singular_points"].as_array().unwrap();
    assert_eq!(pts.len(), 1);
    assert_eq!(pts[0]["points"], 3);
    assert_eq!(pts[0]["node"], true);
    assert_eq!(pts[0]["rank"], 4);
    assert_eq!(doc["genus"]["geometric_genus"], 3);
}

#[test]
fn pencil_missing_file() {
    let (code, _, err) = symmetroid(&["pencil", "--input", "/nonexistent/pencil.json", "--symmetroid"]);
    assert_eq!(code, 3);
    assert!(err.starts_with("error:"));
}

#[test]
fn verify_all_json_validates() {
    let (code, doc) = json(&["verify", "--all"]);
    assert_eq!(code, 0);
    validate_report(&doc).unwrap();
    assert!(doc["checks"].as_array().unwrap().len() >= 9);
    assert_eq!(doc["summary"]["fail"], 0);
}

#[test]
fn verify_human_agrees_with_json() {
    let (code, out, _) = symmetroid(&["verify", "--check", "check_brauer", "check_c1c2"]);
    assert_eq!(code, 0);
    assert!(out.lines().next().unwrap().starts_with("check_brauer"));
    assert!(out.contains("pass 2, evidence 0, fail 0"));
}

#[test]
fn verify_unknown_check() {
    let (code, doc) = json(&["verify", "--check", "nope"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "usage");
}

#[test]
fn verify_perturbed_pencil_fails_cleanly() {
    let mut doc: Value = serde_json::from_str(symmetroid_core::pencil::EXAMPLE_PENCIL_JSON).unwrap();
    doc["matrices"][0][0][0] = Value::String("7".into());
    let dir = scratch_dir("perturbed");
    let path = dir.join("pencil.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let (code, report) = json(&[
        "verify",
        "--check",
        "check_example_pencil",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    validate_report(&report).unwrap();
    assert_eq!(report["checks"][0]["status"], "FAIL");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors() {
    assert_eq!(symmetroid(&[]).0, 2);
    assert_eq!(symmetroid(&["bogus"]).0, 2);
    assert_eq!(symmetroid(&["schubert", "--ring", "g(2,4)"]).0, 2);
    let (code, out, _) = symmetroid(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
