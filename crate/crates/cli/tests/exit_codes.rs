use std::path::PathBuf;
use std::process::{Command, Output};

use dingtri_cli::commands::{verify_status, Record};
use serde_json::{json, Value};

fn instance(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../instances")
        .join(format!("{name}.json"));
    p.to_str().unwrap().to_owned()
}

fn scratch(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn dingtri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dingtri")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    dingtri(args).status.code().unwrap()
}

const NON_ASSOCIATIVE: &str = r#"{
    "field": 2,
    "algebras": { "X": { "dim": 3, "one": [1, 0, 0], "structure": [
        [[1,0,0],[0,1,0],[0,0,1]],
        [[0,1,0],[0,0,1],[0,0,0]],
        [[0,0,1],[0,1,0],[0,0,0]]
    ] } }
}"#;

#[test]
fn validate() {
    for name in ["dual_numbers", "t_of_r", "t2", "mixed"] {
        assert_eq!(code(&["validate", &instance(name)]), 0, "{name}");
    }
    let out = dingtri(&["validate", &scratch("nonassoc.json", NON_ASSOCIATIVE)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(e1 e1) e"));

    assert_eq!(code(&["validate", &scratch("malformed.json", "{ \"field\": ")]), 3);
    assert_eq!(code(&["validate", "/nonexistent/instance.json"]), 3);

    let dangling = r#"{ "field": 2, "algebras": { "R": { "builtin": "dual_numbers" } },
        "modules": { "D": { "dual": "missing" } } }"#;
    assert_eq!(code(&["validate", &scratch("dangling.json", dangling)]), 4);
}

#[test]
fn verify_status_codes() {
    assert_eq!(code(&["verify", &instance("t_of_r"), "--theorem", "3.4"]), 0);
    // no triples to check
    assert_eq!(code(&["verify", &instance("dual_numbers"), "--theorem", "3.4"]), 4);
    // cor3.5 needs a ring of the form T(R), which the mixed ring is not
    assert_eq!(code(&["verify", &instance("mixed"), "--theorem", "cor3.5"]), 5);
    assert_eq!(code(&["verify", &instance("t_of_r"), "--theorem", "9.9"]), 2);
}

fn record(verdict: &str) -> Record {
    Record {
        task: "verify 3.4".into(),
        instance: "x".into(),
        verdict: Value::from(verdict),
        hypothesis_ledger: Vec::new(),
        evidence: json!({}),
        timings: None,
    }
}

#[test]
fn status_of_records() {
    assert_eq!(verify_status(&[record("pass"), record("inconclusive")]), 0);
    assert_eq!(verify_status(&[record("inconclusive"), record("inconclusive")]), 5);
    assert_eq!(
        verify_status(&[record("pass"), record("fail"), record("inconclusive")]),
        1
    );
}

#[test]
fn empty_fuzz_campaign() {
    let out = dingtri(&["fuzz", &instance("t_of_r"), "--seed", "1", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn records_are_json_lines() {
    let out = dingtri(&["fuzz", &instance("t2"), "--seed", "3", "--count", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 20);
    for l in &lines {
        for key in [
            "task",
            "instance",
            "verdict",
            "hypothesis_ledger",
            "evidence",
            "timings",
        ] {
            assert!(l.get(key).is_some(), "{key} missing in {l}");
        }
        assert!(l["timings"].is_null());
    }
    let timed = dingtri(&["analyze", &instance("t2"), "--timings"]);
    let first: Value = serde_json::from_slice(timed.stdout.split(|&b| b == b'\n').next().unwrap()).unwrap();
    assert!(first["timings"].is_object());
}
