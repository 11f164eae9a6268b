use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chevalley"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("chevalley-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn unit_vector(n: usize) -> String {
    let mut v = vec![0; n];
    v[0] = 1;
    serde_json::to_string(&v).unwrap()
}

#[test]
fn diagram_json_has_27_nodes() {
    let j = stdout_json(&run(&["diagram", "--rep", "E6:w1", "--format", "json"]));
    assert_eq!(j["nodes"].as_array().unwrap().len(), 27);
    let dot = run(&["diagram", "--rep", "E7:w7", "--format", "dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("digraph"));
}

#[test]
fn roots_of_e6() {
    let j = stdout_json(&run(&["roots", "--type", "E6"]));
    assert_eq!(j["count"], 72);
    let j = stdout_json(&run(&["roots", "--subsystem", "A1+D6@E7", "--positive"]));
    assert_eq!(j["count"], 31);
}

#[test]
fn highest_weight_vector_needs_no_letters() {
    let v = scratch("mu.json", &unit_vector(27));
    let j = stdout_json(&run(&["reduce", "--rep", "E6:w1", "--ring", "Z/360", "--in", v.to_str().unwrap()]));
    assert_eq!(j["word"], Value::Array(vec![]));
}

#[test]
fn reduced_words_replay_through_elem() {
    let out = scratch("reduced.json", "");
    let status = run(&[
        "reduce", "--rep", "E6:w1", "--ring", "Z", "--random", "--seed", "11", "--trace", "--out",
        out.to_str().unwrap(),
    ]);
    assert!(status.status.success());
    let reduced: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(reduced["trace"].as_array().unwrap().len(), 5);
    let input = scratch("input.json", &reduced["input"].to_string());
    let j = stdout_json(&run(&[
        "elem", "--rep", "E6:w1", "--ring", "Z", "--in", out.to_str().unwrap(), "--apply",
        input.to_str().unwrap(),
    ]));
    assert_eq!(j["image"][0], "1");
    assert_eq!(j["image"], reduced["image"]);
}

#[test]
fn seeded_runs_are_byte_identical() {
    let args = ["reduce", "--rep", "D5:w1", "--ring", "Z/360", "--random", "--seed", "5", "--minimize"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn decompose_accepts_elem_output() {
    let g = run(&["elem", "--rep", "E6:w1", "--ring", "Z/7", "--random", "4", "--seed", "2"]);
    let g = scratch("g.json", &String::from_utf8(g.stdout).unwrap());
    let out = run(&["decompose", "--rep", "E6:w1", "--pivot", "1", "--in", g.to_str().unwrap()]);
    let code = out.status.code();
    if code == Some(0) {
        let j: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(j["verified"], Value::Bool(true));
    } else {
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["error"]["kind"], "NonInvertibleCorner");
        assert_eq!(code, Some(1));
    }
}

#[test]
fn domain_errors_exit_one() {
    let v = scratch("zero.json", &serde_json::to_string(&[0; 27]).unwrap());
    let out = run(&["reduce", "--rep", "E6:w1", "--ring", "Z", "--in", v.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "NotUnimodular");

    let a1 = scratch("z.json", r#"[[3, 1], [5, 2]]"#);
    let out = run(&["decompose", "--rep", "A1:w1", "--ring", "Z", "--in", a1.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "NonInvertibleCorner");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["diagram", "--rep", "E8:w1"],
        vec!["reduce", "--rep", "E6:w1", "--ring", "Q", "--random"],
        vec!["frobnicate"],
        vec!["decompose", "--rep", "E6:w1", "--pivot", "2", "--ring", "Z", "--random", "3"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert!(err["error"]["kind"].is_string());
    }
}

#[test]
fn conjugate_emits_a_verified_certificate() {
    let j = stdout_json(&run(&["conjugate", "--root", "[1,1,1,1,0,0,0]", "--certificate"]));
    assert_eq!(j["verified"], Value::Bool(true));
    assert!(!j["weyl_word"].as_array().unwrap().is_empty());
}

#[test]
fn identity_suite_passes() {
    let j = stdout_json(&run(&["verify", "--suite", "paper", "--jobs", "4"]));
    let checks = j.as_array().unwrap();
    assert!(checks.len() >= 9);
    assert!(checks.iter().all(|c| c["status"] == "pass"), "{j:#}");
}
