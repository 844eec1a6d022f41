use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn relcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relcone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, value: &Value) -> String {
    let path = dir.path().join(name);
    fs::write(&path, value.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

/// n = 3 vector document in standard subset order.
fn vector3(values: [Value; 7]) -> Value {
    let parties = [vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]];
    let entries: Vec<Value> = parties
        .iter()
        .zip(values)
        .map(|(p, v)| json!({ "parties": p, "value": v }))
        .collect();
    json!({ "n": 3, "entries": entries })
}

#[test]
fn check_accepts_member_and_rejects_violation() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "good.json", &vector3([json!(1), json!(0), json!(0), json!(1), json!(1), json!(1), json!("inf")]));
    let out = relcone(&["check", &good]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["member"], json!(true));

    let bad = write(&dir, "bad.json", &vector3([json!(2), json!(0), json!(0), json!(1), json!(1), json!(1), json!(1)]));
    let out = relcone(&["check", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["member"], json!(false));
    assert!(!report["violations"].as_array().unwrap().is_empty());
}

#[test]
fn decompose_lists_nested_terms() {
    let dir = TempDir::new().unwrap();
    let v = write(&dir, "v.json", &vector3([json!(0.5), json!(0), json!(0), json!(0.5), json!(0.5), json!(0), json!(2)]));
    let out = relcone(&["decompose", &v]);
    assert_eq!(out.status.code(), Some(0));
    let terms = stdout_json(&out)["terms"].as_array().unwrap().clone();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["weight"].as_f64(), Some(1.5));
    assert_eq!(terms[1]["weight"].as_f64(), Some(0.5));
}

#[test]
fn decompose_non_member_exits_one_with_report() {
    let dir = TempDir::new().unwrap();
    let v = write(&dir, "v.json", &vector3([json!(3), json!(0), json!(0), json!(1), json!(1), json!(1), json!(1)]));
    let out = relcone(&["decompose", &v]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr_json(&out);
    assert_eq!(err["error"], json!("not_a_member"));
    assert_eq!(err["membership"]["member"], json!(false));
}

#[test]
fn synthesize_then_verify_and_relent() {
    let dir = TempDir::new().unwrap();
    let v = write(&dir, "v.json", &vector3([json!(0.5), json!(0), json!(0), json!(0.5), json!(0.5), json!(0), json!(2)]));
    let pair = dir.path().join("pair.json");
    let pair_s = pair.to_string_lossy().into_owned();
    let out = relcone(&["synthesize", &v, "-o", &pair_s]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout_json(&out)["max_abs_error"].as_f64().unwrap() <= 1e-6);
    assert!(Path::new(&pair).exists());

    let out = relcone(&["verify", &v, &pair_s]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["passed"], json!(true));

    let out = relcone(&["relent", &pair_s]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    let abc = doc["entries"][6]["value"].as_f64().unwrap();
    assert!((abc - 2.0).abs() <= 1e-9);
}

#[test]
fn verify_mismatch_exits_one() {
    let dir = TempDir::new().unwrap();
    let v = write(&dir, "v.json", &vector3([json!(0), json!(0), json!(0), json!(0), json!(0), json!(0), json!(1)]));
    let other = write(&dir, "w.json", &vector3([json!(0), json!(0), json!(0), json!(0), json!(0), json!(0), json!(2)]));
    let pair = dir.path().join("pair.json").to_string_lossy().into_owned();
    assert_eq!(relcone(&["synthesize", &v, "-o", &pair]).status.code(), Some(0));
    let out = relcone(&["verify", &other, &pair]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["passed"], json!(false));
}

#[test]
fn relent_reads_hand_written_pair() {
    let dir = TempDir::new().unwrap();
    let pair = json!({
        "n": 1,
        "alphabet_sizes": [2],
        "rho": [{ "symbols": [0], "p": { "num": "1", "den": "1" } }],
        "sigma": [
            { "symbols": [0], "p": { "num": "1", "den": "2" } },
            { "symbols": [[1]], "p": { "num": "1", "den": "2" } }
        ]
    });
    let path = write(&dir, "pair.json", &pair);
    let out = relcone(&["relent", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["entries"][0]["value"].as_f64(), Some(1.0));
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("junk.json");
    fs::write(&path, "{ not json").unwrap();
    let out = relcone(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], json!("malformed_json"));

    let short = write(&dir, "short.json", &json!({ "n": 2, "entries": [{ "parties": [1], "value": 1 }] }));
    let out = relcone(&["check", &short]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], json!("dimension_mismatch"));

    let out = relcone(&["check", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rays_and_demos_print() {
    let out = relcone(&["rays", "--n", "3", "--classes"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("8 classes, 18 up-sets\n"));

    let out = relcone(&["rays", "--n", "4"]);
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("166 up-sets\n"));

    for which in ["example5", "example6"] {
        let out = relcone(&["demo", which]);
        assert_eq!(out.status.code(), Some(0));
        assert!(String::from_utf8_lossy(&out.stdout).contains("relative-entropy vector"));
    }

    assert_eq!(relcone(&["rays", "--n", "9"]).status.code(), Some(2));
}
