use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use qch::cli::validate_report;
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn qch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qch")).args(args).output().expect("binary runs")
}

fn qch_report(args: &[&str]) -> (i32, String, Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut all: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_owned();
    all.extend(["--report", &p]);
    let out = qch(&all);
    let text = std::fs::read_to_string(&path).expect("report written");
    let v: Value = serde_json::from_str(&text).unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), v)
}

fn strip_seconds(v: &mut Value) {
    match v {
        Value::Object(o) => {
            o.remove("seconds");
            o.values_mut().for_each(strip_seconds);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_seconds),
        _ => {}
    }
}

#[test]
fn flagship_run_passes() {
    let (code, stdout, v) = qch_report(&["--m", "1", "--n", "1", "--pair", "rtt", "--q", "symbolic", "--tasks", "ch"]);
    assert_eq!(code, 0, "{stdout}");
    validate_report(&v).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["tasks"][0]["details"]["degree"], 3);
    assert!(stdout.contains("verdict: PASS"));
}

#[test]
fn reflection_pair_runs_the_full_chain() {
    let (code, stdout, v) = qch_report(&["--m", "1", "--n", "1", "--pair", "rea", "--q", "symbolic", "--tasks", "axioms,units,glmn,ch,telescope"]);
    assert_eq!(code, 0, "{stdout}");
    validate_report(&v).unwrap();
    let names: Vec<&str> = v["tasks"].as_array().unwrap().iter().map(|t| t["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["axioms", "units", "glmn", "ch", "telescope"]);
}

#[test]
fn broken_r_matrix_fails_the_axioms() {
    let rfile = data("broken.json");
    let (code, stdout, v) = qch_report(&["--m", "1", "--n", "1", "--pair", "custom", "--rfile", rfile.to_str().unwrap(), "--tasks", "axioms"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("yangBaxter:false"), "{stdout}");
    validate_report(&v).unwrap();
    assert_eq!(v["tasks"][0]["details"]["yangBaxter"], false);
    assert_eq!(v["verdict"], false);
}

#[test]
fn later_tasks_are_skipped_after_axiom_failure() {
    let rfile = data("broken.json");
    let (code, _, v) = qch_report(&["--m", "1", "--n", "1", "--pair", "custom", "--rfile", rfile.to_str().unwrap(), "--tasks", "ch"]);
    assert_eq!(code, 1);
    validate_report(&v).unwrap();
    assert_eq!(v["tasks"][0]["name"], "axioms");
    assert_eq!(v["tasks"][1]["status"], "skipped");
}

#[test]
fn custom_files_reproduce_builtin_pair() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    std::fs::write(&path, qch::rmatrix::to_json(&qch::rmatrix::dj_glmn(1, 1).unwrap())).unwrap();
    let out = qch(&["--m", "1", "--n", "1", "--pair", "custom", "--rfile", path.to_str().unwrap(), "--tasks", "axioms,ch"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invalid_input_exits_with_two() {
    let cases: [&[&str]; 6] = [
        &["--m", "1", "--n", "1", "--q", "0"],
        &["--m", "1", "--n", "1", "--q", "one"],
        &["--m", "0", "--n", "0"],
        &["--m", "1", "--n", "1", "--tasks", "ch", "--arity-bound", "3"],
        &["--m", "1", "--n", "1", "--pair", "custom"],
        &["--m", "1", "--n", "1", "--tasks", "nonsense"],
    ];
    for args in cases {
        assert_eq!(qch(args).status.code(), Some(2), "{args:?}");
    }
    let missing = qch(&["--m", "1", "--n", "1", "--pair", "custom", "--rfile", "/nonexistent.json"]);
    assert_eq!(missing.status.code(), Some(2));
    let wrong_size = qch(&["--m", "2", "--n", "1", "--pair", "custom", "--rfile", data("broken.json").to_str().unwrap(), "--q", "2"]);
    assert_eq!(wrong_size.status.code(), Some(2));
}

#[test]
fn symbolic_three_dimensional_runs_are_gated() {
    assert_eq!(qch(&["--m", "2", "--n", "1", "--tasks", "ch"]).status.code(), Some(2));
    // the axioms alone are cheap and not gated
    assert_eq!(qch(&["--m", "2", "--n", "1", "--tasks", "axioms"]).status.code(), Some(0));
    assert_eq!(qch(&["--m", "2", "--n", "1", "--q", "6/5", "--tasks", "ch"]).status.code(), Some(0));
}

#[test]
fn reports_are_deterministic_modulo_timings() {
    let args = ["--m", "1", "--n", "1", "--pair", "rtt", "--tasks", "axioms,schur,ch,rect", "--seed", "3"];
    let (c1, _, mut a) = qch_report(&args);
    let (c2, _, mut b) = qch_report(&args);
    assert_eq!((c1, c2), (0, 0));
    strip_seconds(&mut a);
    strip_seconds(&mut b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn schema_validation_rejects_tampering() {
    let (_, _, v) = qch_report(&["--m", "1", "--n", "1", "--tasks", "axioms"]);
    validate_report(&v).unwrap();
    let mut bad = v.clone();
    bad["verdict"] = Value::Bool(false);
    assert!(validate_report(&bad).is_err());
    let mut bad = v.clone();
    bad["schema"] = Value::String("other".into());
    assert!(validate_report(&bad).is_err());
    let mut bad = v.clone();
    bad["tasks"][0]["status"] = Value::String("fail".into());
    assert!(validate_report(&bad).is_err());
    let mut bad = v;
    bad.as_object_mut().unwrap().remove("environment");
    assert!(validate_report(&bad).is_err());
}
