//! The command-line front end: exit codes, report schema and determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apery-verify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn list_shows_the_registry() {
    let o = run(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for id in ["conj1", "conj2", "eqn-4-1", "TBP-0", "fe-G", "fe-F-y13", "dist-relations", "tail-bounds"] {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(id)), "{id} missing");
    }
    let o = run(&["list", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().len() >= 60);
}

#[test]
fn verify_single_id() {
    let o = run(&["verify", "conj2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn verify_glob_as_json() {
    let o = run(&["--format", "json", "verify", "TBP-*", "--precision-bits", "192"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for r in reports {
        for key in ["id", "paper_ref", "status", "residual_log10", "precision_bits", "elapsed_ms"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["status"], "PASS");
        assert_eq!(r["precision_bits"], 192);
    }
}

#[test]
fn reports_are_deterministic() {
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let args = ["--format", "json", "--precision-bits", "192", "verify", "inversion"];
    assert_eq!(strip(run(&args)), strip(run(&args)));
    let args = ["--format", "json", "--parallel", "verify", "fe-*"];
    assert_eq!(strip(run(&args)), strip(run(&args)));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "zz*"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["check-fe", &data("G.fe")]).status.code(), Some(0));
    assert_eq!(run(&["check-fe", &data("control.fe")]).status.code(), Some(1));
    assert_eq!(run(&["check-fe", "/nonexistent.fe"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "nope"]).status.code(), Some(2));
}

#[test]
fn check_fe_json() {
    let o = run(&["--format", "json", "check-fe", &data("control.fe")]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["zero"], false);
    assert_eq!(v["m"], 3);
    assert!(!v["components"].as_array().unwrap().is_empty());
}

#[test]
fn eval_functions() {
    let o = run(&["--digits", "30", "eval", "const", "ZETA3"]);
    assert!(stdout(&o).starts_with("1.20205690315959428539973816151"));
    let o = run(&["--digits", "30", "eval", "li", "2", "0.5"]);
    assert!(stdout(&o).starts_with("5.82240526465012505902656320159"), "{}", stdout(&o));
    // Catalan's constant as Im Li_2(i)
    let o = run(&["--digits", "20", "eval", "li", "2", "i"]);
    assert!(stdout(&o).contains("+ 9.1596559417721901505"), "{}", stdout(&o));
    let o = run(&["--digits", "25", "eval", "d_tilde", "3", "-1"]);
    assert!(stdout(&o).starts_with("-9.01542677369695714049803621"), "{}", stdout(&o));
    let o = run(&["eval", "lsc", "4", "1", "1.0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("error estimate"));
    let o = run(&["eval", "apery_sum", "CONJ1_LHS", "30"]);
    assert!(stdout(&o).starts_with("16.828796644234319995596334261"), "{}", stdout(&o));
    assert_eq!(run(&["eval", "li", "2"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "li", "7", "0.5"]).status.code(), Some(2));
}
