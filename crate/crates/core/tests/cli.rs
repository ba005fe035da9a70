use std::process::Command;

use rgc_core::report::{from_json, AnalysisReport};

fn rgc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rgc")).args(args).env("RGC_THREADS", "2").output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

#[test]
fn analyze_spinor() {
    let dir = std::env::temp_dir().join(format!("rgc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json = dir.join("b3.json");
    let dot = dir.join("b3.dot");
    let (code, out, _) = rgc(&["analyze", "B3", "w3", "--json", json.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("orbits: 4"));
    assert!(out.contains("X normal: yes") && out.contains("X smooth: yes"));
    let r: AnalysisReport = from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(r.schema, "rgc/1");
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn analyze_g2_short() {
    let (code, out, _) = rgc(&["analyze", "G2", "w2"]);
    assert_eq!(code, 0);
    assert!(out.contains("normal: no") && out.contains("missing"));
}

#[test]
fn deterministic_output() {
    let a = rgc(&["analyze", "C2", "3*w1,2*w2"]).1;
    let b = rgc(&["analyze", "C2", "3*w1,2*w2"]).1;
    assert_eq!(a, b);
}

#[test]
fn input_errors_exit_3() {
    assert_eq!(rgc(&["analyze", "Q7", "w1"]).0, 3);
    assert_eq!(rgc(&["analyze", "B3", "w9"]).0, 3);
    assert_eq!(rgc(&["analyze", "A2", "w1,w1"]).0, 3);
    assert_eq!(rgc(&["table", "nonsense"]).0, 3);
}

#[test]
fn heavy_scope_needs_flag() {
    let (code, _, err) = rgc(&["table", "heavy"]);
    assert_eq!(code, 2);
    assert!(err.contains("--allow-heavy"));
}

#[test]
fn low_cap_reports_unknown_or_witness() {
    // a capped search can still find a witness; Unknown exits with 2
    let (code, out, _) = rgc(&["analyze", "C3", "w3", "--cap", "1"]);
    assert!(code == 0 || code == 2);
    assert!(out.contains("capped search") || out.contains("complete search"));
}

#[test]
fn table_exceptional() {
    let (code, out, _) = rgc(&["table", "exceptional-fg"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("6 rows, 6 passed, 0 failed"));
}

#[test]
fn tensor_and_branch() {
    let (code, out, _) = rgc(&["tensor", "A2", "w1", "w2"]);
    assert_eq!(code, 0);
    assert!(out.contains("V(w1+w2)") && out.contains("V(0)"));
    let (code, out, _) = rgc(&["branch", "B3", "w3", "w3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("L = A2+T1"));
    assert_eq!(out.lines().count(), 5);
}
