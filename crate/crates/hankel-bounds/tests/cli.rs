//! End-to-end tests for the command line binary.

use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hankel-bounds"))
}

fn tmp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("hankel-bounds-cli-{name}"))
}

#[test]
fn bound_reports_closed_forms() {
    let out = tmp("bound.json");
    let status = bin()
        .args(["bound", "--class", "convex", "--alpha", "2.0", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["bound_paper"].as_f64().unwrap(), 0.125);
    assert_eq!(doc["bound_corrected"].as_f64().unwrap(), 0.125);
    assert_eq!(doc["coincide_at_alpha_2"], Value::Bool(true));
    assert_eq!(doc["class"], "convex");
}

#[test]
fn bound_rejects_alpha_out_of_range() {
    let output = bin()
        .args(["bound", "--class", "starlike", "--alpha", "0.5"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("alpha must lie in [1,2]"), "stderr: {err}");
}

#[test]
fn hankel_computes_koebe_determinant() {
    let coeffs = tmp("koebe.json");
    std::fs::write(&coeffs, "[[1,0],[2,0],[3,0],[4,0]]").unwrap();
    let output = bin()
        .args(["hankel", "--q", "2", "--n", "2", "--coeffs"])
        .arg(&coeffs)
        .output()
        .unwrap();
    assert!(output.status.success());
    let doc: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(doc["abs"].as_f64().unwrap(), 1.0);
    assert_eq!(doc["re"].as_f64().unwrap(), -1.0);
}

#[test]
fn hankel_rejects_short_series() {
    let coeffs = tmp("short.json");
    std::fs::write(&coeffs, "[[1,0],[2,0]]").unwrap();
    let output = bin()
        .args(["hankel", "--q", "2", "--n", "2", "--coeffs"])
        .arg(&coeffs)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("need order >= 4"), "stderr: {err}");
}

#[test]
fn scan_emits_csv_with_header() {
    let out = tmp("scan.csv");
    let status = bin()
        .args([
            "scan", "--class", "starlike", "--steps", "5", "--samples", "200",
            "--format", "csv", "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "alpha,beta,bound_paper,bound_corrected,empirical_max,gap,verdict"
    );
    assert_eq!(lines.count(), 5);
}

#[test]
fn config_file_values_are_overridden_by_flags() {
    let cfg = tmp("override.cfg");
    std::fs::write(&cfg, "alpha = 1.0\nseed = 11\n").unwrap();
    let out = tmp("override.json");
    let status = bin()
        .args(["bound", "--class", "starlike", "--config"])
        .arg(&cfg)
        .args(["--alpha", "2.0", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["alpha"].as_f64().unwrap(), 2.0);
    assert_eq!(doc["bound_paper"].as_f64().unwrap(), 1.0);
}

#[test]
fn search_reports_maximizer() {
    let out = tmp("search.json");
    let status = bin()
        .args([
            "search", "--class", "convex", "--alpha", "2.0", "--grid-c", "41",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["command"], "search");
    let best = doc["results"]["best_value"].as_f64().unwrap();
    assert!((best - 0.125).abs() < 1e-3, "best {best}");
    assert_eq!(doc["results"]["exceeded_paper"], Value::Bool(false));
}
