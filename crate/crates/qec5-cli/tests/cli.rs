//! End-to-end tests of the `qec5` binary: output schemas, determinism,
//! exit codes, and the noise flag surface.

use std::process::{Command, Output};

use serde_json::Value;

fn qec5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qec5"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = qec5(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn codewords_lists_signed_kets() {
    let v = json(&["codewords"]);
    let kets0: Vec<&str> = v["zero_l"]["kets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|k| k.as_str().unwrap())
        .collect();
    assert_eq!(kets0.len(), 8);
    assert!(kets0.contains(&"+|00000⟩"));
    assert!(kets0.contains(&"-|10111⟩"));
    let kets1: Vec<&str> = v["one_l"]["kets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|k| k.as_str().unwrap())
        .collect();
    assert!(kets1.contains(&"-|00110⟩"));
    assert_eq!(v["verified"], Value::Bool(true));
    assert!(v["overlap"].as_f64().unwrap() < 1e-12);
}

#[test]
fn syndrome_table_shape() {
    let v = json(&["syndrome-table"]);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 16);
    assert_eq!(entries[0]["syndrome"], "0000");
    assert_eq!(entries[0]["condition"], "E");
    assert_eq!(entries[0]["correction"], "I");
    let syndrome_of = |label: &str| {
        entries.iter().find(|e| e["condition"] == label).unwrap()["syndrome"]
            .as_str()
            .unwrap()
            .to_string()
    };
    assert_ne!(syndrome_of("B1"), syndrome_of("S1"));
    // all 16 syndromes distinct
    let mut syndromes: Vec<String> = entries
        .iter()
        .map(|e| e["syndrome"].as_str().unwrap().to_string())
        .collect();
    syndromes.sort();
    syndromes.dedup();
    assert_eq!(syndromes.len(), 16);
}

#[test]
fn run_reports_perfect_fidelity_noiseless() {
    for (gate, error) in [("not", "BS4"), ("had", "B5"), ("id", "E")] {
        let v = json(&["run", "--gate", gate, "--error", error]);
        assert!(
            (v["fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-9,
            "gate {gate} error {error}"
        );
        assert_eq!(v["gate"], gate);
        assert_eq!(v["error"], error);
        assert!(v["syndrome"].is_string());
        assert_eq!(v["chi_basis"], serde_json::json!(["E", "X", "-iY", "Z"]));
        // chi matrices are 4×4 arrays of [re, im] pairs
        assert_eq!(v["chi_effective"].as_array().unwrap().len(), 4);
        assert_eq!(v["chi_effective"][0].as_array().unwrap().len(), 4);
        assert_eq!(v["chi_effective"][0][0].as_array().unwrap().len(), 2);
    }
}

#[test]
fn invalid_labels_are_usage_errors() {
    let out = qec5(&["run", "--gate", "nand", "--error", "E"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qec5(&["run", "--gate", "id", "--error", "B9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn codewords_has_no_csv_form() {
    let out = qec5(&["codewords", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec![
            "run",
            "--gate",
            "had",
            "--error",
            "S3",
            "--dephasing-p",
            "0.03",
        ],
        vec!["codewords"],
        vec!["syndrome-table"],
        vec!["baseline"],
    ] {
        let a = qec5(&args);
        let b = qec5(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
    }
}

#[test]
fn sweep_noiseless_all_ones() {
    let v = json(&["sweep"]);
    let experiments = v["experiments"].as_array().unwrap();
    assert_eq!(experiments.len(), 48);
    for e in experiments {
        assert!((e["fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-9);
        assert!(e["syndrome"].is_string());
    }
    let averages = v["averages"].as_array().unwrap();
    assert_eq!(averages.len(), 3);
    for a in averages {
        assert!((a["mean_fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    }
    // deterministic ordering: id sweep first, canonical error order
    assert_eq!(experiments[0]["gate"], "id");
    assert_eq!(experiments[0]["error"], "E");
    assert_eq!(experiments[1]["error"], "B1");
    assert_eq!(experiments[16]["gate"], "not");
}

#[test]
fn sweep_with_dephasing_degrades() {
    let v = json(&["sweep", "--dephasing-p", "0.05"]);
    for a in v["averages"].as_array().unwrap() {
        let mean = a["mean_fidelity"].as_f64().unwrap();
        assert!(mean < 1.0 && mean > 0.5, "mean {mean}");
    }
    // syndromes are not reported under noise
    assert!(v["experiments"][0]["syndrome"].is_null());
    assert!(v["noise"].is_object());
}

#[test]
fn baseline_reports_thirteen_sixteenths() {
    let v = json(&["baseline"]);
    assert_eq!(v["reference"].as_f64().unwrap(), 0.8125);
    let gates = v["gates"].as_array().unwrap();
    assert_eq!(gates.len(), 3);
    for g in gates {
        assert!((g["mean"].as_f64().unwrap() - 0.8125).abs() < 1e-12);
        let rows = g["fidelities"].as_array().unwrap();
        assert_eq!(rows.len(), 16);
        let zeros = rows
            .iter()
            .filter(|r| r["fidelity"].as_f64().unwrap() < 1e-12)
            .count();
        assert_eq!(zeros, 3);
    }
}

#[test]
fn advantage_noiseless_margins() {
    let v = json(&["advantage"]);
    for g in v["gates"].as_array().unwrap() {
        assert!((g["margin"].as_f64().unwrap() - 0.1875).abs() < 1e-9);
        assert!((g["average"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn advantage_under_heavy_dephasing_reports_signed_margins() {
    // no particular value is claimed, only that the margin is reported
    // consistently and is eaten into by the noise
    let v = json(&["advantage", "--dephasing-p", "0.4"]);
    assert_eq!(v["reference"].as_f64().unwrap(), 0.8125);
    for g in v["gates"].as_array().unwrap() {
        let average = g["average"].as_f64().unwrap();
        let margin = g["margin"].as_f64().unwrap();
        assert!(margin.is_finite());
        assert!((margin - (average - 0.8125)).abs() < 1e-12);
        assert!(margin < 0.1875);
    }
}

#[test]
fn csv_fidelity_tables() {
    let out = qec5(&["run", "--gate", "not", "--error", "BS4", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "gate,error,fidelity\nnot,BS4,1\n");

    let out = qec5(&["sweep", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 49);
    assert_eq!(lines[0], "gate,error,fidelity");

    let out = qec5(&["advantage", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("gate,average,margin\n"));
    assert!(text.contains("id,1,0.1875"));
}

#[test]
fn noise_file_round_trip() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("qec5-noise-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"uniform_dephasing_p": 0.05}"#).unwrap();
    let v = json(&[
        "run",
        "--gate",
        "id",
        "--error",
        "E",
        "--noise",
        path.to_str().unwrap(),
    ]);
    assert!(v["fidelity"].as_f64().unwrap() < 1.0);
    assert_eq!(
        v["noise"]["after_encode"][0],
        serde_json::json!({"type": "dephasing", "p": 0.05})
    );
    // flag-based and file-based runs agree
    let w = json(&[
        "run",
        "--gate",
        "id",
        "--error",
        "E",
        "--dephasing-p",
        "0.05",
    ]);
    assert_eq!(v["fidelity"], w["fidelity"]);
    std::fs::remove_file(&path).ok();
}

#[test]
fn bad_noise_file_is_usage_error() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("qec5-bad-noise-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"uniform_dephasing_p": 2.5}"#).unwrap();
    let out = qec5(&[
        "run",
        "--gate",
        "id",
        "--error",
        "E",
        "--noise",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = qec5(&[
        "run",
        "--gate",
        "id",
        "--error",
        "E",
        "--noise",
        "/nonexistent.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn t2_flags() {
    // single T2* value expands to all five qubits
    let v = json(&[
        "run",
        "--gate",
        "id",
        "--error",
        "E",
        "--t2",
        "26",
        "--duration",
        "40",
    ]);
    assert!(v["fidelity"].as_f64().unwrap() < 1.0);
    let five = json(&[
        "run",
        "--gate",
        "id",
        "--error",
        "E",
        "--t2",
        "26,26,26,26,26",
        "--duration",
        "40",
    ]);
    assert_eq!(v["fidelity"], five["fidelity"]);
    // --t2 without --duration is a usage error
    let out = qec5(&["run", "--gate", "id", "--error", "E", "--t2", "26"]);
    assert_eq!(out.status.code(), Some(2));
    // --duration alone uses the documented 100 ms default T2*
    let d = json(&["run", "--gate", "id", "--error", "E", "--duration", "40"]);
    let d100 = json(&[
        "run",
        "--gate",
        "id",
        "--error",
        "E",
        "--t2",
        "100",
        "--duration",
        "40",
    ]);
    assert_eq!(d["fidelity"], d100["fidelity"]);
}

#[test]
fn assume_identity_response_flag() {
    let v = json(&["run", "--gate", "not", "--error", "E"]);
    assert_eq!(v["identity_response_assumed"], Value::Bool(false));
    assert!(v["identity_response_deviation"].as_f64().unwrap() < 1e-10);

    let w = json(&[
        "run",
        "--gate",
        "not",
        "--error",
        "E",
        "--assume-identity-response",
    ]);
    assert_eq!(w["identity_response_assumed"], Value::Bool(true));
    assert!(w["identity_response_deviation"].is_null());
    assert!((w["fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn seed_is_echoed() {
    let v = json(&["run", "--gate", "id", "--error", "E", "--seed", "7"]);
    assert_eq!(v["meta"]["seed"], serde_json::json!(7));
    assert!(v["meta"]["tool_version"].is_string());
    let w = json(&["run", "--gate", "id", "--error", "E"]);
    assert!(w["meta"]["seed"].is_null());
}
