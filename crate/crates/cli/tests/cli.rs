use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn pst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pst"))
        .args(args)
        .env_remove("PST_SEED_TOLERANCE")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn triangle_is_reported_infeasible() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.json", r#"{"n":3,"edges":[[0,1],[1,2],[2,0]]}"#);
    let out = pst(&["analyze", "--input", &k3, "--ref", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["feasibility"]["feasible"], false);
    assert!(doc["feasibility"]["note"].as_str().unwrap().contains("κ_D = 2"));
    assert_eq!(pst(&["design", "--input", &k3]).status.code(), Some(3));
}

#[test]
fn icosahedron_tabulated_design() {
    let out = pst(&["design", "--catalog", "icosahedron", "--theta", "0", "--t0", "1", "--paper-couplings"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out)["J"].as_array().unwrap().clone();
    assert_eq!(num(&j[1]), 0.0);
    assert_eq!(num(&j[2]), 0.0);
    assert!((num(&j[3]) - std::f64::consts::FRAC_PI_4).abs() < 1e-11);
}

#[test]
fn hypercube_curve_reaches_unit_fidelity() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("run");
    let out = pst(&[
        "evolve", "--catalog", "hypercube4", "--paper-couplings", "--t0", "1", "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(out_dir.join("curve.csv")).unwrap();
    assert!(!csv.contains('\r'));
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "t,abs_f_0,abs_f_1,abs_f_2,abs_f_3,abs_f_4,re_f_4,im_f_4");
    let at_t0 = lines
        .map(|l| l.split(',').map(|v| v.parse::<f64>().unwrap()).collect::<Vec<_>>())
        .find(|row| row[0] == 1.0)
        .unwrap();
    assert!((at_t0[5] - 1.0).abs() < 1e-9);
    let report: Value = serde_json::from_str(&fs::read_to_string(out_dir.join("transfer.json")).unwrap()).unwrap();
    assert_eq!(report["perfect"], true);
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<String> = (0..2)
        .map(|i| {
            let out_dir = dir.path().join(format!("run{i}"));
            let out = pst(&[
                "evolve", "--catalog", "g2", "--theta", "0.3", "--t0", "2", "--branch", "1,-1,0,2,0",
                "--grid", "0:4:33", "--out", out_dir.to_str().unwrap(),
            ]);
            assert_eq!(out.status.code(), Some(0));
            fs::read_to_string(out_dir.join("curve.csv")).unwrap()
                + &fs::read_to_string(out_dir.join("transfer.json")).unwrap()
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(pst(&["spectrum", "--catalog", "g2"]).stdout, pst(&["spectrum", "--catalog", "g2"]).stdout);
}

#[test]
fn floats_carry_twelve_significant_digits() {
    let out = pst(&["spectrum", "--catalog", "g2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("2.44948974278e0"), "{text}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", "{\"n\": 3,");
    assert_eq!(pst(&["analyze", "--input", &broken]).status.code(), Some(2));
    assert_eq!(pst(&["analyze", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(pst(&["design", "--catalog", "c4", "--phase-factor", "3"]).status.code(), Some(2));
    assert_eq!(pst(&["evolve", "--catalog", "c4", "--t0", "5", "--grid", "0:1:3"]).status.code(), Some(2));
    assert_eq!(pst(&["design", "--catalog", "k3"]).status.code(), Some(3));
    // The tabulated modified-tree couplings do not transfer.
    assert_eq!(pst(&["evolve", "--catalog", "modified_g2", "--paper-couplings"]).status.code(), Some(4));
    assert_eq!(pst(&["verify", "--catalog", "hypercube4", "--d", "2"]).status.code(), Some(5));
}

#[test]
fn seed_tolerance_override() {
    let run = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_pst"))
            .args(["evolve", "--catalog", "hypercube4", "--paper-couplings", "--t0", "1"])
            .env("PST_SEED_TOLERANCE", value)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("1e-6"), Some(0));
    assert_eq!(run("1e-300"), Some(4));
    assert_eq!(run("-1"), Some(2));
    // The same family also governs |P_D(x_k)| = 1.
    let design = Command::new(env!("CARGO_BIN_EXE_pst"))
        .args(["design", "--catalog", "c4"])
        .env("PST_SEED_TOLERANCE", "1e-300")
        .output()
        .unwrap();
    assert_eq!(design.status.code(), Some(3));
}

#[test]
fn verify_reports_the_resolved_phase_factor() {
    let out = pst(&["verify", "--catalog", "c4", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(num(&doc["phase_factor_resolved"]), 0.5);
    assert_eq!(doc["checks"]["nu_independence"], true);
    assert_eq!(doc["checks"]["annihilates_vacuum"], true);
}

#[test]
fn exported_documents_reload() {
    let dir = tempfile::tempdir().unwrap();
    let list = json(&pst(&["catalog", "list"]));
    for item in list.as_array().unwrap() {
        let name = item["name"].as_str().unwrap();
        let out = pst(&["catalog", "export", name, "--out", dir.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let path = dir.path().join(format!("{name}.json"));
        let reloaded = pst(&["spectrum", "--input", path.to_str().unwrap()]);
        assert_eq!(reloaded.status.code(), Some(0), "{name}");
        if name != "modified_g2" {
            assert_eq!(json(&reloaded)["nodes"], json(&pst(&["spectrum", "--catalog", name]))["nodes"], "{name}");
        }
    }
}
