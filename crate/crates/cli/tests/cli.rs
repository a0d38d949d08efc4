//! End-to-end tests of the pdmosc binary: experiment tables, config
//! handling, figure emission, determinism, and exit codes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pdmosc"))
}

#[test]
fn spectrum_lists_all_bound_states() {
    let out = bin()
        .args(["spectrum", "--gamma-sigma0", "0.3", "--hbar", "1", "--m0", "1", "--omega0", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 11, "11 bound states at gamma sigma0 = 0.3:\n{text}");
    let first: Vec<f64> = rows[0].split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0);
    assert!((first[1] - 0.48875).abs() < 1e-12);
}

#[test]
fn classical_orbit_is_deterministic() {
    let run = || {
        bin()
            .args(["classical-orbit", "--gamma-a0", "0.4,0.8", "--periods", "3", "--samples", "200"])
            .output()
            .unwrap()
            .stdout
    };
    let a = run();
    let b = run();
    assert!(!a.is_empty());
    assert_eq!(a, b, "identical config must give byte-identical output");
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("run.json");
    std::fs::write(
        &cfg_path,
        r#"{
            "params": {"m0": 1.0, "omega0": 1.0, "hbar": 1.0, "gamma": 0.2},
            "experiment": "eigenfunction",
            "options": {"n_list": [1], "samples": 50}
        }"#,
    )
    .unwrap();
    let out_path = dir.path().join("data.csv");
    let out = bin()
        .args([
            "eigenfunction",
            "--config",
            cfg_path.to_str().unwrap(),
            "--gamma-sigma0",
            "0.3",
            "--out",
            out_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_path).unwrap();
    // flag override: gamma column carries 0.3, not the config's 0.2
    let row = text.lines().nth(2).unwrap();
    assert!(row.starts_with("0.3,1,"), "row: {row}");
}

#[test]
fn malformed_config_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("bad.json");
    std::fs::write(&cfg_path, "{not json").unwrap();
    let out = bin()
        .args(["spectrum", "--config", cfg_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unbound_state_exits_two() {
    let out = bin()
        .args(["eigenfunction", "--gamma-sigma0", "0.3", "--n", "11"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn figures_run_single_id_respects_out_dir_env() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .env("PDMOSC_OUT_DIR", dir.path())
        .args(["figures", "run", "--id", "fig6b", "--out-dir", "nested"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let written = dir.path().join("nested").join("fig6b.csv");
    assert!(written.is_file(), "missing {written:?}");
    let text = std::fs::read_to_string(written).unwrap();
    assert!(text.lines().count() > 5);
}

#[test]
fn unknown_figure_id_exits_one() {
    let out = bin().args(["figures", "run", "--id", "fig99"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_format_emits_parseable_output() {
    let out = bin()
        .args(["morse-catalog", "--gamma", "0.5", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["columns"].as_array().unwrap().len(), 6);
    assert!(v["rows"].as_array().unwrap().len() >= 100);
}

#[test]
fn every_manifest_figure_runs() {
    // `verify --figures` covers this too, but that reruns the whole oracle
    // suite; exercise the figure runner directly
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["figures", "run", "--out-dir", dir.path().to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let count = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(count >= 30, "expected a file per figure panel, got {count}");
}
