//! End-to-end checks of the compiled binary: flags, exit codes, and the
//! layout of emitted files.

use std::fs;
use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sir-sde"))
}

const MINIMAL: &str = "alpha = 20\nbeta = 4\nmu = 1\nrho = 10\ngamma = 1\nsigma1 = 1\nsigma2 = -1\nscenario = classify\n";

fn write_config(dir: &Path, text: &str) -> std::path::PathBuf {
    let path = dir.join("run.cfg");
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn classify_writes_report_with_expected_fields() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), MINIMAL);
    let out = bin()
        .args(["--config", cfg.to_str().unwrap(), "--out", dir.path().to_str().unwrap(), "--quiet"])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("classification.json")).unwrap())
            .unwrap();
    assert_eq!(json["verdict"], "Permanence");
    assert!((json["lambda"].as_f64().unwrap() - 67.5).abs() < 1e-9);
    assert!((json["cstar"].as_f64().unwrap() - 1.9375).abs() < 1e-9);
    assert_eq!(json["support"], "BarrierRegion");
    assert!(json["ljx"]["r0_cond"].as_bool().unwrap());
    assert!(json.get("paper_note").is_none());
}

#[test]
fn bad_config_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    // unknown key
    let cfg = write_config(dir.path(), &format!("{MINIMAL}bogus = 1\n"));
    let out = bin().args(["--config", cfg.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("bogus"), "stderr: {msg}");

    // sigma1 = 0 surfaces the validation error
    let cfg = write_config(dir.path(), &MINIMAL.replace("sigma1 = 1", "sigma1 = 0"));
    let out = bin().args(["--config", cfg.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    // unknown scenario name
    let out = bin().args(["--scenario", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    // unknown flag handled by the argument parser
    let out = bin().args(["--frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn missing_config_file_exits_two() {
    let out = bin().args(["--config", "/nonexistent/place/run.cfg"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_output_directory_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), MINIMAL);
    let out = bin()
        .args(["--config", cfg.to_str().unwrap(), "--out", "/proc/definitely/not/writable"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn support_scenario_emits_boundary_starting_at_unit_i() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args([
            "--scenario",
            "support",
            "--out",
            dir.path().to_str().unwrap(),
            "--quiet",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(dir.path().join("support_boundary.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "I,S_boundary");
    let first: Vec<f64> =
        lines.next().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(first[0], 1.0);
    assert!((first[1] - 1.9375).abs() < 1e-9);
}

#[test]
fn example3_emits_density_pair_on_shared_grid() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args([
            "--scenario",
            "example3",
            "--seed",
            "5",
            "--paths",
            "500",
            "--out",
            dir.path().to_str().unwrap(),
            "--quiet",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let emp = fs::read_to_string(dir.path().join("empirical_S_t50.csv")).unwrap();
    let sta = fs::read_to_string(dir.path().join("stationary_density.csv")).unwrap();
    let edges = |text: &str| -> Vec<(String, String)> {
        text.lines()
            .skip(1)
            .map(|l| {
                let mut it = l.split(',');
                (it.next().unwrap().to_string(), it.next().unwrap().to_string())
            })
            .collect()
    };
    let e1 = edges(&emp);
    let e2 = edges(&sta);
    assert_eq!(e1.len(), 50);
    assert_eq!(e1, e2, "the two densities are not on the same grid");

    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("summary.json")).unwrap())
            .unwrap();
    assert_eq!(summary["verdict"], "Extinction");
    assert!(summary["paper_note"].as_str().unwrap().contains("-1.75"));
}

#[test]
fn simulate_trajectory_has_csv_header_and_seeded_reruns_match() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_text = MINIMAL.replace("scenario = classify", "scenario = simulate");
    let cfg = write_config(dir.path(), &cfg_text);
    let run = |out_dir: &Path| {
        let out = bin()
            .args([
                "--config",
                cfg.to_str().unwrap(),
                "--seed",
                "3",
                "--t-final",
                "5",
                "--dt",
                "0.01",
                "--out",
                out_dir.to_str().unwrap(),
                "--quiet",
            ])
            .output()
            .unwrap();
        assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
        fs::read(out_dir.join("trajectory.csv")).unwrap()
    };
    let a_dir = tempfile::tempdir().unwrap();
    let b_dir = tempfile::tempdir().unwrap();
    let a = run(a_dir.path());
    let b = run(b_dir.path());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("t,S,I\n"));
    assert_eq!(text.lines().count(), 502); // header + 501 recorded steps
}

#[test]
fn help_and_version_exit_zero() {
    assert!(bin().arg("--help").output().unwrap().status.success());
    assert!(bin().arg("--version").output().unwrap().status.success());
}
