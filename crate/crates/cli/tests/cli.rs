use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proptest::prelude::*;
use relgrad_cli::experiment::median;
use relgrad_cli::output::TRACE_HEADER;
use relgrad_cli::ExperimentConfig;

fn relgrad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relgrad"))
        .args(args)
        .output()
        .unwrap()
}

fn preset_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("presets")
        .join(format!("{name}.json"))
}

fn write_config(dir: &Path, body: &str) -> PathBuf {
    let path = dir.join("config.json");
    std::fs::write(&path, body).unwrap();
    path
}

const QUADRATIC: &str = r#"{
    "name": "q",
    "function": {"kind": "quadratic", "eigenvalues": [1, 4]},
    "solver": "adaptive_l_alpha",
    "x0": [1, 1],
    "alphas": [0.0, 0.2],
    "l_min": 1, "l_0": 2, "alpha_min": 0.0, "alpha_0": 0.01,
    "iterations": 30,
    "seeds": [7, 8]
}"#;

#[test]
fn sweep_writes_traces_summary_and_curves() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), QUADRATIC);
    let out = dir.path().join("out");
    let result = relgrad(&[
        "sweep",
        config.to_str().unwrap(),
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        result.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&result.stderr)
    );

    let trace = std::fs::read_to_string(out.join("trace_alpha_0.2_seed_8.csv")).unwrap();
    let mut lines = trace.lines();
    assert_eq!(lines.next(), Some(TRACE_HEADER));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first.len(), 10);
    assert_eq!(first[0], "0");
    // f* = 0, so the gap column repeats f
    assert_eq!(first[1], first[2]);

    let summary = std::fs::read_to_string(out.join("summary.csv")).unwrap();
    assert_eq!(summary.lines().count(), 1 + 4 + 2);
    assert!(summary.lines().any(|l| l.starts_with("0.2,median,")));
    assert!(out.join("curves.csv").exists());
}

#[test]
fn run_executes_a_single_cell() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), QUADRATIC);
    let out = dir.path().join("out");
    let result = relgrad(&[
        "run",
        config.to_str().unwrap(),
        "--out-dir",
        out.to_str().unwrap(),
        "--iterations",
        "5",
    ]);
    assert_eq!(result.status.code(), Some(0));
    let traces: Vec<_> = std::fs::read_dir(&out)
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_name().to_string_lossy().starts_with("trace_"))
        .collect();
    assert_eq!(traces.len(), 1);
    let trace = std::fs::read_to_string(out.join("trace_alpha_0.0_seed_7.csv")).unwrap();
    assert!(trace.lines().count() <= 6);
}

#[test]
fn invalid_config_exits_with_1_and_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), &QUADRATIC.replace("\"l_0\": 2", "\"l_0\": 0.5"));
    let result = relgrad(&["sweep", config.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&result.stderr).contains("l_0"));

    let result = relgrad(&["table", "no_such_table"]);
    assert_eq!(result.status.code(), Some(1));
}

#[test]
fn io_failures_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(
        relgrad(&["sweep", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );

    let config = write_config(dir.path(), QUADRATIC);
    let blocked = dir.path().join("config.json").join("out");
    let result = relgrad(&[
        "sweep",
        config.to_str().unwrap(),
        "--out-dir",
        blocked.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(2));
}

#[test]
fn divergence_exits_with_3_and_still_writes() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        r#"{
            "function": {"kind": "quadratic", "eigenvalues": [10]},
            "solver": "constant_step",
            "smoothness": 1,
            "x0": [1],
            "alphas": [0],
            "l_min": 1, "l_0": 1,
            "iterations": 5000,
            "seeds": [0]
        }"#,
    );
    let out = dir.path().join("out");
    let result = relgrad(&[
        "sweep",
        config.to_str().unwrap(),
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(3));
    let summary = std::fs::read_to_string(out.join("summary.csv")).unwrap();
    assert!(summary.contains(",diverged,"));
}

#[test]
fn solver_override_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), QUADRATIC);
    let out = dir.path().join("out");
    let result = relgrad(&[
        "sweep",
        config.to_str().unwrap(),
        "--solver",
        "adaptive_l",
        "--seed-count",
        "2",
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        result.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&result.stderr)
    );
    assert!(out.join("trace_alpha_0.2_seed_1.csv").exists());
    let result = relgrad(&["sweep", config.to_str().unwrap(), "--solver", "newton"]);
    assert_eq!(
        result.status.code(),
        Some(2),
        "clap usage errors exit with 2"
    );
}

#[test]
fn bounds_marks_missing_constants() {
    let result = relgrad(&["bounds", preset_path("rosenbrock_t1").to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(0));
    let text = String::from_utf8(result.stdout).unwrap();
    assert!(
        text.contains("μ unknown") || text.contains("L unknown"),
        "{text}"
    );
    assert!(text.contains("no guarantee for α ≥ 0.5"));

    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        &QUADRATIC.replace("\"iterations\"", "\"epsilon\": 1e-6, \"iterations\""),
    );
    let result = relgrad(&["bounds", config.to_str().unwrap()]);
    let text = String::from_utf8(result.stdout).unwrap();
    assert!(text.contains("N*") && !text.contains("unknown"), "{text}");
}

proptest! {
    #[test]
    fn median_ignores_order(mut values in prop::collection::vec(-1e3f64..1e3, 1..30), seed in any::<u64>()) {
        let m = median(&values);
        let n = values.len();
        for i in 0..n {
            values.swap(i, (seed as usize).wrapping_add(i * 7) % n);
        }
        prop_assert_eq!(median(&values).to_bits(), m.to_bits());
        let below = values.iter().filter(|v| **v <= m).count();
        prop_assert!(2 * below >= n);
    }

    #[test]
    fn configs_survive_a_json_round_trip(iterations in 1usize..10_000, l_0 in 0.01f64..100.0, seeds in prop::collection::vec(any::<u64>(), 1..5)) {
        let mut config = ExperimentConfig::from_json(QUADRATIC).unwrap();
        config.iterations = iterations;
        config.l_0 = l_0.max(config.l_min);
        config.seeds = Some(seeds);
        let text = serde_json::to_string(&config).unwrap();
        prop_assert_eq!(ExperimentConfig::from_json(&text).unwrap(), config);
    }
}
