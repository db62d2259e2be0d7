use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finsler3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finsler3"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn check<'a>(doc: &'a Value, name: &str) -> &'a Value {
    doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("missing check {name}"))
}

#[test]
fn length_of_unit_time_and_scalar() {
    let out = run(&["--format", "json", "length", "--x", "1", "0", "0", "0", "0", "0", "0", "0", "1"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["result"]["length_cubed"], "1/1");
    assert_eq!(doc["result"]["length"], 1.0);
    assert_eq!(doc["passed"], true);
}

#[test]
fn length_of_zero_vector() {
    let out = run(&["--format", "json", "length", "--x", "0", "0", "0", "0", "0", "0", "0", "0", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["result"]["length_cubed"], "0/1");
}

#[test]
fn length_matches_determinant_in_text() {
    let out = run(&["length", "--x", "1", "2", "3", "4", "5", "6", "7", "8", "9"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("length_cubed: -290"), "{text}");
    assert!(text.contains("determinant: -290"), "{text}");
    assert!(text.contains("PASS determinant-cross-check 1/1"), "{text}");
}

#[test]
fn length_accepts_negative_and_fractional_entries() {
    let out = run(&["--format", "json", "length", "--x", "1/2", "0", "0", "0", "0", "0", "0", "0", "-8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["result"]["length_cubed"], "-2/1");
}

#[test]
fn float_overflow_fails_the_cross_check() {
    let out = run(&["--backend", "float", "--format", "json", "length", "--x", "1e200", "0", "0", "0", "0", "0", "0", "0", "1e200"]);
    assert_eq!(code(&out), 1);
    let doc = json(&out);
    assert_eq!(doc["passed"], false);
    assert_eq!(doc["counterexample"]["check"], "determinant-cross-check");
    assert!(doc["counterexample"]["inputs"]["x"].is_array());
}

#[test]
fn malformed_number_is_a_usage_error() {
    let out = run(&["length", "--x", "1", "2", "three", "4", "5", "6", "7", "8", "9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("three"));
}

#[test]
fn wrong_arity_is_a_usage_error() {
    assert_eq!(code(&run(&["length", "--x", "1", "2", "3"])), 2);
}

#[test]
fn verify_trace_duality() {
    let out = run(&["verify", "trace-duality"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS trace-duality 81/81"));
}

#[test]
fn verify_symmetrized_is_exhaustive() {
    let out = run(&["--format", "json", "verify", "symmetrized"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let c = check(&doc, "symmetrized");
    assert_eq!(c["passed"], 495);
    assert_eq!(c["total"], 495);
}

#[test]
fn verify_quartic_thousand_trials() {
    let out = run(&["--format", "json", "--trials", "1000", "--seed", "7", "--backend", "exact", "verify", "quartic"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(check(&doc, "quartic")["passed"], 1000);
    assert_eq!(doc["counterexample"], Value::Null);
}

#[test]
fn every_identity_passes_on_both_backends() {
    for identity in [
        "trace-duality",
        "cubic-invariance",
        "sl2-blocks",
        "reduction-4d",
        "quartic",
        "symmetrized",
        "equivalence-4-20",
    ] {
        for backend in ["exact", "float"] {
            let out = run(&["--trials", "20", "--seed", "3", "--backend", backend, "verify", identity]);
            assert_eq!(code(&out), 0, "{identity} on {backend}:\n{}", stdout(&out));
        }
    }
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["--format", "json", "--trials", "30", "--seed", "11", "verify", "equivalence-4-20"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn float_campaign_is_deterministic() {
    let args = ["--format", "json", "--trials", "50", "--seed", "5", "--backend", "float", "verify", "cubic-invariance"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn unknown_identity_is_a_usage_error() {
    let out = run(&["verify", "no-such-identity"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
}

#[test]
fn zero_trials_is_a_usage_error() {
    assert_eq!(code(&run(&["--trials", "0", "verify", "quartic"])), 2);
}

#[test]
fn delta_dump_is_written_and_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let first = run_in(dir.path(), &["delta"]);
    assert_eq!(code(&first), 0, "{}", stdout(&first));
    let default_path = dir.path().join("deltas.json");
    let a = std::fs::read(&default_path).unwrap();

    let other = dir.path().join("again.json");
    let second = run(&["delta", "--output", other.to_str().unwrap()]);
    assert_eq!(code(&second), 0);
    let b = std::fs::read(&other).unwrap();
    assert_eq!(a, b);

    let doc: Value = serde_json::from_slice(&a).unwrap();
    let map = doc.as_object().unwrap();
    assert_eq!(map.len(), 9);
    let units = [[0, 0], [1, 0], [-1, 0], [0, 1], [0, -1]];
    for a in 0..9 {
        let m = doc[format!("delta_{a}")].as_array().unwrap();
        assert_eq!(m.len(), 12);
        for row in m {
            let row = row.as_array().unwrap();
            assert_eq!(row.len(), 12);
            for z in row {
                let pair = [z[0].as_i64().unwrap(), z[1].as_i64().unwrap()];
                assert!(units.contains(&pair), "delta_{a} entry {z}");
            }
        }
    }
}

#[test]
fn delta_report_lists_reconstruction() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let out = run(&["--format", "json", "delta", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(check(&doc, "reconstruction")["passed"], 100);
}

#[test]
fn delta_to_unwritable_path_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("d.json");
    assert_eq!(code(&run(&["delta", "--output", path.to_str().unwrap()])), 2);
}

#[test]
fn solve_rest_frame() {
    let out = run(&["--format", "json", "solve", "--p", "1", "0", "0", "0", "0", "0", "0", "0", "1", "--mass", "1"]);
    assert_eq!(code(&out), 0);
    let result = &json(&out)["result"];
    for field in ["momentum", "mass", "on_shell", "kernel_dimension", "basis", "residual_max_abs"] {
        assert!(result.get(field).is_some(), "missing {field}");
    }
    assert_eq!(result["on_shell"], true);
    assert_eq!(result["kernel_dimension"], 3);
    assert_eq!(result["basis"].as_array().unwrap().len(), 3);
    assert_eq!(result["basis"][0].as_array().unwrap().len(), 12);
    assert_eq!(result["residual_max_abs"], 0.0);
}

#[test]
fn solve_off_shell_is_empty() {
    let out = run(&["--format", "json", "solve", "--momentum", "2", "0", "0", "0", "0", "0", "0", "0", "1", "--mass", "1"]);
    assert_eq!(code(&out), 0);
    let result = &json(&out)["result"];
    assert_eq!(result["on_shell"], false);
    assert_eq!(result["kernel_dimension"], 0);
    assert!(result["basis"].as_array().unwrap().is_empty());
}

#[test]
fn solve_float_boost() {
    let out = run(&["--backend", "float", "--format", "json", "solve", "--p", "5", "0", "0", "4", "0", "0", "0", "0", "3", "--mass", "3"]);
    assert_eq!(code(&out), 0);
    let result = &json(&out)["result"];
    assert_eq!(result["on_shell"], true);
    assert_eq!(result["kernel_dimension"], 3);
    assert!(result["residual_max_abs"].as_f64().unwrap() < 1e-9);
}

#[test]
fn solve_rejects_non_positive_mass() {
    for mass in ["0", "-1"] {
        let out = run(&["solve", "--p", "1", "0", "0", "0", "0", "0", "0", "0", "1", "--mass", mass]);
        assert_eq!(code(&out), 2, "mass {mass}");
    }
}

#[test]
fn reduce_rest_frame_is_on_shell() {
    let out = run(&["--format", "json", "reduce", "--p", "1", "0", "0", "0", "--mass", "1"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["result"]["on_shell"], true);
    assert_eq!(doc["result"]["klein_gordon_solvable"], true);
    assert!(doc["result"]["dirac_kernel_dimension"].as_u64().unwrap() > 0);
    assert_eq!(check(&doc, "block-diagonal")["ok"], true);
}

#[test]
fn reduce_heavy_rest_frame_is_off_shell() {
    let out = run(&["--format", "json", "reduce", "--p", "1", "0", "0", "0", "--mass", "2"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["result"]["on_shell"], false);
    assert_eq!(doc["result"]["dirac_kernel_dimension"], 0);
    assert_eq!(check(&doc, "block-diagonal")["ok"], true);
}

#[test]
fn reduce_text_lists_structure_checks() {
    let out = run(&["reduce", "--p", "5", "0", "0", "4", "--mass", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("PASS block-diagonal"), "{text}");
    assert!(text.contains("PASS solvability-matches-shell"), "{text}");
}

#[test]
fn reduce_rejects_non_positive_mass() {
    assert_eq!(code(&run(&["reduce", "--p", "1", "0", "0", "0", "--mass", "0"])), 2);
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["--format", "json", "--output", path.to_str().unwrap(), "verify", "trace-duality"]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(doc["command"], "verify trace-duality");
    assert_eq!(doc["passed"], true);
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&run(&["--format", "json", "verify", "trace-duality"]));
    assert!(plain.get("timing_ms").is_none());
    let timed = json(&run(&["--format", "json", "--timing", "verify", "trace-duality"]));
    assert!(timed["timing_ms"].is_u64());
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    assert_eq!(code(&run(&[])), 2);
}
