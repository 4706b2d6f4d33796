use std::process::{Command, Output};

use qteleport_core::json::from_json;
use qteleport_core::prelude::*;
use serde_json::Value;

fn qteleport(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qteleport"))
        .args(args)
        .env_remove("QTELEPORT_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn basis_state_teleports() {
    let o = qteleport(&["teleport", "--alpha", "1", "--beta", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fidelity: 1\n"));
}

#[test]
fn complex_input_marginal() {
    let o = qteleport(&["teleport", "--alpha", "0.6", "--beta", "0.8i", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: ProtocolReport = from_json(stdout(&o).trim()).unwrap();
    // Oracle: [[|α|², αβ*], [α*β, |β|²]] for α = 0.6, β = 0.8i.
    let want = ComplexMatrix::new(
        2,
        2,
        vec![
            Complex64::new(0.36, 0.0),
            Complex64::new(0.0, -0.48),
            Complex64::new(0.0, 0.48),
            Complex64::new(0.64, 0.0),
        ],
    )
    .unwrap();
    assert!(report.marginal_3.matrix().approx_eq(&want, 1e-12).unwrap());
    assert!((report.fidelity - 1.0).abs() < 1e-12);
}

#[test]
fn single_shot_output_is_reproducible() {
    let args = ["teleport", "--mode", "single-shot", "--seed", "7", "--alpha", "0.6", "--beta", "0.8i"];
    let a = qteleport(&args);
    let b = qteleport(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let mut json_args = args.to_vec();
    json_args.extend(["--output", "json"]);
    let a = qteleport(&json_args);
    assert_eq!(a.stdout, qteleport(&json_args).stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["mode"], "single-shot");
    assert_eq!(v["seed"], 7);
    assert!(v["outcome"].is_u64());
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(qteleport(&["teleport", "--alpha", "1", "--beta", "1"]).status.code(), Some(2));
    assert_eq!(qteleport(&["teleport", "--alpha", "x"]).status.code(), Some(2));
    assert_eq!(qteleport(&["teleport", "--resource", "9"]).status.code(), Some(2));
    assert_eq!(qteleport(&["teleport", "--bogus"]).status.code(), Some(2));
    let o = qteleport(&["teleport", "--alpha", "1", "--beta", "1", "--renormalize"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn separate_component_flags() {
    let o = qteleport(&["teleport", "--alpha-re", "0.6", "--beta-re", "0", "--beta-im", "0.8", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["input_state"]["beta"], serde_json::json!([0, 0.8]));
}

#[test]
fn tolerance_from_environment() {
    // A negative tolerance is an input error wherever it comes from.
    let o = Command::new(env!("CARGO_BIN_EXE_qteleport"))
        .args(["teleport"])
        .env("QTELEPORT_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_qteleport"))
        .args(["teleport", "--tol", "1e-6"])
        .env("QTELEPORT_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn swap_compare_reports_both_branches() {
    let o = qteleport(&["swap-compare", "--alpha", "0.6", "--beta", "0.8i", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let cmp: SwapComparison = from_json(stdout(&o).trim()).unwrap();
    assert!((cmp.teleport.entropy_12_bits - 2.0).abs() < 1e-9);
    assert!(cmp.swap.entropy_12_bits.abs() < 1e-9);
    assert!((cmp.teleport.fidelity_3 - 1.0).abs() < 1e-9);
    assert!((cmp.swap.fidelity_3 - 1.0).abs() < 1e-9);
    let text = qteleport(&["swap-compare"]);
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text).ends_with("PASS\n"));
}

#[test]
fn verify_with_small_count() {
    let o = qteleport(&["verify", "--count", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("10 Haar states"));
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 9);
    let o = qteleport(&["verify", "--count", "10", "--output", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["count"], 10);
}

#[test]
fn verify_negative_control() {
    let o = qteleport(&["verify", "--count", "10", "--corrupt-a1"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("FAIL kraus-completeness")));
    assert!(String::from_utf8(o.stderr).unwrap().contains("first failing check"));
}

#[test]
fn dump_tables_text() {
    let o = qteleport(&["dump-tables"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let a3: Vec<&str> = out.lines().skip_while(|l| *l != "A^3 =").skip(1).take(8).collect();
    let row = |l: &str| l.trim().trim_matches(|c| c == '[' || c == ']').split_whitespace().map(String::from).collect::<Vec<_>>();
    assert_eq!(row(a3[0])[6], "-1");
    assert_eq!(row(a3[6])[0], "-1");
    assert!(!out.contains('.') || out.lines().filter(|l| l.starts_with("  [")).all(|l| !l.contains('.')));
    assert_eq!(o.stdout, qteleport(&["dump-tables"]).stdout);
}

#[test]
fn dump_tables_json() {
    let o = qteleport(&["dump-tables", "--output", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut matrices: Vec<ComplexMatrix> = Vec::new();
    for key in ["a_ops", "b_ops"] {
        for m in v[key].as_array().unwrap() {
            matrices.push(serde_json::from_value(m.clone()).unwrap());
        }
    }
    matrices.push(serde_json::from_value(v["swap_1_3"].clone()).unwrap());
    assert_eq!(matrices.len(), 9);
    assert!(matrices.iter().all(|m| m.rows() == 8 && m.cols() == 8 && m.is_integer_valued()));
    assert_eq!(v["bell_vectors"].as_array().unwrap().len(), 4);
    // Integer entries carry no decimal point.
    let text = stdout(&o);
    let a_part = &text[..text.find("\"swap_1_3\"").unwrap()];
    assert!(!a_part.contains('.'));
}
