//! End-to-end checks of the command-line front end: output formats, exit
//! codes and byte-level determinism of repeated invocations.

use std::process::{Command, Output};

fn dclif(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dclif"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn verify_suite_json_and_determinism() {
    let args = ["verify", "corollary1", "--m", "4", "--k", "2", "--out", "json"];
    let first = dclif(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    let v: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(v["suite"], "corollary1");
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["checks"].as_array().map(|c| !c.is_empty()).unwrap_or(false));
    // identical invocations produce byte-identical JSON
    let second = dclif(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn weights_single_spec() {
    let out = dclif(&["weights", "--m", "4", "--k", "1", "--spec", "L+ L- L+ L+"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(3/2, 1/2)");
}

#[test]
fn hwv_count_text() {
    let out = dclif(&["hwv-count", "--m", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(64, 64)");
}

#[test]
fn spinor_orbit_dot_graph() {
    let out = dclif(&[
        "spinor-orbit",
        "--m",
        "4",
        "--start",
        "L+ L+ L+ L+",
        "--out",
        "dot",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("\"L+ L+ L+ L+\""));
    assert!(text.contains("\"L+ L- L- L+\""));
    // exactly the two nodes of the worked example
    let nodes = text.lines().filter(|l| l.trim_end().ends_with("\";")).count();
    assert_eq!(nodes, 2);
}

#[test]
fn spinor_orbit_json_shape() {
    let out = dclif(&[
        "spinor-orbit",
        "--m",
        "5",
        "--start",
        "L+ L+ L+ L+ L+",
        "--out",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
    assert_eq!(v["basis"][0]["weight"], serde_json::json!(["1/2", "1/2"]));
}

#[test]
fn output_file_flag() {
    let dir = std::env::temp_dir().join("dclif-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("counts.json");
    let out = dclif(&[
        "hwv-count",
        "--m",
        "3",
        "--k",
        "0",
        "--out",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["plus"], 32);
    assert_eq!(v["minus"], 0);
}

#[test]
fn usage_errors_exit_two() {
    // unknown suite
    assert_eq!(dclif(&["verify", "nonsense"]).status.code(), Some(2));
    // malformed idempotent spec
    assert_eq!(
        dclif(&["weights", "--m", "2", "--spec", "L+ Q-"]).status.code(),
        Some(2)
    );
    // dot output outside spinor-orbit
    assert_eq!(
        dclif(&["verify", "dims", "--out", "dot"]).status.code(),
        Some(2)
    );
    // unsupported dimension pair for the kernel oracle
    assert_eq!(
        dclif(&["dims", "--m", "9", "--k", "1"]).status.code(),
        Some(2)
    );
    // spec length disagreeing with the dimension flag
    assert_eq!(
        dclif(&["weights", "--m", "3", "--spec", "L+ L-"]).status.code(),
        Some(2)
    );
}

#[test]
fn bracket_table_text() {
    let out = dclif(&["bracket-table", "--m", "4", "--max-degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[H_1, X_{1,2}] = X_{1,2}"));
    assert!(text.contains("0 fail"));
}
