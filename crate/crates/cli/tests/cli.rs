//! End-to-end tests of the `cherncalc` binary: exit codes, record schemas,
//! and byte-for-byte determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherncalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON record")
}

#[test]
fn example_notnef_passes_with_published_values() {
    let out = run(&["example", "notnef"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["fields"]["c1"]["expected"], "4");
    assert_eq!(v["fields"]["c1"]["got"], "4");
    assert_eq!(v["fields"]["c1"]["provenance"], "reference");
    assert_eq!(v["fields"]["c2"]["got"], "16");
    assert_eq!(v["fields"]["nef"]["got"], "false");
}

#[test]
fn all_named_examples_pass() {
    for name in [
        "notnef",
        "tangent-pn",
        "syzygy",
        "hilb2p2",
        "product-slope",
        "hodge-identity",
    ] {
        let out = run(&["example", name]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert_eq!(stdout_json(&out)["pass"], Value::Bool(true), "{name}");
    }
}

#[test]
fn unknown_example_is_a_usage_error() {
    let out = run(&["example", "nonesuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["example", "notnef", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plethysm_rank_two_record() {
    let out = run(&["plethysm", "--r", "2", "--a", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["count"], "2");
    assert_eq!(v["distinguished_coefficient"], "1");
    assert_eq!(v["content"], "1");
    assert_eq!(v["has_unit_coefficient"], Value::Bool(true));
    assert_eq!(v["zero_composition"], Value::Bool(true));
    assert_eq!(v["equivariance_trials"], 20);
    assert_eq!(v["all_passed"], Value::Bool(true));
}

#[test]
fn plethysm_rank_three_flags_content() {
    let out = run(&["plethysm", "--r", "3", "--a", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["distinguished_coefficient"], "3");
    assert_eq!(v["content"], "3");
    assert!(v["note"].as_str().unwrap().contains("content 3"));
}

#[test]
fn plethysm_over_cap_exits_three_with_count() {
    let out = run(&["plethysm", "--r", "3", "--a", "2", "--cap", "100"]);
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    assert_eq!(v["count"], "648");
    assert_eq!(v["cap"], 100);
}

#[test]
fn plethysm_single_check_selection() {
    let out = run(&["plethysm", "--r", "2", "--a", "2", "--check", "zero"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["zero_composition"], Value::Bool(true));
    assert_eq!(v["equivariance_trials"], 0);
}

#[test]
fn restrict_reports_splitting_and_positivity() {
    let out = run(&["restrict", "notnef"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let st: Vec<i64> = v["splitting_type"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(st, vec![2, 1, 1, 1, 0, 0, 0, -1]);
    assert_eq!(v["nef"], Value::Bool(false));
    assert_eq!(v["semistable"], Value::Bool(false));

    let out = run(&["restrict", "hilb2p2"]);
    let v = stdout_json(&out);
    let st: Vec<i64> = v["splitting_type"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(st, vec![2, 1, 0, -1, -2]);

    let out = run(&["restrict", "tangent-pn", "--n", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["nef"], Value::Bool(true));
    assert_eq!(v["slope"], "4/3");
}

#[test]
fn chi_euler_characteristics() {
    let out = run(&["chi", "--n", "2", "--bundle", "T"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["chi"], "8");

    let out = run(&["chi", "--n", "3", "--bundle", "O(2)"]);
    assert_eq!(stdout_json(&out)["chi"], "10");

    // chi(O(1)) + chi(O(-1)) = 3 + 0 on the plane.
    let out = run(&["chi", "--n", "2", "--bundle", "dsum(O(1),O(-1))"]);
    assert_eq!(stdout_json(&out)["chi"], "3");
}

#[test]
fn chi_parse_error_is_usage() {
    let out = run(&["chi", "--n", "2", "--bundle", "frotz(1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hilbert_polynomial_of_the_plane() {
    let out = run(&["hilbert", "--n", "2", "--bundle", "O(0)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let coeffs: Vec<&str> = v["polynomial_coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, vec!["1", "3/2", "1/2"]);
    assert_eq!(v["verdict"], Value::Bool(true));
}

#[test]
fn asymptotic_check_both_modes() {
    let out = run(&["asymptotic-check", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["mode"], "integrated");
    assert_eq!(v["m_r"], "0");
    assert_eq!(v["m_r_plus_1"], "0");
    assert_eq!(v["verdict"], Value::Bool(true));

    let out = run(&["asymptotic-check", "--rank", "3", "--symbolic"]);
    let v = stdout_json(&out);
    assert_eq!(v["mode"], "symbolic");
    assert_eq!(v["polynomial_coefficients"], Value::Null);
    assert_eq!(v["verdict"], Value::Bool(true));
}

#[test]
fn suite_passes_and_is_deterministic() {
    let a = run(&["suite", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    let lines: Vec<&[u8]> = a.stdout.split(|&b| b == b'\n').filter(|l| !l.is_empty()).collect();
    assert!(lines.len() >= 17, "one record per check, got {}", lines.len());
    for line in &lines {
        let v: Value = serde_json::from_slice(line).expect("each line is JSON");
        assert!(v.get("pass").is_some() || v.get("all_passed").is_some());
    }
    let b = run(&["suite", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout, "byte-for-byte determinism");
}

#[test]
fn text_mode_renders_passes() {
    let out = run(&["example", "syzygy", "--json=false"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("PASS [bundlecalc] syzygy"));
    assert!(text.contains("slope_m_o1: expected -1/3, got -1/3"));
}

#[test]
fn closed_pipe_terminates_quietly() {
    use std::io::{BufRead, BufReader};
    use std::process::Stdio;

    let mut child = Command::new(env!("CARGO_BIN_EXE_cherncalc"))
        .args(["suite"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let stdout = child.stdout.take().unwrap();
    let mut reader = BufReader::new(stdout);
    let mut first = String::new();
    reader.read_line(&mut first).expect("first record");
    assert!(first.trim_start().starts_with('{'));
    // Closing the read end mid-stream must not crash the process.
    drop(reader);
    let status = child.wait().expect("process exits");
    assert_eq!(status.code(), Some(0));
    let mut err = String::new();
    std::io::Read::read_to_string(&mut child.stderr.take().unwrap(), &mut err).unwrap();
    assert!(!err.contains("panicked"), "stderr: {err}");
}
