//! End-to-end tests of the binary: output bytes, exit codes, and the
//! environment-variable bound override.

use std::process::{Command, Output};

fn qcatalan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcatalan"))
        .args(args)
        .env_remove("QCAT_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn compute_inv_family() {
    let out = qcatalan(&["compute", "I", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "t^3 + q^2*t^2 + 2*q*t^2 + q^2*t\n");
}

#[test]
fn compute_signed_family() {
    let out = qcatalan(&["compute", "signed", "4"]);
    assert_eq!(stdout(&out), "t^4 - 2*t^3 + 2*t^2 - t\n");
}

#[test]
fn compute_descent_slice_reports_shape_flags() {
    let out = qcatalan(&["compute", "A", "6", "2"]);
    let text = stdout(&out);
    assert!(text.contains("symmetric: true"));
    assert!(text.contains("unimodal: true"));
    assert!(text.contains("log-concave: false"));
}

#[test]
fn compute_output_is_deterministic() {
    let a = stdout(&qcatalan(&["compute", "M", "7", "--format", "csv"]));
    let b = stdout(&qcatalan(&["compute", "M", "7", "--format", "csv"]));
    assert_eq!(a, b);
    assert!(a.starts_with("q,t,x,coef\n"));
}

#[test]
fn compute_json_round_trips() {
    let out = qcatalan(&["compute", "Iqtx", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["family"], "Iqtx");
    assert_eq!(v["n"], 4);
    assert!(v["terms"].is_array());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qcatalan(&["compute", "Z", "3"]).status.code(), Some(2));
    assert_eq!(qcatalan(&["compute", "A", "3"]).status.code(), Some(2));
    assert_eq!(qcatalan(&["compute", "I", "3", "1"]).status.code(), Some(2));
    assert_eq!(qcatalan(&["compute", "P", "0"]).status.code(), Some(2));
    assert_eq!(qcatalan(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(qcatalan(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn table_narayana_triangle() {
    let out = qcatalan(&["table", "narayana", "5", "--format", "csv"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "n,t^5,t^4,t^3,t^2,t,1");
    assert_eq!(text.lines().last().unwrap(), "5,1,10,20,10,1,0");
}

#[test]
fn table_signed_rows_show_alternating_signs() {
    let out = qcatalan(&["table", "signed", "6"]);
    let text = stdout(&out);
    assert!(text.contains("signed(4) = t^4 - 2*t^3 + 2*t^2 - t"));
}

#[test]
fn table_of_size_zero() {
    let out = qcatalan(&["table", "I", "0"]);
    assert_eq!(stdout(&out), "I(0) = 1\n");
}

#[test]
fn verify_single_check_passes() {
    let out = qcatalan(&["verify", "sumpeaks-sumtunnels", "--max-n", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass  sumpeaks-sumtunnels (n <= 6)"));
}

#[test]
fn verify_unimodality_at_full_range() {
    let out = qcatalan(&["verify", "unimodality", "--max-n", "10"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass  unimodality (n <= 10)"));
}

#[test]
fn verify_flag_form_and_json() {
    let out = qcatalan(&["verify", "--check", "narayana", "--max-n", "5", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v[0]["name"], "narayana");
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["max_n"], 5);
}

#[test]
fn verify_failure_exits_1_with_counterexample() {
    // clamping log-concavity below its witness is a contract failure
    let out = qcatalan(&["verify", "log-concavity", "--max-n", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v[0]["status"], "fail");
    assert!(v[0]["counterexample"].is_string());
}

#[test]
fn verify_env_bound_with_flag_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_qcatalan"))
        .args(["verify", "counts"])
        .env("QCAT_MAX_N", "4")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(stdout(&out).contains("(n <= 4)"));

    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_qcatalan"))
        .args(["verify", "counts", "--max-n", "5"])
        .env("QCAT_MAX_N", "4")
        .output()
        .expect("binary runs");
    assert!(stdout(&out).contains("(n <= 5)"));

    // a malformed environment value is a usage error when consulted
    let out = Command::new(env!("CARGO_BIN_EXE_qcatalan"))
        .args(["verify", "counts"])
        .env("QCAT_MAX_N", "many")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_at_desk_scale() {
    let out = qcatalan(&["verify", "all", "--max-n", "8"]);
    assert!(out.status.success(), "verify all --max-n 8 must exit 0");
    let text = stdout(&out);
    assert!(text.contains("checks passed"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_list_enumerates_checks() {
    let out = qcatalan(&["verify", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("sumpeaks-sumtunnels"));
    assert!(text.contains("unimodality"));
}
