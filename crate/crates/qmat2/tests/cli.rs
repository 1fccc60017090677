//! End-to-end tests of the binary: output formats, the JSON round trip,
//! and the exit-code contract (0 success, 1 identity failure, 2 usage).

use std::process::Command;

use qmat2::QMatrix2;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qmat2"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn power_text_output() {
    let (code, stdout, _) = run(&["power", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "a_2 = a^2 + bc\nb_2 = ab + bd\nc_2 = q^-1 ac + q^-1 cd\nd_2 = bc + d^2\n"
    );
    // n = 0 is the identity matrix under the default brute-force method
    let (code, stdout, _) = run(&["power", "--n", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("a_0 = 1\nb_0 = 0\n"));
    // n = 1 prints the generators for every method
    for method in ["brute", "ch1", "ch2"] {
        let (code, stdout, _) = run(&["power", "--n", "1", "--method", method]);
        assert_eq!(code, 0);
        assert_eq!(stdout, "a_1 = a\nb_1 = b\nc_1 = c\nd_1 = d\n");
    }
}

#[test]
fn power_compare_verdict() {
    let (code, stdout, _) = run(&["power", "--n", "3", "--compare"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("ch1 == ch2 == brute: OK\n"));
}

#[test]
fn power_latex_output() {
    let (code, stdout, _) = run(&["power", "--n", "2", "--format", "latex"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("a_{2} = a^{2} + bc"));
    assert!(stdout.contains("q^{-1} ac"));
}

#[test]
fn power_json_round_trips_byte_identically() {
    let (code, stdout, _) = run(&["power", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let emitted = stdout.trim_end();
    let parsed = QMatrix2::from_json_str(emitted).unwrap();
    assert_eq!(parsed.to_json_string(), emitted);
    assert_eq!(parsed, QMatrix2::generator().pow(3));
}

#[test]
fn fpoly_outputs() {
    let (code, stdout, _) = run(&["fpoly", "--n", "-1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0\n");
    let (code, stdout, _) = run(&["fpoly", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "x^2 - y\n");
    let (code, stdout, _) = run(&["fpoly", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "x^4 - 3x^2 y + y^2\n");
    let (code, stdout, _) = run(&["fpoly", "--n", "6", "--check"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("sum == recurrence: OK\n"));
    let (code, stdout, _) = run(&["fpoly", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim_end(), "{\"n\":3,\"terms\":[[3,0,\"1\"],[1,1,\"-2\"]]}");
}

#[test]
fn verify_passes_and_reports() {
    let (code, stdout, _) = run(&["verify", "--max", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS central_determinant()"));
    assert!(stdout.contains("0 failed"));
    let (code, stdout, _) = run(&["verify", "--max", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let reports: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(reports.as_array().unwrap().iter().all(|r| r["passed"] == true));
}

#[test]
fn verify_at_max_eight_all_pass() {
    let (code, stdout, _) = run(&["verify", "--max", "8"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("0 failed"));
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn vzw_reports_branch_and_verdicts() {
    let (code, stdout, _) = run(&["vzw", "--m", "0", "--n", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("branch: m>=n\n"));
    let (code, stdout, _) = run(&["vzw", "--m", "1", "--n", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS vzw_rel1(1,1)"));
    let (code, stdout, _) = run(&["vzw", "--m", "2", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("branch: m<n\n"));
    assert!(stdout.contains("5 checks, 0 failed"));
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["verify", "--max", "0"],
        &["fpoly", "--n", "-2"],
        &["power", "--n", "0", "--method", "ch1"],
        &["power", "--n", "0", "--method", "ch2"],
        &["power", "--n", "0", "--compare"],
        &["power", "--n", "-3"],
        &["power", "--n", "2", "--format", "yaml"],
        &["power", "--bogus"],
        &["vzw", "--m", "1"],
        &["vzw", "--m", "-1", "--n", "2"],
        &["nonsense"],
    ];
    for args in cases {
        let (code, _, stderr) = run(args);
        assert_eq!(code, 2, "args {args:?} should exit 2; stderr: {stderr}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("power"));
    assert!(stdout.contains("verify"));
}
