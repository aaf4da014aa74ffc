//! End-to-end CLI tests against frozen golden outputs, plus exit-code and
//! determinism contracts. These run the real binary.

use std::io::Write as _;
use std::process::{Command, Output};

use sylvester_cubic_cli::literal::{parse_complex, render_complex};

fn sylcubic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sylcubic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden_path(name: &str) -> String {
    format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn assert_golden(output: &Output, code: i32, stdout_golden: &[u8], stderr_golden: &[u8]) {
    assert_eq!(output.status.code(), Some(code), "exit code");
    assert_eq!(
        output.stdout,
        stdout_golden,
        "stdout mismatch:\n--- got ---\n{}\n--- want ---\n{}",
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(stdout_golden)
    );
    assert_eq!(
        output.stderr,
        stderr_golden,
        "stderr mismatch:\n--- got ---\n{}\n--- want ---\n{}",
        String::from_utf8_lossy(&output.stderr),
        String::from_utf8_lossy(stderr_golden)
    );
}

#[test]
fn golden_solve_binomial_cube() {
    let output = sylcubic(&["solve", "--coeffs", "1,3,3,1"]);
    assert_golden(
        &output,
        0,
        include_bytes!("golden/solve_binomial_cube.stdout"),
        b"",
    );
}

#[test]
fn golden_decompose_generic() {
    let output = sylcubic(&["decompose", "--reduced", "2,6"]);
    assert_golden(
        &output,
        0,
        include_bytes!("golden/decompose_generic.stdout"),
        b"",
    );
}

#[test]
fn golden_solve_degenerate_leading_coefficient() {
    let output = sylcubic(&["solve", "--coeffs", "0,1,2,3"]);
    assert_golden(
        &output,
        3,
        b"",
        include_bytes!("golden/solve_degenerate.stderr"),
    );
}

#[test]
fn golden_batch_single_line() {
    let output = sylcubic(&[
        "solve",
        "--input",
        &golden_path("batch_single_line.input"),
        "--format",
        "jsonl",
    ]);
    assert_golden(
        &output,
        0,
        include_bytes!("golden/batch_single_line.stdout"),
        b"",
    );
}

#[test]
fn golden_batch_comment_and_blank_only() {
    let output = sylcubic(&[
        "solve",
        "--input",
        &golden_path("batch_comment_blank.input"),
        "--format",
        "jsonl",
    ]);
    assert_golden(&output, 0, b"", b"");
}

#[test]
fn golden_batch_degenerate_line_still_exits_zero() {
    let output = sylcubic(&[
        "solve",
        "--input",
        &golden_path("batch_degenerate_line.input"),
        "--format",
        "jsonl",
    ]);
    assert_golden(
        &output,
        0,
        include_bytes!("golden/batch_degenerate_line.stdout"),
        b"",
    );
}

#[test]
fn identical_invocations_are_byte_identical() {
    let first = sylcubic(&["solve", "--coeffs", "2,6i,-1+1i,0", "--format", "jsonl"]);
    let second = sylcubic(&["solve", "--coeffs", "2,6i,-1+1i,0", "--format", "jsonl"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stderr, second.stderr);
}

#[test]
fn jsonl_complex_literals_reparse_to_the_same_value() {
    let output = sylcubic(&["solve", "--coeffs", "3,1,-4,1.5", "--format", "jsonl"]);
    assert_eq!(output.status.code(), Some(0));
    let record: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let mut literals: Vec<String> = Vec::new();
    for key in ["p", "q", "shift"] {
        literals.push(record[key].as_str().unwrap().to_owned());
    }
    for root in record["roots"].as_array().unwrap() {
        literals.push(root.as_str().unwrap().to_owned());
    }
    for key in ["r", "s", "alpha", "beta"] {
        literals.push(record["decomposition"][key].as_str().unwrap().to_owned());
    }
    for text in literals {
        let value = parse_complex(&text).expect("printed literal parses");
        assert_eq!(render_complex(value), text, "round trip changed {text}");
    }
}

#[test]
fn batch_preserves_input_order_on_shuffled_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shuffled.csv");
    let mut file = std::fs::File::create(&path).unwrap();
    // A deterministic pseudo-shuffle of coefficients; also sprinkle comments.
    for i in 0..1_000u64 {
        if i % 97 == 0 {
            writeln!(file, "# block {i}").unwrap();
        }
        let a = 1 + (i * 7919 % 13);
        let b = (i * 104729 % 19) as i64 - 9;
        let c = (i * 1299709 % 23) as i64 - 11;
        let d = (i * 15485863 % 29) as i64 - 14;
        writeln!(file, "{a},{b},{c},{d}").unwrap();
    }
    drop(file);
    let output = sylcubic(&[
        "solve",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "jsonl",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).unwrap();
    let mut previous = 0u64;
    let mut count = 0;
    for line in text.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        let line_no = record["line"].as_u64().unwrap();
        assert!(line_no > previous, "line numbers must increase");
        previous = line_no;
        assert!(record["error"].is_null(), "unexpected error: {record}");
        count += 1;
    }
    assert_eq!(count, 1_000);
}

#[test]
fn csv_format_emits_header_and_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.csv");
    std::fs::write(&path, "1,0,-6,6\n0,1,1,1\n").unwrap();
    let output = sylcubic(&[
        "solve",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("line,a,b,c,d,classification,"));
    assert!(lines[1].starts_with("1,1,0,-6,6,generic,2,6,0,"));
    assert!(lines[2].starts_with("2,0,1,1,1,,,,,"));
    assert!(lines[2].ends_with("leading coefficient is zero"));
}

#[test]
fn unreadable_batch_file_exits_two() {
    let output = sylcubic(&["solve", "--input", "/nonexistent/nope.csv"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(output.stdout.is_empty());
    assert!(!output.stderr.is_empty());
}

#[test]
fn malformed_literal_exits_two_with_offset() {
    let output = sylcubic(&["solve", "--coeffs", "1,1++2i,3,1"]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("offset 2"), "{stderr}");
    assert!(output.stdout.is_empty());
}

#[test]
fn missing_source_is_a_usage_error() {
    let output = sylcubic(&["solve"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn conflicting_sources_are_a_usage_error() {
    let output = sylcubic(&["solve", "--coeffs", "1,0,0,0", "--reduced", "1,2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn out_of_range_flags_are_usage_errors() {
    assert_eq!(
        sylcubic(&["solve", "--coeffs", "1,0,0,0", "--polish", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sylcubic(&["solve", "--coeffs", "1,0,0,0", "--eps-class", "0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sylcubic(&["check", "--reduced", "1,2", "--roots", "1,1,-2", "--tol", "-1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn check_pass_and_fail_exit_codes() {
    let pass = sylcubic(&["check", "--coeffs", "1,3,3,1", "--roots", "-1,-1,-1"]);
    assert_eq!(pass.status.code(), Some(0));
    let stdout = String::from_utf8(pass.stdout).unwrap();
    assert!(stdout.ends_with("PASS (tol 1e-8)\n"), "{stdout}");

    let fail = sylcubic(&["check", "--coeffs", "1,3,3,1", "--roots", "-1,-1,0.5"]);
    assert_eq!(fail.status.code(), Some(4));
    let stdout = String::from_utf8(fail.stdout).unwrap();
    assert!(stdout.ends_with("FAIL (tol 1e-8)\n"), "{stdout}");

    let loose = sylcubic(&[
        "check",
        "--coeffs",
        "1,3,3,1",
        "--roots",
        "-1,-1,0.5",
        "--tol",
        "1",
    ]);
    assert_eq!(loose.status.code(), Some(0));
}

#[test]
fn decompose_on_non_generic_exits_five_and_names_the_branch() {
    let double = sylcubic(&["decompose", "--reduced", "1,2"]);
    assert_eq!(double.status.code(), Some(5));
    let stderr = String::from_utf8(double.stderr).unwrap();
    assert!(stderr.contains("double-resolvent-root"), "{stderr}");

    let pure = sylcubic(&["decompose", "--reduced", "0,8"]);
    assert_eq!(pure.status.code(), Some(5));
    let stderr = String::from_utf8(pure.stderr).unwrap();
    assert!(stderr.contains("pure-cube"), "{stderr}");
}

#[test]
fn solve_reduced_input_omits_depression_record() {
    let output = sylcubic(&["solve", "--reduced", "2,6"]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.starts_with("classification: generic\nroot: "), "{stdout}");
    assert!(!stdout.contains("shift:"));
}

#[test]
fn reduce_prints_only_the_depression_record() {
    let output = sylcubic(&["reduce", "--coeffs", "1,0,-6,6"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        "p: 2\nq: 6\nshift: 0\n"
    );
}

#[test]
fn eps_class_flag_widens_the_double_root_band() {
    // q² − 4p³ relative gap ≈ 1.6e-4: generic by default, double root when
    // the band is widened to 1e-2.
    let strict = sylcubic(&["solve", "--reduced", "1,2.0001"]);
    let stdout = String::from_utf8(strict.stdout).unwrap();
    assert!(stdout.contains("generic"), "{stdout}");

    let widened = sylcubic(&["solve", "--reduced", "1,2.0001", "--eps-class", "1e-2"]);
    let stdout = String::from_utf8(widened.stdout).unwrap();
    assert!(stdout.contains("double-resolvent-root"), "{stdout}");
}
