//! End-to-end tests of the `takagi` binary: argument parsing, output text,
//! and the 0/1/2 exit-code contract.

use std::process::{Command, Output};

fn takagi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_takagi"))
        .args(args)
        .output()
        .expect("failed to spawn takagi binary")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn no_arguments_is_a_usage_error() {
    let out = takagi(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_prints_exact_fraction() {
    let out = takagi(&["eval", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1/2"));
    assert!(stdout(&out).contains("agreement"));

    let out = takagi(&["eval", "3", "3", "--route", "definition"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5/8 = 0.625000000000\n");
}

#[test]
fn eval_out_of_range_exits_2() {
    let out = takagi(&["eval", "9", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("domain error"));
}

#[test]
fn delta_methods_agree_on_the_command_line() {
    for method in ["recursive", "closed", "explicit", "tree"] {
        let out = takagi(&["delta", "11", "--method", method]);
        assert_eq!(out.status.code(), Some(0), "method {method}");
        assert_eq!(stdout(&out), "5\n", "method {method}");
    }
}

#[test]
fn s1_methods() {
    for method in ["direct", "takagi", "delta"] {
        let out = takagi(&["s1", "255", "--method", method]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), "8\n");
    }
}

#[test]
fn cumsum_prints_forms_and_float() {
    // S1(100) = S1(64) + sum over [64, 100) of (1 + s1(i - 64))
    //         = 192 + 36 + S1(36) = 316
    let out = takagi(&["cumsum", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("form_a    316"));
    assert!(text.contains("form_b    316"));
    assert!(text.contains("form_c    316"));
    assert!(text.contains("trollope  316.0000"));
}

#[test]
fn verify_single_identity() {
    let out = takagi(&[
        "verify",
        "--id",
        "DELTA_SYMMETRY",
        "--lo",
        "1",
        "--hi",
        "1024",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("DELTA_SYMMETRY"));
    assert!(text.contains("checked=1024"));
    assert!(text.contains("PASS"));

    // positional shorthand produces the same report
    let positional = takagi(&["verify", "DELTA_SYMMETRY", "1", "1024"]);
    assert_eq!(positional.status.code(), Some(0));
    assert_eq!(positional.stdout, out.stdout);
}

#[test]
fn verify_unknown_identity_exits_2() {
    let out = takagi(&["verify", "--id", "BOGUS", "--lo", "1", "--hi", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown identity id"));
}

#[test]
fn verify_clamps_ranges_to_each_identity_cap() {
    // one blanket range across mixed n-/k-ranged identities: each identity
    // is clamped to its own cap, and the effective range is printed
    let out = takagi(&[
        "verify",
        "--id",
        "TAKAGI_FIVE_WAY",
        "--lo",
        "1",
        "--hi",
        "64",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("k=[1,20]"));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn verify_all_with_blanket_range() {
    let out = takagi(&["verify", "all", "1", "4096"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 19);
    assert!(text.lines().all(|l| l.contains("PASS")));
    assert!(text.contains("DELTA_VS_TREE_ORACLE       n=[1,4096]  checked=4096  PASS"));
}

#[test]
fn tree_dot_labels() {
    let out = takagi(&["tree-dot", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches(" S\"").count(), 3);
    assert_eq!(text.matches(" D\"").count(), 0);

    let out = takagi(&["tree-dot", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dilation_csv_cap() {
    let out = takagi(&["dilation-csv", "21"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identities_lists_the_catalog() {
    let out = takagi(&["identities"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 19);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["eval", "7", "4"],
        vec!["cumsum", "1000"],
        vec!["tree-dot", "17"],
        vec!["identities"],
    ] {
        let a = takagi(&args);
        let b = takagi(&args);
        assert_eq!(a.stdout, b.stdout, "args: {args:?}");
    }
}
