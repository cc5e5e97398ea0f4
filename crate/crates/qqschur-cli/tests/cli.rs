//! End-to-end checks of the binary: exit codes, determinism, and a golden
//! output.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qqschur"))
}

#[test]
fn verify_suite_passes() {
    let out = bin()
        .args(["--r", "2", "verify", "worked-examples"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{:?}", out);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pass"), "{}", text);
}

#[test]
fn invalid_configuration_is_rejected() {
    let out = bin().args(["--r", "9", "dims"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("allow-large"), "{}", err);

    let out = bin()
        .args(["--r", "2", "--char", "6", "dims"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin()
        .args(["--r", "2", "dims", "--shape", "((3),())"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "size mismatch must be rejected");
}

#[test]
fn unknown_suite_is_rejected() {
    let out = bin()
        .args(["--r", "2", "verify", "bogus"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dims_golden_and_deterministic() {
    let run = || {
        let out = bin().args(["--r", "2", "dims"]).output().unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let first = run();
    assert_eq!(first, run(), "identical configs must emit identical bytes");
    let expect = "\
((2),())  M=1 S=1 W=9 F=9
((1,1),())  M=2 S=1 W=3 F=3
((1),(1))  M=4 S=2 W=6 F=6
((),(2))  M=4 S=1 W=4 F=4
((),(1,1))  M=8 S=1 W=1 F=1
";
    assert_eq!(first, expect);
}

#[test]
fn hom_reports_matching_dimensions() {
    let out = bin()
        .args([
            "--r",
            "2",
            "--format",
            "json",
            "hom",
            "--lambda",
            "((1),(1))",
            "--mu",
            "((1),(1))",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["basis_size"], 3);
    assert_eq!(v["oracle_dimension"], 3);
}
