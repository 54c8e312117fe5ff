use std::process::Command;

use affvoa_cli::args::Cli;
use affvoa_cli::report::Report;
use affvoa_cli::{execute, run, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, SCHEMA_VERSION, THREADS_ENV};
use clap::Parser;

const CORPUS: &[&[&str]] = &[
    &["verify-singular", "--family", "al", "--l", "3"],
    &["verify-singular", "--family", "a2-psi", "--n", "2"],
    &["singular-space", "--l", "2", "--level", "-1", "--degree", "3"],
    &["char", "--l", "2", "--max-degree", "3"],
    &["zhu-image", "--family", "a2", "--n", "1"],
    &["extract-p0", "--family", "al", "--l", "3"],
    &["classify", "--family", "a2", "--n", "2"],
    &["classify", "--family", "al", "--l", "3", "--source", "computed"],
    &["dims", "--l", "3", "--weight", "0,2,0", "--multiplicities"],
    &["branch", "--l", "4", "--weight", "0,1,1,0"],
    &["check-lemma64", "--n", "1"],
    &["check-identities", "--cases", "20", "--max-rank", "2", "--max-exp", "2"],
];

fn argv<'a>(json: bool, args: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec!["affvoa"];
    if json {
        v.push("--json");
    }
    v.extend_from_slice(args);
    v
}

#[test]
fn json_roundtrips_to_the_in_memory_report() {
    for args in CORPUS {
        let cli = Cli::try_parse_from(argv(false, args)).unwrap();
        let direct = execute(&cli.command, cli.cap).unwrap();
        let out = run(argv(true, args));
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["schema"], SCHEMA_VERSION);
        assert_eq!(v["command"], args[0]);
        assert_eq!(v["params"]["cap"], 100_000);
        let back = Report::from_json(args[0], v["result"].clone()).unwrap();
        assert_eq!(back, direct, "{args:?}");
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in CORPUS {
        for json in [false, true] {
            let a = run(argv(json, args));
            let b = run(argv(json, args));
            assert_eq!(a, b, "{args:?}");
            let c = run([&["affvoa", "--threads", "3"][..], &argv(json, args)[1..]].concat());
            assert_eq!(a.stdout, c.stdout, "{args:?} with three threads");
        }
    }
}

#[test]
fn documented_examples() {
    let out = run(["affvoa", "--json", "verify-singular", "--family", "a2", "--n", "1"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"]["singular"], true);

    let out = run(["affvoa", "--json", "char", "--l", "2", "--max-degree", "3"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"]["coefficients"], serde_json::json!([1, 8, 44, 192]));

    let out = run(["affvoa", "--json", "classify", "--family", "a2", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"]["families"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["affvoa", "frobnicate"][..],
        &["affvoa", "verify-singular", "--family", "al"],
        &["affvoa", "verify-singular", "--family", "al", "--l", "3", "--bogus"],
        &["affvoa", "verify-singular", "--family", "al", "--l", "2"],
        &["affvoa", "dims", "--l", "3", "--weight", "1,2"],
        &["affvoa", "char", "--l", "0", "--max-degree", "2"],
        &["affvoa", "--threads", "0", "char", "--l", "1", "--max-degree", "2"],
    ] {
        let out = run(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn cap_violation_reports_the_cap() {
    let out = run(["affvoa", "--cap", "50", "singular-space", "--l", "2", "--level", "-1", "--degree", "3"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("50"), "{}", out.stderr);
}

#[test]
fn verification_failure_exits_two() {
    // v_{3,1} is singular only at level −1
    let out = run(["affvoa", "verify-singular", "--family", "al", "--l", "3", "--level", "0"]);
    assert_eq!(out.code, EXIT_VERIFICATION, "{}", out.stdout);
    assert!(out.stderr.contains("verify-singular"));
    let out = run(["affvoa", "--json", "verify-singular", "--family", "a2", "--n", "2", "--level", "-1"]);
    assert_eq!(out.code, EXIT_VERIFICATION);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"]["singular"], false);
    assert_eq!(v["params"]["level"], "-1");
    let out = run(["affvoa", "verify-singular", "--family", "al", "--l", "3", "--level", "-1"]);
    assert_eq!(out.code, EXIT_OK);
}

#[test]
fn binary_exit_codes_and_env_threads() {
    let bin = env!("CARGO_BIN_EXE_affvoa");
    let ok = Command::new(bin).args(["char", "--l", "1", "--max-degree", "2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(ok.stdout).unwrap().ends_with("1 3 9\n"));
    let bad = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let env = Command::new(bin).env(THREADS_ENV, "x").args(["char", "--l", "1", "--max-degree", "1"]).output().unwrap();
    assert_eq!(env.status.code(), Some(EXIT_USAGE));
    let env = Command::new(bin).env(THREADS_ENV, "2").args(["char", "--l", "1", "--max-degree", "1"]).output().unwrap();
    assert_eq!(env.status.code(), Some(EXIT_OK));
}
