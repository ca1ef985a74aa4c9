//! CLI contract tests: exit codes, output formats, reproducibility.

use std::process::{Command, Output};

use serde_json::Value;

fn linbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn analyze_json_output_parses_and_reproduces() {
    let args = [
        "analyze",
        "--block-bits",
        "64",
        "--group",
        "alt",
        "--format",
        "json",
    ];
    let first = linbound(&args);
    assert!(first.status.success());
    let report: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["block_bits"], 64);
    assert_eq!(report["group"], "alt");
    assert_eq!(report["engines"]["elementary"]["m_min"], 33);
    assert_eq!(report["precision_bits"], 128);
    assert!(report["m_final"].as_u64().unwrap() >= 33);

    // byte-identical across runs
    let second = linbound(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn analyze_text_mentions_every_engine() {
    let out = linbound(&["analyze", "--block-bits", "128", "--group", "sym"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for engine in ["elementary", "stirling", "order-analytic"] {
        assert!(text.contains(engine), "missing {engine} in:\n{text}");
    }
    assert!(text.contains("m_final"));
}

#[test]
fn analyze_rejects_bad_inputs_with_usage_exit() {
    // block width below the engine preconditions
    let out = linbound(&["analyze", "--block-bits", "6", "--group", "alt"]);
    assert_eq!(out.status.code(), Some(4));

    // unknown engine name
    let out = linbound(&[
        "analyze",
        "--block-bits",
        "128",
        "--group",
        "alt",
        "--engines",
        "bogus",
    ]);
    assert_eq!(out.status.code(), Some(4));

    // clap-level parse failure
    let out = linbound(&["analyze", "--block-bits", "not-a-number", "--group", "alt"]);
    assert_eq!(out.status.code(), Some(4));

    // unknown subcommand
    let out = linbound(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn verify_lemma31_passes_with_exit_zero() {
    let out = linbound(&["verify", "--suite", "lemma31"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS  lemma31/induction-step-2-to-128"));
    assert!(text.contains("all 6 checks passed"));
}

#[test]
fn verify_json_is_structured() {
    let out = linbound(&["verify", "--suite", "thm43", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"].as_bool().unwrap()));
    assert!(checks.iter().any(|c| c["name"] == "thm43/epsilon-window"));
}

#[test]
fn oracle_landau_cap_is_a_usage_error() {
    let out = linbound(&["oracle", "landau", "--points", "81"]);
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("capability"));
}

#[test]
fn oracle_gl_cap_is_a_usage_error() {
    let out = linbound(&["oracle", "gl-max-order", "--dim", "6"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn preset_json_and_errors() {
    let out = linbound(&["preset", "kasumi", "--format", "json"]);
    assert!(out.status.success());
    let preset: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(preset["block_bits"], 64);
    assert_eq!(preset["group"], "alt");
    assert!(preset["provenance"]
        .as_str()
        .unwrap()
        .contains("Alt(F2^64)"));

    let out = linbound(&["preset", "des"]);
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("aes, serpent, kasumi, gost-extension"));
}

#[test]
fn help_exits_zero() {
    let out = linbound(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
