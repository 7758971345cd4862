//! Behavior of the JSON command-line interface: output schema, exit codes,
//! element parsing, and the Bernoulli cache.

use cyclonomy_cli::execute_str;
use serde_json::Value;

fn run(args: &[&str]) -> (Value, i32) {
    let mut argv = vec!["cyclonomy"];
    argv.extend_from_slice(args);
    let (output, code) = execute_str(&argv);
    let value: Value = serde_json::from_str(&output)
        .unwrap_or_else(|e| panic!("invalid JSON from {args:?}: {e}\n{output}"));
    (value, code)
}

#[test]
fn norm_of_lambda_is_five() {
    let (v, code) = run(&["norm", "-p", "5", "--", "-1,1,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["ok"], true);
    assert_eq!(v["data"]["value"], "5");
}

#[test]
fn trace_of_zeta() {
    let (v, code) = run(&["trace", "-p", "5", "0,1,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["value"], "-1");
}

#[test]
fn norm_accepts_rational_elements() {
    let (v, code) = run(&["norm", "-p", "3", "1/2,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["value"], "1/4");
}

#[test]
fn regular_37_reports_the_pair_and_exits_zero() {
    let (v, code) = run(&["regular", "37"]);
    assert_eq!(code, 0, "irregularity is a finding, not an error");
    assert_eq!(v["ok"], true);
    assert_eq!(v["data"]["p"], 37);
    assert_eq!(v["data"]["regular"], false);
    assert_eq!(v["data"]["irregular_pairs"], serde_json::json!([[37, 32]]));
}

#[test]
fn regular_37_fails_when_flagged() {
    let (v, code) = run(&["regular", "37", "--fail-on-irregular"]);
    assert_eq!(code, 1);
    assert_eq!(v["ok"], false);
    assert_eq!(v["error"]["code"], "FoundIrregular");
}

#[test]
fn regular_rejects_composites_with_module_error_code() {
    let (v, code) = run(&["regular", "4"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "NotAnOddPrime");
}

#[test]
fn regular_range_reports() {
    let (v, code) = run(&["regular-range", "3", "30"]);
    assert_eq!(code, 0);
    let reports = v["data"]["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 9); // odd primes up to 30, plus none irregular
    assert!(reports.iter().all(|r| r["regular"] == true));
}

#[test]
fn bernoulli_values_are_decimal_strings() {
    let (v, code) = run(&["bernoulli", "12"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["n"], 12);
    assert_eq!(v["data"]["numerator"], "-691");
    assert_eq!(v["data"]["denominator"], "2730");
}

#[test]
fn wrong_length_elements_name_the_expected_count() {
    let (v, code) = run(&["norm", "-p", "5", "1,2,3"]);
    assert_eq!(code, 2, "malformed elements are usage errors");
    assert_eq!(v["error"]["code"], "InvalidElement");
    let message = v["error"]["message"].as_str().unwrap();
    assert!(message.contains("p-1 = 4"), "message: {message}");
}

#[test]
fn unknown_subcommands_are_usage_errors() {
    let (v, code) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "Usage");
}

#[test]
fn pretty_output_is_the_same_document() {
    let (compact, code_a) = run(&["split", "-p", "5", "-q", "11"]);
    let (pretty, code_b) = run(&["split", "-p", "5", "-q", "11", "--pretty"]);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(compact, pretty);
}

#[test]
fn split_examples() {
    let (v, _) = run(&["split", "-p", "5", "-q", "11"]);
    assert_eq!(v["data"]["e"], 1);
    assert_eq!(v["data"]["f"], 1);
    assert_eq!(v["data"]["g"], 4);
    assert_eq!(
        v["data"]["norms"],
        serde_json::json!(["11", "11", "11", "11"])
    );

    let (v, _) = run(&["split", "-p", "5", "-q", "5"]);
    assert_eq!(v["data"]["e"], 4);
    assert_eq!(v["data"]["norms"], serde_json::json!(["5"]));

    let (v, code) = run(&["split", "-p", "5", "-q", "6"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "NotPrime");
}

#[test]
fn classify_examples() {
    let (v, _) = run(&["classify", "-p", "3", "1", "2", "4"]);
    assert_eq!(v["data"]["case"], "CaseI");
    let (v, _) = run(&["classify", "-p", "3", "3", "4", "5"]);
    assert_eq!(v["data"]["case"], "CaseII");
    let (v, _) = run(&["classify", "-p", "3", "0", "1", "1"]);
    assert_eq!(v["data"]["case"], "Degenerate");
    // negative entries ride behind the positional separator
    let (v, code) = run(&["classify", "-p", "3", "--", "-3", "4", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["case"], "CaseII");
}

#[test]
fn qtable_frozen_example() {
    let (v, code) = run(&["qtable", "-p", "3", "--x", "1,0", "--y", "2,0"]);
    assert_eq!(code, 0);
    let entries = v["data"]["entries"].as_array().unwrap();
    let residues: Vec<u64> = entries
        .iter()
        .map(|e| e["residue"].as_u64().unwrap())
        .collect();
    assert_eq!(residues, vec![0, 2, 1]);
    assert_eq!(entries[0]["quotient"], serde_json::json!(["-2", "-1"]));
    assert_eq!(v["data"]["eta_zero"], 0);

    let (v, code) = run(&["qtable", "-p", "3", "--x", "1,0", "--y", "1,0"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "HypothesisFailed");
}

#[test]
fn hilbert90_rejects_norm_not_one() {
    let (v, code) = run(&["hilbert90", "-p", "5", "--eta", "2,0,0,0"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "NormNotOne");
    assert!(v["error"]["message"].as_str().unwrap().contains("16"));
}

#[test]
fn hilbert90_integral_witness_for_zeta() {
    let (v, code) = run(&["hilbert90", "-p", "5", "--eta", "0,1,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["generator"], 2);
    assert_eq!(v["data"]["verified"], true);
    assert!(v["data"]["epsilon"].is_array());
}

#[test]
fn kummer_check_finds_cube_root_of_minus_one() {
    let (v, code) = run(&[
        "kummer-check",
        "-p",
        "3",
        "--unit",
        "-1,0",
        "--gen",
        "0,1",
        "--bound",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["found"], true);
    assert!(v["data"]["witness"].is_array());

    let (v, code) = run(&[
        "kummer-check",
        "-p",
        "5",
        "--unit",
        "1,1,0,0",
        "--gen",
        "1,1,0,0",
        "--bound",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["found"], false);
    assert_eq!(v["data"]["witness"], Value::Null);

    // lambda is not a unit
    let (v, code) = run(&["kummer-check", "-p", "3", "--unit", "-1,1", "--bound", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "NotAUnit");
}

#[test]
fn unit_decompose_example() {
    let (v, code) = run(&["unit-decompose", "-p", "5", "--unit", "1,1,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["n"], 3);
    assert_eq!(v["data"]["x"], serde_json::json!(["0", "0", "1", "1"]));
}

#[test]
fn class_number_payload() {
    let (v, code) = run(&["class-number", "-p", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["class_number"], 1);
    assert!(v["data"]["minkowski_hi"].is_string());
    assert!(v["data"]["primes_checked"].as_array().unwrap().is_empty());

    let (v, code) = run(&["class-number", "-p", "11"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "UnsupportedPrime");
}

#[test]
fn every_command_round_trips_through_a_json_parser() {
    let commands: &[&[&str]] = &[
        &["regular", "11"],
        &["regular-range", "3", "20"],
        &["bernoulli", "30"],
        &["class-number", "-p", "3"],
        &["split", "-p", "7", "-q", "2"],
        &["flt-search", "-p", "2", "--bound", "10"],
        &["classify", "-p", "5", "1", "2", "3"],
        &["qtable", "-p", "3", "--x", "1,0", "--y", "2,0"],
        &["hilbert90", "-p", "3", "--eta", "0,1"],
        &["kummer-check", "-p", "3", "--unit", "0,1", "--bound", "1"],
        &["unit-decompose", "-p", "5", "--unit", "0,1,0,0"],
        &["norm", "-p", "3", "2,0"],
        &["trace", "-p", "3", "0,1"],
    ];
    for args in commands {
        let (value, code) = run(args);
        assert_eq!(code, 0, "command {args:?} failed: {value}");
        assert_eq!(value["ok"], true);
        assert_eq!(value["command"], args[0]);
        assert!(value["data"].is_object(), "no data for {args:?}");
        assert!(
            value.get("error").is_none(),
            "error populated alongside data"
        );
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bernoulli.json");
    let path_str = path.to_str().unwrap();

    let (_, code) = run(&["bernoulli", "16", "--cache", path_str]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Value = serde_json::from_str(&text).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(rows.len() >= 17);
    assert_eq!(rows[12][0], 12);
    assert_eq!(rows[12][1], "-691");
    assert_eq!(rows[12][2], "2730");

    // a second run consumes the cache and still answers correctly
    let (v, code) = run(&["bernoulli", "12", "--cache", path_str]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["numerator"], "-691");

    // corrupted caches are ignored, never trusted
    std::fs::write(&path, r#"[[2, "999", "1"]]"#).unwrap();
    let (v, code) = run(&["bernoulli", "2", "--cache", path_str]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["numerator"], "1");
    assert_eq!(v["data"]["denominator"], "6");
}

#[test]
fn cache_path_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env-cache.json");
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_cyclonomy"))
        .args(["bernoulli", "10"])
        .env("CYCLONOMY_CACHE", &path)
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    let rows: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(rows.as_array().unwrap().len() >= 11);
}

#[test]
fn binary_produces_the_same_json() {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_cyclonomy"))
        .args(["norm", "-p", "5", "--", "-1,1,0,0"])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    let value: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["data"]["value"], "5");

    let failing = std::process::Command::new(env!("CARGO_BIN_EXE_cyclonomy"))
        .args(["regular", "4"])
        .output()
        .expect("binary runs");
    assert_eq!(failing.status.code(), Some(1));
}

#[test]
fn help_renders_as_plain_text() {
    let (output, code) = execute_str(&["cyclonomy", "--help"]);
    assert_eq!(code, 0);
    assert!(output.contains("regular-range"));
    assert!(output.contains("kummer-check"));
}
