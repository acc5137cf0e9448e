use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn regrade(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regrade")).args(args).env_remove("REGRADE_MAX_N").output().expect("spawn regrade")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn fixture(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn group_info_reports_order_and_sum() {
    let out = regrade(&["group", "info", "2x2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["order"], 4);
    assert_eq!(v["exponent"], 2);
    assert_eq!(v["elements"].as_array().unwrap().len(), 4);
}

#[test]
fn twisted_group_algebras_are_regular_and_minimal() {
    let out = regrade(&["regular", "twisted:pauli:3"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["regular"], true);
    assert_eq!(v["minimal"], true);
    assert_eq!(v["exp_prediction"], 9);
    assert_eq!(v["condition_i"]["status"], "verified");
    assert_eq!(v["structure"]["all_hold"], true);
}

#[test]
fn explicit_check_subcommand_matches_shorthand() {
    let a = json(&regrade(&["regular", "check", "pauli:2"]));
    let b = json(&regrade(&["regular", "pauli:2"]));
    assert_eq!(a, b);
}

#[test]
fn second_example_fails_condition_ii_at_t_t() {
    let out = regrade(&["regular", "paperA2"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["regular"], false);
    assert_eq!(v["condition_i"]["status"], "verified");
    assert_eq!(v["condition_ii"]["holds"], false);
    assert_eq!(v["condition_ii"]["witness"], serde_json::json!(["t", "t"]));
}

#[test]
fn state_cap_leaves_grassmann_undecided_with_exit_zero() {
    let out = regrade(&["regular", "grassmann:3", "--state-cap", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["condition_i"]["status"], "undecided");
    assert!(v["regular"].is_null());
    assert!(v["exp_prediction"].is_null());
}

#[test]
fn grassmann_fails_condition_i() {
    let out = regrade(&["regular", "grassmann:2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["condition_i"]["status"], "fails");
}

#[test]
fn matrix_of_trivial_grading_is_not_minimal() {
    let out = regrade(&["regular", "matrix", "twisted:trivial:2"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["minimal"], false);
    assert_eq!(v["det"]["conductor"], 1);
}

#[test]
fn matrix_of_pauli_is_minimal_with_nonzero_det() {
    let out = regrade(&["regular", "matrix", "pauli:2", "--format", "text"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("det -16"), "{text}");
    assert!(text.contains("minimal true"), "{text}");
}

#[test]
fn codim_of_twisted_tensor_local_doubles() {
    let out = regrade(&["codim", "tensor(twisted:trivial:2,local:1,1)", "--max-n", "4"]);
    assert_eq!(code(&out), 0);
    let seq: Vec<u64> = json(&out).as_array().unwrap().iter().map(|r| r["graded"].as_u64().unwrap()).collect();
    assert_eq!(seq, vec![2, 4, 8, 16]);
}

#[test]
fn codim_over_klein_group_quadruples() {
    let out = regrade(&["codim", "tensor(twisted:pauli2,local:1,1)", "--max-n", "3"]);
    assert_eq!(code(&out), 0);
    let seq: Vec<u64> = json(&out).as_array().unwrap().iter().map(|r| r["graded"].as_u64().unwrap()).collect();
    assert_eq!(seq, vec![4, 16, 64]);
}

#[test]
fn codim_ordinary_and_nonzero_filter() {
    let out = regrade(&["codim", "grassmann:2", "--max-n", "3", "--ordinary", "--tuples", "nonzero"]);
    assert_eq!(code(&out), 0);
    let rows = json(&out);
    for row in rows.as_array().unwrap() {
        assert!(row["ordinary"].as_u64().unwrap() <= row["graded"].as_u64().unwrap());
        assert!(row["per_tuple"].as_object().unwrap().values().all(|r| r.as_u64().unwrap() > 0));
    }
}

#[test]
fn codim_above_cap_is_an_input_error() {
    let out = regrade(&["codim", "field", "--max-n", "7"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("REGRADE_MAX_N"));
}

#[test]
fn codim_cap_can_be_raised_by_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_regrade"))
        .args(["codim", "field", "--max-n", "7"])
        .env("REGRADE_MAX_N", "7")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn export_round_trips_through_files() {
    for spec in ["pauli:3", "twisted:std:2,1", "grassmann:2", "local:2,2", "paperB", "dsum(field,field)"] {
        let out = regrade(&["algebra", "export", spec]);
        assert_eq!(code(&out), 0, "{spec}");
        let file = fixture(&String::from_utf8(out.stdout.clone()).unwrap());
        let path = file.path().to_str().unwrap();
        let again = regrade(&["algebra", "export", path]);
        assert_eq!(code(&again), 0, "{spec}: {}", String::from_utf8_lossy(&again.stderr));
        assert_eq!(json(&out), json(&again), "{spec}");
        let direct = json(&regrade(&["regular", spec]));
        let via_file = json(&regrade(&["regular", path]));
        assert_eq!(direct["regular"], via_file["regular"], "{spec}");
    }
}

#[test]
fn decimal_flag_adds_approximations() {
    let out = regrade(&["--decimal", "pairing", "check", "pauli:3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["bicharacter"][1][2].get("approx").is_some());
}

#[test]
fn pairing_check_reports_cocycle_data() {
    let out = regrade(&["pairing", "check", "std:2,1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["kind"], "cocycle");
    assert!(v["regular_elements"].is_array());
}

#[test]
fn invalid_bicharacter_file_exits_one() {
    let file = fixture(r#"{"kind":"bicharacter","group":{"moduli":[2]},"table":[[1,1],[1,2]]}"#);
    let out = regrade(&["pairing", "check", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["valid"], false);
}

#[test]
fn malformed_json_reports_line_and_column() {
    let file = fixture("{\n  \"kind\": \"bicharacter\",\n  \"group\": [2\n");
    let out = regrade(&["pairing", "check", file.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line") && err.contains("column"), "{err}");
}

#[test]
fn unknown_specs_and_usage_errors_exit_two() {
    assert_eq!(code(&regrade(&["regular", "nonsense:7"])), 2);
    assert_eq!(code(&regrade(&["algebra", "validate", "/no/such/file.json"])), 2);
    assert_eq!(code(&regrade(&["frobnicate"])), 2);
    assert_eq!(code(&regrade(&["verify", "c99"])), 2);
}

#[test]
fn radical_of_grassmann_is_graded() {
    let out = regrade(&["algebra", "radical", "grassmann:2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["graded"], true);
    assert_eq!(v["degree_zero_identity"], true);
}

#[test]
fn verify_single_criterion_prints_pass_line() {
    let out = regrade(&["verify", "1", "--format", "text"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS [ 1]"));
}
