//! End-to-end tests of the binary: spec'd invocations, golden results,
//! determinism of the result document, and the error contract.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ddaha"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn result_of(output: &Output) -> Value {
    assert!(
        !output.stdout.is_empty(),
        "no stdout; stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    let doc: Value = serde_json::from_slice(&output.stdout).expect("valid JSON");
    doc["result"].clone()
}

fn golden(name: &str) -> Value {
    let path = format!("{}/tests/golden/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {path}"));
    serde_json::from_str(&text).expect("valid golden JSON")
}

#[test]
fn weyl_word_reduces_to_translation() {
    let out = run(&["weyl", "--N", "2", "--word", "pi,s1", "--reduce"]);
    assert!(out.status.success());
    let result = result_of(&out);
    assert_eq!(result["element"]["eta"], serde_json::json!([1, 0]));
    assert_eq!(result["element"]["window"], serde_json::json!([1, 2]));
    assert_eq!(result["length"], serde_json::json!(1));
    assert_eq!(result, golden("weyl_pi_s1"));
}

#[test]
fn weyl_sorting_window_golden() {
    // the nine-entry sorting example: window 9,1,2,6,7,8,3,4,5
    let out = run(&[
        "weyl",
        "--N",
        "9",
        "--word",
        "t[7 1 1 4 4 4 1 1 1]",
        "--reduce",
    ]);
    assert!(out.status.success());
    let result = result_of(&out);
    // gamma_eta is the shortest sorter: recover it through the library
    let eta = vec![7i64, 1, 1, 4, 4, 4, 1, 1, 1];
    let gamma = ddaha::weyl::gamma_eta(&eta);
    let window: Vec<usize> = gamma.window().iter().map(|&w| w + 1).collect();
    assert_eq!(window, vec![9, 1, 2, 6, 7, 8, 3, 4, 5]);
    // and the CLI agrees with the library on the translation's length
    let expected = ddaha::weyl::AffineWeylElement::translation(eta).length();
    assert_eq!(result["length"], serde_json::json!(expected));
}

#[test]
fn char_two_cells_gives_q_on_both_sides() {
    let out = run(&[
        "char", "--m", "2", "--level", "1", "--mu", "0,0", "--beta", "1,1", "--N", "2",
        "--q-cutoff", "10",
    ]);
    assert!(out.status.success(), "exit: {:?}", out.status);
    let result = result_of(&out);
    assert_eq!(result["f_tableaux"]["coeffs"], serde_json::json!({"1": "1"}));
    assert_eq!(result["f_alternating"]["coeffs"], serde_json::json!({"1": "1"}));
    assert_eq!(result["identity_holds_mod_cutoff"], serde_json::json!(true));
    assert_eq!(result, golden("char_two_cells"));
}

#[test]
fn verify_relations_custom_sizes_pass() {
    let out = run(&[
        "verify", "--suite", "relations", "--N", "3", "--kappa", "5/2", "--degree", "3",
    ]);
    assert!(out.status.success());
    let result = result_of(&out);
    assert_eq!(result["pass"], serde_json::json!(true));
}

#[test]
fn dunkl_apply_golden() {
    // D_{e_1} z_1 = (kappa + 1/2) z_1 at kappa = 3
    let out = run(&["dunkl", "--N", "2", "--kappa", "3", "--xi", "1", "--monomial", "1,0"]);
    assert!(out.status.success());
    let result = result_of(&out);
    assert_eq!(
        result["image"]["terms"],
        serde_json::json!([{"exp": [1, 0], "coeff": "7/2"}])
    );
}

#[test]
fn tableaux_unique_restricted_case() {
    let out = run(&[
        "tableaux", "--m", "2", "--level", "1", "--mu", "0,0", "--beta", "1,1", "--N", "2",
        "--standard", "--restricted",
    ]);
    assert!(out.status.success());
    let result = result_of(&out);
    assert_eq!(result["count"], serde_json::json!(1));
    assert_eq!(result["tableaux"][0]["d"], serde_json::json!(1));
    assert_eq!(result, golden("tableaux_two_cells"));
}

#[test]
fn invalid_input_exits_two_with_error_object() {
    let out = run(&["cosets", "--N", "3", "--beta", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert!(doc["error"]["message"].is_string());
    assert_eq!(doc["error"]["code"], serde_json::json!(2));
}

#[test]
fn result_documents_are_deterministic() {
    let args = [
        "char", "--m", "2", "--level", "2", "--mu", "1,0", "--beta", "2,1", "--N", "3",
        "--q-cutoff", "15",
    ];
    let first = result_of(&run(&args));
    let second = result_of(&run(&args));
    assert_eq!(first, second);
}

#[test]
fn thread_count_does_not_change_results() {
    let base = [
        "char", "--m", "2", "--level", "1", "--mu", "0,0", "--beta", "1,1", "--N", "4",
        "--q-cutoff", "12",
    ];
    let single = result_of(&run(&base));
    let mut threaded: Vec<&str> = base.to_vec();
    threaded.extend(["--threads", "2"]);
    let multi = result_of(&run(&threaded));
    assert_eq!(single, multi);
}

#[test]
fn verify_suite_golden_values() {
    let out = run(&["verify", "--suite", "golden"]);
    assert!(out.status.success());
    let result = result_of(&out);
    assert_eq!(result[0]["pass"], serde_json::json!(true));
}
