//! The CLI must reuse library operations rather than re-deriving formulas:
//! payload cells are compared against direct library calls.

use std::process::Command;

use appell_core::families;
use appell_core::numeric::{rat_int, Rat};
use appell_core::stirling::stirling_second_triangle;

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let output = Command::new(env!("CARGO_BIN_EXE_appell"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    serde_json::from_slice(&output.stdout).expect("valid json")
}

fn payload(doc: &serde_json::Value) -> Vec<Vec<String>> {
    doc["payload"]
        .as_array()
        .expect("payload array")
        .iter()
        .map(|row| {
            row.as_array()
                .expect("row array")
                .iter()
                .map(|cell| cell.as_str().expect("string cell").to_string())
                .collect()
        })
        .collect()
}

#[test]
fn stirling_payload_matches_library() {
    let doc = stdout_json(&["stirling", "--kind", "second", "--n", "9"]);
    let triangle = stirling_second_triangle(9);
    let expected: Vec<Vec<String>> = triangle
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect();
    assert_eq!(payload(&doc), expected);
}

#[test]
fn family_payload_matches_library() {
    let doc = stdout_json(&["family", "bernoulli", "--t", "3", "--n", "5"]);
    let rows = payload(&doc);
    let seq = families::bernoulli(&rat_int(3), 5);
    let poly = seq.polynomial(5).unwrap();
    let coefficients: Vec<String> = std::iter::once("coefficients".to_string())
        .chain((0..=5).map(|i| poly.coeff(i).to_string()))
        .collect();
    let assoc = families::bernoulli_associated(&rat_int(3), 5);
    let associated: Vec<String> = std::iter::once("associated".to_string())
        .chain(assoc.terms().iter().map(Rat::to_string))
        .collect();
    assert_eq!(rows, vec![coefficients, associated]);
}

#[test]
fn order_zero_family_is_the_monomial() {
    let doc = stdout_json(&["family", "bernoulli", "--t", "0", "--n", "3"]);
    let rows = payload(&doc);
    assert_eq!(rows[0], ["coefficients", "0", "0", "0", "1"]);
    assert_eq!(rows[1], ["associated", "1", "0", "0", "0"]);
}

#[test]
fn daehee_payload_matches_library() {
    let doc = stdout_json(&["daehee", "--m", "3", "--n", "7"]);
    let expected: Vec<Vec<String>> = (0..=7)
        .map(|n| vec![families::daehee_number(3, n).unwrap().to_string()])
        .collect();
    assert_eq!(payload(&doc), expected);
}
