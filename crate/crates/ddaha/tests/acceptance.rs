//! Acceptance suite: every verification criterion, exact arithmetic,
//! zero tolerance. Each test prints its one-line PASS/FAIL summary
//! (visible with `cargo test --test acceptance -- --nocapture`).

use ddaha::verify::{self, CriterionReport};

fn run(report: CriterionReport) {
    println!("{}", report.line());
    for failure in report.failures.iter().take(10) {
        println!("    {failure}");
    }
    assert!(report.pass, "{}", report.line());
}

#[test]
fn criterion_1_relation_suite() {
    run(verify::criterion_1_relations());
}

#[test]
fn criterion_2_coset_combinatorics() {
    run(verify::criterion_2_cosets());
}

#[test]
fn criterion_3_generic_structure() {
    run(verify::criterion_3_generic());
}

#[test]
fn criterion_4_finite_quotient_dimension() {
    run(verify::criterion_4_quotients());
}

#[test]
fn criterion_5_character_identity() {
    run(verify::criterion_5_characters());
}

#[test]
fn criterion_6_independence_theorem() {
    run(verify::criterion_6_independence());
}

#[test]
fn criterion_7_q_multinomial_law() {
    run(verify::criterion_7_qmultinomial());
}

#[test]
fn criterion_8_golden_values() {
    run(verify::criterion_8_golden());
}
