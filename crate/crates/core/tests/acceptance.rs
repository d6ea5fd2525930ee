//! Acceptance gate: each criterion runs at its stated limits and prints one
//! PASS/FAIL line. Every test asserts its own criterion.

use foldline_core::verify::{self, CheckOutcome, VerifyConfig};

fn gate(outcome: CheckOutcome) {
    println!("{}", outcome.line());
    for d in &outcome.details {
        println!("       {d}");
    }
    assert!(
        outcome.ok,
        "criterion {} failed: {:?}",
        outcome.id, outcome.details
    );
    assert!(
        outcome.within_limit(),
        "criterion {} took {}ms, limit {}ms",
        outcome.id,
        outcome.elapsed_ms,
        outcome.limit_ms
    );
}

fn cfg() -> VerifyConfig {
    VerifyConfig::default()
}

#[test]
fn criterion_01_chain_b2_from_a3() {
    gate(verify::chain_a3());
}

#[test]
fn criterion_02_chain_b2_from_a4() {
    gate(verify::chain_a4());
}

#[test]
fn criterion_03_closed_form_both_models() {
    gate(verify::closed_form());
}

#[test]
fn criterion_04_tropical_closed_form() {
    gate(verify::tropical_b2(&cfg()));
}

#[test]
fn criterion_05_path_independence() {
    gate(verify::path_independence());
}

#[test]
fn criterion_06_reduced_word_counts() {
    gate(verify::word_counts());
}

#[test]
fn criterion_07_monoid_laws() {
    gate(verify::monoid_laws(&cfg()));
}

#[test]
fn criterion_08_frobenius() {
    gate(verify::frobenius(&cfg()));
}

#[test]
fn criterion_09_crystal_consistency() {
    gate(verify::crystal(&cfg()));
}

#[test]
fn criterion_10_folding_well_defined() {
    gate(verify::folding_well_defined());
}
