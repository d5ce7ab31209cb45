//! Acceptance suite: every check runs at its documented corpus size and
//! tolerance and prints one pass/fail line (visible under --nocapture).
//!
//! The randomized runners honor TOEPLITZ_LAB_SEED for reproducibility.

use toeplitz_lab::verify::{self, CheckOutcome};

fn report(n: usize, outcome: CheckOutcome) {
    let status = if outcome.passed { "PASS" } else { "FAIL" };
    println!("criterion {n:2} {status} {} — {}", outcome.name, outcome.detail);
    assert!(outcome.passed, "criterion {n} failed: {}", outcome.detail);
}

fn seed() -> u64 {
    verify::default_seed()
}

#[test]
fn criterion_01_helson_family() {
    report(1, verify::criterion_helson_family());
}

#[test]
fn criterion_02_quadratic_family() {
    report(2, verify::criterion_quadratic_family());
}

#[test]
fn criterion_03_adjoint_pairing_identity() {
    report(3, verify::criterion_adjoint_pairing(seed(), 200));
}

#[test]
fn criterion_04_compression_vs_division() {
    report(4, verify::criterion_compression_oracle(seed(), 100));
}

#[test]
fn criterion_05_adjoint_kernel_formulas() {
    report(5, verify::criterion_adjoint_kernel_grid());
}

#[test]
fn criterion_06_root_location_engine() {
    report(6, verify::criterion_root_location(seed(), 500));
}

#[test]
fn criterion_07_symmetry_criteria_equivalence() {
    report(7, verify::criterion_symmetry_equivalence(seed(), 100));
}

#[test]
fn criterion_08_parity_and_shortcut_corollaries() {
    report(8, verify::criterion_parity_and_shortcut(seed(), 100));
}

#[test]
fn criterion_09_fejer_riesz_canonical_form() {
    report(9, verify::criterion_fejer_riesz(seed(), 50));
}

#[test]
fn criterion_10_szego_eigenrelation() {
    report(10, verify::criterion_szego(seed(), 50));
}

#[test]
fn criterion_11_sarason_axiom_probes() {
    report(11, verify::criterion_sarason_axioms(seed(), 100));
}
