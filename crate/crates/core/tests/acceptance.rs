//! Acceptance suite: one test per validation criterion, each printing its
//! pass/fail line with the measured error. Run with `--nocapture` to see
//! every line; `cargo test --test acceptance` runs the whole gate.

use tunnel_wkb::validate::{run_criterion, CRITERION_NAMES};

fn check(id: usize) {
    let outcome = run_criterion(id, 1.0);
    println!("{}", outcome.summary_line());
    assert!(
        outcome.passed,
        "criterion {} ({}) failed: measured {:.6e} vs threshold {:.6e}; {}",
        outcome.id, outcome.name, outcome.measured, outcome.threshold, outcome.detail
    );
}

#[test]
fn criterion_01_f2_value() {
    check(1);
}

#[test]
fn criterion_02_coulomb_exact_vs_oracle() {
    check(2);
}

#[test]
fn criterion_03_transposition_invariance() {
    check(3);
}

#[test]
fn criterion_04_coulomb_asymptotic_order() {
    check(4);
}

#[test]
fn criterion_05_invsqrt_exact_vs_oracle() {
    check(5);
}

// Kept exactly as specified and expected to FAIL: the scaled remainder in
// this normalization grows like ln(1/ε)/√ε rather than staying O(1); the
// three-term expansion's next correction carries the (y₁−1)² ln(1−y₁) term
// its derivation drops. The failure message records the measured values.
#[test]
fn criterion_06_invsqrt_remainder_bound() {
    check(6);
}

#[test]
fn criterion_07_log_fig3_ordering() {
    check(7);
}

#[test]
fn criterion_08_quantization_regression() {
    check(8);
}

#[test]
fn criterion_09_normalization_closure() {
    check(9);
}

#[test]
fn criterion_10_ac_averaging() {
    check(10);
}

#[test]
fn criterion_11_root_residuals() {
    check(11);
}

#[test]
fn criterion_12_rate_identity() {
    check(12);
}

/// Full-suite summary, printed in order regardless of individual outcomes.
#[test]
fn acceptance_summary() {
    let mut lines = Vec::new();
    let mut failed = Vec::new();
    for id in 1..=CRITERION_NAMES.len() {
        let outcome = run_criterion(id, 1.0);
        lines.push(outcome.summary_line());
        if !outcome.passed {
            failed.push(outcome.id);
        }
    }
    println!("--- acceptance summary ---");
    for line in &lines {
        println!("{line}");
    }
    // Criterion 6 is a documented honest failure (see its test above); the
    // summary only guards against regressions elsewhere.
    failed.retain(|&id| id != 6);
    assert!(
        failed.is_empty(),
        "unexpected criterion failures: {failed:?}\n{}",
        lines.join("\n")
    );
}
