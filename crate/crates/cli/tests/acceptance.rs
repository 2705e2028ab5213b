//! End-to-end acceptance gate: one test per shipped guarantee.
//!
//! Each test runs the matching verification suite from `idempair_cli::suites`,
//! requires every check line inside it to pass, and prints a single summary
//! line. Suites with a wall-clock budget assert it around the suite call
//! itself, so the measurement excludes harness overhead.

use std::time::{Duration, Instant};

use idempair_cli::report::CheckLine;
use idempair_cli::suites;

/// Seed for the randomized sweeps. Matches the CLI default so
/// `idempair verify` exercises the exact same samples.
const SEED: u64 = 0;

fn demand(label: &str, lines: Vec<CheckLine>, elapsed: Duration, budget: Option<Duration>) {
    assert!(!lines.is_empty(), "{label}: suite produced no checks");
    for line in &lines {
        assert!(
            line.pass,
            "{label}: FAIL at check '{}' ({})",
            line.name, line.residual
        );
    }
    if let Some(cap) = budget {
        assert!(
            elapsed <= cap,
            "{label}: FAIL on time, took {:.2}s with a {:.0}s budget",
            elapsed.as_secs_f64(),
            cap.as_secs_f64()
        );
    }
    println!(
        "{label}: PASS ({} checks, {:.2}s)",
        lines.len(),
        elapsed.as_secs_f64()
    );
}

fn run(label: &str, budget_secs: Option<u64>, suite: impl FnOnce() -> Vec<CheckLine>) {
    let started = Instant::now();
    let lines = suite();
    let elapsed = started.elapsed();
    demand(label, lines, elapsed, budget_secs.map(Duration::from_secs));
}

#[test]
fn criterion_01_dimensions_and_model_ranks() {
    run("criterion 01", Some(10), suites::criterion_dimensions);
}

#[test]
fn criterion_02_radical_dimensions() {
    run("criterion 02", Some(30), suites::criterion_radicals);
}

#[test]
fn criterion_03_closed_form_drazin_inverses() {
    run("criterion 03", Some(60), suites::criterion_closed_form_drazin);
}

#[test]
fn criterion_04_lambda_group_inverses() {
    run("criterion 04", Some(30), suites::criterion_lambda_formulas);
}

#[test]
fn criterion_05_classifier_matches_rank_oracle() {
    run("criterion 05", Some(120), || {
        suites::criterion_classifier_oracle(SEED)
    });
}

#[test]
fn criterion_06_spectra_match_matrix_oracle() {
    run("criterion 06", None, || {
        suites::criterion_spectrum_agreement(SEED)
    });
}

#[test]
fn criterion_07_index_bounds_hold_and_are_attained() {
    run("criterion 07", None, || suites::criterion_index_bounds(SEED));
}

#[test]
fn criterion_08_countzero_multiplicity_inequality() {
    run("criterion 08", None, || suites::criterion_countzero(SEED));
}

#[test]
fn criterion_09_matrix_example_regression() {
    run("criterion 09", None, suites::criterion_example_regression);
}

#[test]
fn criterion_10_tightly_coupled_witnesses() {
    run("criterion 10", None, suites::criterion_tight_witnesses);
}
