//! Acceptance batteries 1 to 9. Each test prints one `PASS`/`FAIL` line for
//! its criterion, followed by any discrepancies and findings.

use std::time::Instant;

use inflata::check::{run_criterion, CheckConfig, CriterionOutcome};
use inflata::domination::SolverConfig;

fn run(criterion: u8) -> CriterionOutcome {
    let start = Instant::now();
    let out = run_criterion(criterion, &CheckConfig::new(SolverConfig::default())).expect("battery runs");
    let verdict = if out.passed() { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {verdict} ({} instances, {} discrepancies, {:.1?}) {}",
        out.instances,
        out.discrepancies.len(),
        start.elapsed(),
        out.title
    );
    for d in &out.discrepancies {
        println!("  discrepancy [{}] {}: expected {}, observed {}", d.instance, d.claim, d.expected, d.observed);
    }
    for f in &out.findings {
        println!("  finding [{}] {}: formula {}, solver {}", f.instance, f.claim, f.expected, f.observed);
    }
    out
}

fn assert_criterion(criterion: u8) {
    let out = run(criterion);
    assert!(out.passed(), "criterion {criterion} has {} discrepancies", out.discrepancies.len());
}

#[test]
fn criterion_1_oracle_equivalence() {
    assert_criterion(1);
}

#[test]
fn criterion_2_sandwich() {
    assert_criterion(2);
}

#[test]
fn criterion_3_characterization() {
    assert_criterion(3);
}

#[test]
fn criterion_4_near_perfect_characterization() {
    assert_criterion(4);
}

#[test]
fn criterion_5_closed_forms() {
    assert_criterion(5);
}

#[test]
fn criterion_6_odd_harary_exploratory() {
    let out = run(6);
    assert_eq!(out.findings.len(), 2);
    assert!(out.passed());
}

#[test]
fn criterion_7_composition() {
    assert_criterion(7);
}

#[test]
fn criterion_8_bipartite_three_five() {
    assert_criterion(8);
}

#[test]
fn criterion_9_multipartite_upper_bound() {
    assert_criterion(9);
}
