//! The acceptance suite: every verification criterion, one pass/fail line
//! each (run with `cargo test --test acceptance -- --nocapture` to see the
//! lines; the `betaf verify all` subcommand prints the same report).

use betaf::verify::{run_criterion, CRITERIA};

const SEED: u64 = 1;

fn run(id: usize) {
    let report = run_criterion(id, SEED);
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
}

#[test]
fn criterion_01_right_unit() {
    run(1);
}

#[test]
fn criterion_02_phi_round_trips() {
    run(2);
}

#[test]
fn criterion_03_lattice_memberships() {
    run(3);
}

#[test]
fn criterion_04_beta_representatives() {
    run(4);
}

#[test]
fn criterion_05_level1_calibration() {
    run(5);
}

#[test]
fn criterion_06_level3_q_expansions() {
    run(6);
}

#[test]
fn criterion_07_igusa_tower() {
    run(7);
}

#[test]
fn criterion_08_pipeline_vs_closed_forms() {
    run(8);
}

#[test]
fn criterion_09_laures_comparison() {
    run(9);
}

#[test]
fn criterion_10_kervaire_projection() {
    run(10);
}

#[test]
fn criterion_11_chern_polynomials() {
    run(11);
}

#[test]
fn criterion_12_property_suites() {
    run(12);
}

#[test]
fn criteria_table_is_complete() {
    assert_eq!(CRITERIA.len(), 12);
    for (i, (id, _)) in CRITERIA.iter().enumerate() {
        assert_eq!(*id, i + 1);
    }
}
