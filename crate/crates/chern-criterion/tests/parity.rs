//! Integration checks of the parity machinery.

use bp_hopf::BpContext;
use chern_criterion::breduce::BReduction;
use chern_criterion::{evaluate_manifold, kervaire_chern_polynomial, ChernData, Verdict};
use std::collections::BTreeMap;

#[test]
fn relations_cannot_flip_the_parity() {
    // the well-definedness assertions behind the projection, degrees 4, 8
    let ctx = BpContext::new(2, 2);
    for (degree, half) in [(4i64, 1u32), (8, 2)] {
        let red = BReduction::build(&ctx, degree).unwrap();
        red.assert_projection_well_defined(half).unwrap();
        assert!(red.target_index(half).is_some());
    }
}

#[test]
fn dimension_eight_odd_and_even_examples() {
    let poly = kervaire_chern_polynomial(8).unwrap();
    // a single odd contribution through c1_0*c3_1
    let mut numbers = BTreeMap::new();
    for m in poly.terms.keys() {
        let key = m.render(&poly.alphabet);
        numbers.insert(key.clone(), if key == "c1_0*c3_1" { 1 } else { 0 });
    }
    let (verdict, _) = evaluate_manifold(&ChernData { dimension: 8, numbers }).unwrap();
    assert_eq!(verdict, Verdict::KervaireOne);
    // values summing to 2 bound framed manifolds
    let mut evens = BTreeMap::new();
    let keys: Vec<String> = poly.terms.keys().map(|m| m.render(&poly.alphabet)).collect();
    for (i, key) in keys.iter().enumerate() {
        evens.insert(key.clone(), if i < 2 { 1 } else { 0 });
    }
    let (verdict, _) = evaluate_manifold(&ChernData { dimension: 8, numbers: evens }).unwrap();
    assert_eq!(verdict, Verdict::BoundsFramed);
}

#[test]
fn unsupported_dimensions_are_refused() {
    assert!(kervaire_chern_polynomial(6).is_err());
    assert!(kervaire_chern_polynomial(16).is_err());
    // ...but the diagnostic hook covers 16
    let report = chern_criterion::b_reduction_report(16).unwrap();
    assert_eq!(report.dimension, 16);
    assert!(!report.completed);
}
