//! End-to-end family checks of the f-invariant pipeline.

use bp_hopf::{beta_cocycle, beta_representative};
use f_invariant::{
    classes_equal_mod_ambiguity, closed_form_kervaire_family, ext2_catalog, f_invariant,
    f_invariant_of_cocycle, kervaire_projection, FInvCtx, GeneratorKind,
};
use modular_arith::igusa::ResidueSeries;
use modular_arith::StructuredForm;

#[test]
fn multiplicativity_through_the_connecting_map() {
    // f(beta_{3*4,4}) computed from the cocycle of x_2^3 equals the closed
    // form (a3^4 + a3^3)^3; exercises the derivation structure without a
    // degree-64 lattice
    let ctx = FInvCtx::level3(2, 200).unwrap();
    let cocycle = beta_cocycle(&ctx.bp, 12, 4, 1).unwrap();
    let pipeline = f_invariant_of_cocycle(&ctx, &cocycle.w, cocycle.degree).unwrap();
    assert_eq!(cocycle.degree, 64);
    let closed = closed_form_kervaire_family(&ctx, 3, 2).unwrap();
    assert!(classes_equal_mod_ambiguity(&pipeline, &closed).unwrap());
    // the structured solve finds the closed form up to ambiguity; pin the
    // top coefficient directly
    let s = pipeline.structured.as_ref().unwrap();
    let expect = StructuredForm::a3_power(4)
        .add(&StructuredForm::a3_power(3))
        .pow(3);
    for i in 9..=12u32 {
        assert_eq!(
            s.coefficient(i, 0),
            expect.coefficient(i, 0),
            "a3^{i} coefficient"
        );
    }
}

#[test]
fn projection_on_pipeline_images() {
    // every catalog generator for n = 3, 4, 5 through the actual pipeline:
    // the value matches its closed form modulo ambiguity and the Kervaire
    // bit singles out beta_{2^{n-2},2^{n-2}}
    let ctx = FInvCtx::level3(4, 200).unwrap();
    for n in [3u32, 4, 5] {
        for g in ext2_catalog(&ctx, n).unwrap() {
            let pipeline = match g.kind {
                GeneratorKind::Beta { t, i, .. } => {
                    let rep = beta_representative(&ctx.bp, t, 1 << i, 1).unwrap();
                    f_invariant(&ctx, &rep).unwrap()
                }
                GeneratorKind::AlphaProduct { t } => {
                    let rep = bp_hopf::alpha1_alpha_t(&ctx.bp, t).unwrap();
                    f_invariant(&ctx, &rep).unwrap()
                }
            };
            assert!(
                classes_equal_mod_ambiguity(&pipeline, &g.closed_form).unwrap(),
                "pipeline vs closed form for {}",
                g.name
            );
            let bit = kervaire_projection(&pipeline, n).unwrap();
            let expect = matches!(g.kind, GeneratorKind::Beta { s: 1, i, .. } if i == n - 2);
            assert_eq!(bit == 1, expect, "pipeline projection for {}", g.name);
        }
    }
}

#[test]
fn structured_form_reproduces_raw_series() {
    let ctx = FInvCtx::level3(2, 160).unwrap();
    let rep = beta_representative(&ctx.bp, 2, 2, 1).unwrap();
    let f = f_invariant(&ctx, &rep).unwrap();
    let s = f.structured.as_ref().unwrap();
    let basis = ctx.igusa().unwrap();
    let reseries = s.to_series(&basis.a3_bar, &basis.t_bar, f.precision);
    match &f.raw {
        ResidueSeries::F4(raw) => assert_eq!(&reseries, raw),
        _ => unreachable!(),
    }
}

#[test]
fn psi_images_are_integral_divided_congruences() {
    // degree-16 classes need the dimension-14 generators in the lattice
    let ctx = FInvCtx::level3(3, 160).unwrap();
    for (t, s) in [(2u64, 2u32), (3, 1), (4, 4)] {
        let rep = beta_representative(&ctx.bp, t, s, 1).unwrap();
        let f = f_invariant(&ctx, &rep).unwrap();
        let psi = f.psi.as_ref().unwrap();
        assert!(psi.integrality(&ctx.modular, 160).is_ok());
    }
}

#[test]
fn order_two_of_raw_values() {
    // mod-2 classes: the raw series added to itself vanishes
    let ctx = FInvCtx::level3(3, 120).unwrap();
    let rep = beta_representative(&ctx.bp, 4, 4, 1).unwrap();
    let f = f_invariant(&ctx, &rep).unwrap();
    assert!(f.raw.add(&f.raw).is_zero());
}
