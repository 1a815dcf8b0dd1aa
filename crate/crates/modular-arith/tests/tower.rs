//! Integration checks of the divided-congruence tower.

use algebra_kernel::Coeff;
use bp_hopf::BpContext;
use modular_arith::igusa::igusa_class;
use modular_arith::rho::t_class;
use modular_arith::{katz_d, orientation, Level, ModularCtx, StructuredForm};

#[test]
fn tower_membership_certificates() {
    let ctx = ModularCtx::new(2, Level::Three).unwrap();
    let orient = orientation(&ctx, 2, false).unwrap();
    let bp = BpContext::new(2, 2);
    let t2 = t_class(&bp, &orient, &ctx, 2).unwrap();
    // T_2 generates V_{1,3}: invariant under [1 + 2^3] but not [1 + 2^2]
    let class = igusa_class(&bp, &orient, &ctx, &t2, 3, 160, 8).unwrap();
    assert_eq!(class.tower_level, 3);
    assert_eq!(class.invariance_checks[0], (9, true), "[9] fixes T_2 mod 2");
    // one level down the certificate must fail
    let wrong = igusa_class(&bp, &orient, &ctx, &t2, 2, 160, 8).unwrap();
    assert_eq!(wrong.invariance_checks[0], (5, false), "[5] moves T_2");
}

#[test]
fn artin_schreier_square_lands_in_the_previous_level() {
    // T^2 + T = 1 + a3 is a structured identity; the class of T itself is
    // not expressible in a3 alone
    let ctx = ModularCtx::new(2, Level::Three).unwrap();
    let orient = orientation(&ctx, 2, false).unwrap();
    let bp = BpContext::new(2, 2);
    let t1 = t_class(&bp, &orient, &ctx, 1).unwrap();
    let square_plus = t1.mul(&t1).add(&t1);
    let class = igusa_class(&bp, &orient, &ctx, &square_plus, 1, 160, 6).unwrap();
    let structured = class.structured.expect("T^2 + T is in the span");
    let expect = StructuredForm::one().add(&StructuredForm::a3_power(1));
    assert_eq!(structured, expect);
    // T itself needs the T-basis element
    let t_alone = igusa_class(&bp, &orient, &ctx, &t1, 2, 160, 6).unwrap();
    let s = t_alone.structured.expect("T is in the {a3^i T^j} span");
    assert!(s.terms.keys().any(|&(_, j)| j == 1));
}

#[test]
fn orientation_images_lift_the_hasse_invariant() {
    // alpha(v1)(q) = 1 mod p in both configurations
    let l3 = ModularCtx::new(2, Level::Three).unwrap();
    let o3 = orientation(&l3, 2, false).unwrap();
    let s3 = l3.evaluate_rational(&o3.images[0], 80);
    match modular_arith::igusa::reduce_series_mod_p(&s3, 2).unwrap() {
        modular_arith::ResidueSeries::F4(r) => {
            assert_eq!(r, algebra_kernel::QExpansion::one(80))
        }
        _ => unreachable!(),
    }
    let l1 = ModularCtx::new(5, Level::One).unwrap();
    let o1 = orientation(&l1, 2, false).unwrap();
    let s1 = l1.evaluate_rational(&o1.images[0], 80);
    match modular_arith::igusa::reduce_series_mod_p(&s1, 5).unwrap() {
        modular_arith::ResidueSeries::Fp(r) => {
            assert_eq!(r.coeffs[0], 1);
            assert!(r.coeffs[1..].iter().all(|&c| c == 0), "-8 g2 = 1 mod 5");
        }
        _ => unreachable!(),
    }
}

#[test]
fn level3_discriminant() {
    let model = modular_arith::WeierstrassModel::level3();
    let disc = model.discriminant_level3();
    assert!(!disc.is_zero());
    // a1^3 a3^3 - 27 a3^4
    assert_eq!(disc.render(), "a1^3*a3^3 - 27*a3^4");
}

#[test]
fn third_tower_generator_diamond_behaviour() {
    // [1 + 2^3](T_3) = T_3 + 1 and [1 + 2^4](T_3) = T_3 mod 2; needs the
    // exact right unit and phi^{-1} through the third generators
    let ctx = ModularCtx::new(2, Level::Three).unwrap();
    let orient = orientation(&ctx, 3, false).unwrap();
    let bp = BpContext::new(2, 3);
    let t3 = t_class(&bp, &orient, &ctx, 3).unwrap();
    let prec = 160;
    let one = modular_arith::DividedCongruence::constant(
        Level::Three,
        2,
        &ctx.base,
        algebra_kernel::Cyclotomic::one(),
    );
    let shift = t3.diamond(9).sub(&t3).sub(&one);
    assert!(
        modular_arith::igusa::reduce_dc_mod_p(&shift, &ctx, prec)
            .unwrap()
            .is_zero(),
        "[9] shifts T_3 by one"
    );
    let fixed = t3.diamond(17).sub(&t3);
    assert!(
        modular_arith::igusa::reduce_dc_mod_p(&fixed, &ctx, prec)
            .unwrap()
            .is_zero(),
        "[17] fixes T_3"
    );
}

#[test]
fn katz_generators_are_divided_congruences() {
    let ctx = ModularCtx::new(2, Level::Three).unwrap();
    let orient = orientation(&ctx, 2, false).unwrap();
    let d = katz_d(&orient, &ctx, 2);
    for (n, dn) in d.iter().enumerate() {
        assert!(
            dn.integrality(&ctx, 200).is_ok(),
            "d_{n} should have an integral q-expansion"
        );
    }
    // and at level 1, p = 5
    let ctx5 = ModularCtx::new(5, Level::One).unwrap();
    let orient5 = orientation(&ctx5, 2, false).unwrap();
    let d5 = katz_d(&orient5, &ctx5, 2);
    for (n, dn) in d5.iter().enumerate() {
        assert!(
            dn.integrality(&ctx5, 120).is_ok(),
            "level-1 d_{n} should have an integral q-expansion"
        );
    }
}
