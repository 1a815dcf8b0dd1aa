//! The divided-congruence generators d_n and their relation to the
//! Hopf-algebroid images.
//!
//! With d_0 = 1, the d_n are defined recursively by
//! `sum_{i=0}^n d_{n-i}^{p^i} / p^i = a_{p^n} / p^n`.
//!
//! Applying the multiplicative composite of `rho` to
//! `eta_R(l_n) = sum l_i t_{n-i}^{p^i}` gives, with `U_j = -rho(t_j)` and
//! `U_0 = 1`,
//! `a_{p^n}/p^n = sum_{i=0}^n (q^0(a_{p^i})/p^i) U_{n-i}^{p^i}`;
//! combined with the recursion this is the identity relating the d_n to
//! the T_n. (Under the `rho(1) = -1` sign convention the identity holds
//! with U_n = -T_n; mod p the two differ only in even multiples, so the
//! reductions agree.)

use crate::divided::DividedCongruence;
use crate::orientation::Orientation;
use crate::qseries::{CycSeries, ModularCtx};
use crate::rho::t_class;
use crate::Result;
use algebra_kernel::{Coeff, Cyclotomic, Rational};
use bp_hopf::BpContext;

/// d_0 .. d_nmax as divided congruences.
pub fn katz_d(orient: &Orientation, ctx: &ModularCtx, nmax: usize) -> Vec<DividedCongruence> {
    let p = ctx.p;
    let one = DividedCongruence::constant(ctx.level, p, &ctx.base, Cyclotomic::one());
    let mut d: Vec<DividedCongruence> = vec![one];
    for n in 1..=nmax {
        let a_pn = &orient.log_coeffs[(p as usize).pow(n as u32) - 1];
        let lead = DividedCongruence::from_form(ctx.level, p, a_pn.to_cyclotomic()).scale(
            &Cyclotomic::from_rational(Rational::from_i64(p as i64).pow(n as u32).inv().unwrap()),
        );
        let mut acc = lead;
        for i in 1..=n {
            let power = d[n - i].pow((p as u32).pow(i as u32));
            let scaled = power.scale(&Cyclotomic::from_rational(
                Rational::from_i64(p as i64).pow(i as u32).inv().unwrap(),
            ));
            acc = acc.sub(&scaled);
        }
        d.push(acc);
    }
    d
}

/// Difference of the two sides of the d/T identity for a given n, as a
/// q-expansion: `sum d_{n-i}^{p^i}/p^i - sum (q^0(a_{p^i})/p^i) U_{n-i}^{p^i}`
/// with `U_j = -rho(t_j)`. Identically zero when everything is wired
/// correctly.
pub fn d_t_identity_difference(
    bp: &BpContext,
    orient: &Orientation,
    ctx: &ModularCtx,
    n: usize,
    precision: usize,
) -> Result<CycSeries> {
    let p = ctx.p;
    let d = katz_d(orient, ctx, n);
    let mut lhs = DividedCongruence::zero(ctx.level, p);
    for i in 0..=n {
        let power = d[n - i].pow((p as u32).pow(i as u32));
        lhs = lhs.add(&power.scale(&Cyclotomic::from_rational(
            Rational::from_i64(p as i64).pow(i as u32).inv().unwrap(),
        )));
    }
    let mut u: Vec<DividedCongruence> = vec![DividedCongruence::constant(
        ctx.level,
        p,
        &ctx.base,
        Cyclotomic::one(),
    )];
    for j in 1..=n {
        u.push(t_class(bp, orient, ctx, j)?.neg());
    }
    let mut rhs = DividedCongruence::zero(ctx.level, p);
    for i in 0..=n {
        let coeff = orient.q0_log_p_powers[i]
            .scale(&Rational::from_i64(p as i64).pow(i as u32).inv().unwrap());
        rhs = rhs.add(&u[n - i].pow((p as u32).pow(i as u32)).scale(&coeff));
    }
    Ok(lhs.sub(&rhs).joint_expansion(ctx, precision))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orientation::orientation;
    use crate::qseries::CycPoly;
    use crate::Level;

    #[test]
    fn d0_is_one_and_d1_pattern() {
        let ctx = ModularCtx::new(2, Level::Three).unwrap();
        let orient = orientation(&ctx, 2, false).unwrap();
        let d = katz_d(&orient, &ctx, 1);
        let one = DividedCongruence::constant(Level::Three, 2, &ctx.base, Cyclotomic::one());
        assert_eq!(d[0], one);
        // d_1 = a_2/2 - 1/2 = (a1 - 1)/2 in weight (1, 0) parts
        let mut expect = DividedCongruence::zero(Level::Three, 2);
        expect.add_part(
            1,
            CycPoly::gen(&ctx.base, "a1")
                .unwrap()
                .scale(&Cyclotomic::from_rational(Rational::ratio(1, 2))),
        );
        expect.add_part(
            0,
            CycPoly::constant(
                &ctx.base,
                Cyclotomic::from_rational(Rational::ratio(-1, 2)),
            ),
        );
        assert_eq!(d[1], expect);
        assert!(d[1].integrality(&ctx, 100).is_ok(), "d_1 is a divided congruence");
    }

    #[test]
    fn d_t_identity_holds() {
        let ctx = ModularCtx::new(2, Level::Three).unwrap();
        let orient = orientation(&ctx, 2, false).unwrap();
        let bp = BpContext::new(2, 2);
        for n in 1..=2 {
            let diff = d_t_identity_difference(&bp, &orient, &ctx, n, 100).unwrap();
            assert!(diff.is_zero(), "d/T identity at n = {n}: {diff:?}");
        }
    }
}
