//! Closed-form f-invariants for the two infinite beta families.

use crate::fclass::{ambiguity_basis, FClass};
use crate::{Error, FInvCtx, Result};
use algebra_kernel::{Coeff, Cyclotomic, Rational};
use modular_arith::igusa::{reduce_dc_mod_p, ResidueSeries, StructuredForm};
use modular_arith::qseries::CycPoly;
use modular_arith::{DividedCongruence, Level};

/// f(beta_t) for t coprime to p: `b^t - (T^p - T + b)^t` with
/// `T = (alpha(v1) - q^0(alpha(v1)))/p` and `b = q^0(alpha(v2))` mod p.
pub fn closed_form_beta_t(ctx: &FInvCtx, t: u64) -> Result<FClass> {
    if t == 0 || t.is_multiple_of(ctx.p()) {
        return Err(Error::Other(format!("t = {t} must be positive and coprime to p")));
    }
    let degree = 2 * (t as i64) * ((ctx.p() as i64).pow(2) - 1) - 2 * (ctx.p() as i64 - 1);
    match ctx.level() {
        Level::Three => {
            // char 2: b = 1 and the expression collapses in F4[a3, T]
            let b = f4_constant(&ctx.orientation.q0[1])?;
            let b_form = StructuredForm::monomial(0, 0, b);
            let t_form = StructuredForm::t_gen();
            // T^2 + T + b (subtraction = addition in characteristic 2)
            let inner = t_form.mul(&t_form).add(&t_form).add(&b_form);
            let value = b_form.pow(t as u32).add(&inner.pow(t as u32));
            structured_to_class(ctx, degree, value)
        }
        Level::One => {
            let p = ctx.p();
            let base = &ctx.modular.base;
            let alpha_v1 = ctx.orientation.images[0].to_cyclotomic();
            let q0_v1 = ctx.orientation.q0[0].clone();
            let p_inv = Cyclotomic::from_rational(Rational::from_i64(p as i64).inv().unwrap());
            let mut t_dc = DividedCongruence::zero(Level::One, p);
            t_dc.add_part(p as i64 - 1, alpha_v1.scale(&p_inv));
            t_dc.add_part(0, CycPoly::constant(base, q0_v1.neg().mul(&p_inv)));
            let b_dc = DividedCongruence::constant(
                Level::One,
                p,
                base,
                ctx.orientation.q0[1].clone(),
            );
            // b^t - (T^p - T + b)^t
            let inner = t_dc.pow(p as u32).sub(&t_dc).add(&b_dc);
            let value = b_dc.pow(t as u32).sub(&inner.pow(t as u32));
            let raw = reduce_dc_mod_p(&value, &ctx.modular, ctx.precision)?;
            Ok(FClass {
                degree,
                p,
                level: Level::One,
                psi: Some(value),
                raw,
                structured: None,
                ambiguity: ambiguity_basis(ctx, degree)?,
                precision: ctx.precision,
            })
        }
    }
}

/// Closed forms of the p = 2 family in the Igusa-tower coordinates:
/// n = 0 gives `1 + a3^s` (s >= 3 odd; (s, n) = (1, 0) is rejected),
/// n = 1 gives `1 + a3^{2s}`, and n >= 2 gives
/// `(a3^{2^n} + a3^{3*2^{n-2}})^s`.
pub fn closed_form_kervaire_family(ctx: &FInvCtx, s: u64, n: u32) -> Result<FClass> {
    if ctx.level() != Level::Three {
        return Err(Error::Other("the closed Kervaire family lives at (2, level 3)".into()));
    }
    if s.is_multiple_of(2) {
        return Err(Error::Other(format!("s = {s} must be odd")));
    }
    if (s, n) == (1, 0) {
        return Err(Error::Other("the case (s, n) = (1, 0) is excluded".into()));
    }
    let t = s * 2u64.pow(n);
    let degree = 2 * (t as i64) * 3 - 2 * 2i64.pow(n);
    let value = match n {
        0 => StructuredForm::one().add(&StructuredForm::a3_power(s as u32)),
        1 => StructuredForm::one().add(&StructuredForm::a3_power(2 * s as u32)),
        _ => StructuredForm::a3_power(2u32.pow(n))
            .add(&StructuredForm::a3_power(3 * 2u32.pow(n - 2)))
            .pow(s as u32),
    };
    structured_to_class(ctx, degree, value)
}

/// f(alpha_1 alpha_t) = T for the odd-index alpha products at p = 2.
pub fn closed_form_alpha1_alpha_t(ctx: &FInvCtx, t: u64) -> Result<FClass> {
    if ctx.level() != Level::Three || t.is_multiple_of(2) {
        return Err(Error::Other("alpha_1 alpha_t closed form needs p = 2 and t odd".into()));
    }
    structured_to_class(ctx, 2 * t as i64 + 2, StructuredForm::t_gen())
}

fn structured_to_class(ctx: &FInvCtx, degree: i64, value: StructuredForm) -> Result<FClass> {
    let basis = ctx.igusa()?;
    let series = value.to_series(&basis.a3_bar, &basis.t_bar, ctx.precision);
    Ok(FClass {
        degree,
        p: 2,
        level: Level::Three,
        psi: None,
        raw: ResidueSeries::F4(series),
        structured: Some(value),
        ambiguity: ambiguity_basis(ctx, degree)?,
        precision: ctx.precision,
    })
}

fn f4_constant(c: &Cyclotomic) -> Result<algebra_kernel::F4> {
    c.reduce_mod_2().map_err(Error::Kernel)
}
