//! The map from the Hopf algebroid into divided congruences.
//!
//! `rho = -(q^0 (x) id) . (alpha (x) alpha) . phi^{-1}`: apply the inverse
//! of the tensor-square isomorphism, push both factors through the
//! orientation, take minus the constant term on the left factor. It is
//! linear but not multiplicative (the sign makes `rho(1) = -1`); the
//! underlying multiplicative map is `rho_mult = (q^0 alpha (x) alpha) .
//! phi^{-1}`, exposed separately because several identities are cleaner
//! through it.

use crate::divided::DividedCongruence;
use crate::orientation::Orientation;
use crate::qseries::{CycPoly, ModularCtx};
use crate::{Error, Result};
use algebra_kernel::{Coeff, Cyclotomic, GradedPolynomial, Rational};
use bp_hopf::BpContext;

pub type Poly = GradedPolynomial<Rational>;

/// The multiplicative composite `(q^0 alpha (x) alpha) . phi^{-1}` on a
/// polynomial in v's and t's.
pub fn rho_mult(
    bp: &BpContext,
    orient: &Orientation,
    ctx: &ModularCtx,
    g: &Poly,
) -> Result<DividedCongruence> {
    let tensor = bp.phi_inverse(g).map_err(Error::Hopf)?;
    let nmax = bp.nmax;
    if orient.images.len() < nmax {
        return Err(Error::UnsupportedConfiguration(format!(
            "orientation covers v_1..v_{}, context needs v_1..v_{}",
            orient.images.len(),
            nmax
        )));
    }
    // cache alpha(v_i)^e polynomials
    let mut img_pow: Vec<std::collections::BTreeMap<u32, CycPoly>> =
        vec![std::collections::BTreeMap::new(); nmax];
    let mut out = DividedCongruence::zero(ctx.level, ctx.p);
    for (m, c) in &tensor.terms {
        // left block: q^0 of the alpha-image; right block: the alpha-image
        let mut left = Cyclotomic::from_rational(c.clone());
        for i in 0..nmax {
            let e = m.exp(i);
            if e > 0 {
                left = left.mul(&orient.q0[i].pow(e));
            }
        }
        if left.is_zero() {
            continue;
        }
        let mut right = CycPoly::one(&ctx.base);
        let mut weight = 0i64;
        for i in 0..nmax {
            let e = m.exp(nmax + i);
            if e > 0 {
                let pw = img_pow[i]
                    .entry(e)
                    .or_insert_with(|| orient.images[i].pow(e).to_cyclotomic())
                    .clone();
                right = right.mul(&pw);
                weight += (bp.dim(i + 1) / 2) * e as i64;
            }
        }
        out.add_part(weight, right.scale(&left));
    }
    Ok(out)
}

/// `rho(g) = -rho_mult(g)`; in particular `rho(1) = -1` and
/// `rho(t_1) = (q^0(alpha(v_1)) - alpha(v_1))/p`.
pub fn rho(
    bp: &BpContext,
    orient: &Orientation,
    ctx: &ModularCtx,
    g: &Poly,
) -> Result<DividedCongruence> {
    Ok(rho_mult(bp, orient, ctx, g)?.neg())
}

/// T_n = rho(t_n), the image of the n-th structure generator.
pub fn t_class(
    bp: &BpContext,
    orient: &Orientation,
    ctx: &ModularCtx,
    n: usize,
) -> Result<DividedCongruence> {
    let t = Poly::gen(&bp.hopf, &format!("t{n}")).map_err(Error::Kernel)?;
    rho(bp, orient, ctx, &t)
}
