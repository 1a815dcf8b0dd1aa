//! The p-typical orientation: images of the v-generators in modular forms.
//!
//! The classifying map sends the logarithm coefficient l_n to
//! a_{p^n}/p^n, so the images alpha(v_n) are solved triangularly from the
//! Hazewinkel relations, with integrality asserted (the orientation lands
//! in holomorphic modular forms).

use crate::qseries::ModularCtx;
use crate::weierstrass::{formal_log, WeierstrassModel};
use crate::{Error, Level, Result};
use algebra_kernel::{Coeff, Cyclotomic, GradedPolynomial, Rational};
use bp_hopf::BpContext;

pub type Poly = GradedPolynomial<Rational>;

pub struct Orientation {
    pub p: u64,
    pub level: Level,
    pub nmax: usize,
    /// images\[i\] = alpha(v_{i+1}) over the base modular generators.
    pub images: Vec<Poly>,
    /// q0\[i\] = q^0(alpha(v_{i+1})), exact.
    pub q0: Vec<Cyclotomic>,
    /// Normalised logarithm coefficients a_1 .. a_{p^nmax}.
    pub log_coeffs: Vec<Poly>,
    /// q^0(a_{p^i}) for i = 0..nmax.
    pub q0_log_p_powers: Vec<Cyclotomic>,
    /// Level-1 only: whether alpha(v_1) was forced to the Eisenstein lift
    /// E_{p-1}. Only the v_1 image is pinned by the override; everything
    /// in this workspace that runs under it stays below the degree of v_2.
    pub eisenstein: bool,
}

impl Orientation {
    /// b = q^0(alpha(v_2)) reduced mod p (level 1) or into F4 (level 3 is
    /// consumed through its own reduction paths).
    pub fn q0_v2(&self) -> &Cyclotomic {
        &self.q0[1]
    }
}

/// Build the orientation for a supported (prime, level) pair.
pub fn orientation(ctx: &ModularCtx, nmax: usize, eisenstein: bool) -> Result<Orientation> {
    let p = ctx.p;
    if eisenstein && !(ctx.level == Level::One && p == 5) {
        return Err(Error::UnsupportedConfiguration(
            "the Eisenstein-forced orientation is implemented for p = 5, level 1".into(),
        ));
    }
    let model = match ctx.level {
        Level::Three => WeierstrassModel::level3(),
        Level::One => WeierstrassModel::level1(),
    };
    let top = (p as usize).pow(nmax as u32);
    let log = formal_log(&model, top)?;
    // Hazewinkel data at this prime, for the l_n as v-polynomials.
    let bp = BpContext::new(p, nmax);
    let mut images: Vec<Poly> = Vec::with_capacity(nmax);
    for n in 1..=nmax {
        // l_n = v_n/p + rest(v_1..v_{n-1}); alpha(l_n) = a_{p^n}/p^n
        let v_n = Poly::gen(&bp.bp, &format!("v{n}"))?;
        let rest = bp
            .log_coefficient(n)
            .sub(&v_n.scale(&Rational::ratio(1, p as i64)));
        let mut rest_imgs = images.clone();
        for i in rest_imgs.len()..nmax {
            // placeholders for v_i with i >= n; rest never consults them
            let _ = i;
            rest_imgs.push(Poly::zero(&ctx.base));
        }
        // zero placeholder polys are homogeneous of every degree, so the
        // degree check passes and unused slots stay inert
        let alpha_rest = rest.substitute(&ctx.base, &rest_imgs)?;
        let a_pn = log.a((p as usize).pow(n as u32));
        let target = a_pn.scale(&Rational::from_i64(p as i64).pow(n as u32).inv().unwrap());
        let mut image = target.sub(&alpha_rest).scale(&Rational::from_i64(p as i64));
        if n == 1 && eisenstein {
            // E4 = 12 g2
            image = Poly::gen(&ctx.base, "g2")?.scale(&Rational::from_i64(12));
        }
        image.assert_p_integral(p)?;
        images.push(image);
    }
    let q0 = images.iter().map(|im| ctx.q0_of_poly(im)).collect();
    let q0_log_p_powers = (0..=nmax)
        .map(|i| {
            if i == 0 {
                Cyclotomic::one()
            } else {
                ctx.q0_of_poly(log.a((p as usize).pow(i as u32)))
            }
        })
        .collect();
    Ok(Orientation {
        p,
        level: ctx.level,
        nmax,
        images,
        q0,
        log_coeffs: log.coeffs,
        q0_log_p_powers,
        eisenstein,
    })
}
