//! Elliptic formal groups: expansion of the invariant differential along
//! the canonical parameter at infinity.
//!
//! Level 3 uses the curve `y^2 + a1 x y + a3 y = x^3` with parameter
//! `t = -x/y` and differential `dx/(2y + a1 x + a3)`; writing
//! `w = -1/y = t^3 u`, the unit series `u` satisfies
//! `u = 1 + a1 t u + a3 t^3 u^2` and
//! `omega/dt = (2u + t u')/(u (2 - a1 t - a3 t^3 u))`.
//!
//! Level 1 uses the classical curve `y^2 = 4x^3 - g2 x - g3` with
//! parameter `t = x/y` and differential `dx/y`; writing `1/y = t^3 u`,
//! `u = 4 - g2 t^4 u^2 - g3 t^6 u^3` and the raw expansion is
//! `omega/dt = -(2u + t u')/u`, with leading coefficient -2. The
//! normalised coefficients are the raw ones multiplied by -1/2, which
//! restores a_1 = 1; the calibration points are a_5 = -8 g2 and the raw
//! a_11 (see the tests).

use crate::{Error, Level, Result};
use algebra_kernel::{GradedPolynomial, Rational, TruncatedSeries};
use std::sync::Arc;

pub type Poly = GradedPolynomial<Rational>;
pub type PolySeries = TruncatedSeries<Rational>;

/// A Weierstrass model over the declared base ring of modular generators,
/// in the long form `y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone)]
pub struct WeierstrassModel {
    pub level: Level,
    pub a1: Poly,
    pub a2: Poly,
    pub a3: Poly,
    pub a4: Poly,
    pub a6: Poly,
}

impl WeierstrassModel {
    /// The level-3 curve y^2 + a1 x y + a3 y = x^3.
    pub fn level3() -> Self {
        let base = algebra_kernel::Alphabet::level3();
        WeierstrassModel {
            level: Level::Three,
            a1: Poly::gen(&base, "a1").unwrap(),
            a2: Poly::zero(&base),
            a3: Poly::gen(&base, "a3").unwrap(),
            a4: Poly::zero(&base),
            a6: Poly::zero(&base),
        }
    }

    /// The level-1 curve y^2 = 4x^3 - g2 x - g3, long form
    /// y'^2 = x^3 - (g2/4) x - (g3/4) after y = 2y'. The parameter
    /// convention for the logarithm is t = x/y on the original model.
    pub fn level1() -> Self {
        let base = algebra_kernel::Alphabet::level1();
        let quarter = Rational::ratio(-1, 4);
        WeierstrassModel {
            level: Level::One,
            a1: Poly::zero(&base),
            a2: Poly::zero(&base),
            a3: Poly::zero(&base),
            a4: Poly::gen(&base, "g2").unwrap().scale(&quarter),
            a6: Poly::gen(&base, "g3").unwrap().scale(&quarter),
        }
    }

    pub fn base(&self) -> Arc<algebra_kernel::Alphabet> {
        self.a1.alphabet.clone()
    }

    /// Discriminant of the level-3 model: a3^3 (a1^3 - 27 a3).
    pub fn discriminant_level3(&self) -> Poly {
        let a1 = &self.a1;
        let a3 = &self.a3;
        a3.pow(3)
            .mul(&a1.pow(3).sub(&a3.scale(&Rational::from_i64(27))))
    }
}

/// Coefficients of the normalised invariant differential:
/// `omega = (sum_{n >= 1} a_n t^{n-1}) dt` with a_1 = 1. For level 1 the
/// raw (unnormalised) coefficients, whose leading value is -2, are kept
/// alongside.
pub struct FormalLogData {
    pub level: Level,
    /// coeffs[n-1] = a_n (normalised).
    pub coeffs: Vec<Poly>,
    /// Level 1 only: the unnormalised coefficients.
    pub raw_coeffs: Option<Vec<Poly>>,
}

impl FormalLogData {
    pub fn a(&self, n: usize) -> &Poly {
        &self.coeffs[n - 1]
    }
}

/// Expand the invariant differential to `a_1 .. a_nmax`.
pub fn formal_log(model: &WeierstrassModel, nmax: usize) -> Result<FormalLogData> {
    assert!(nmax >= 1);
    let base = model.base();
    // series in t with polynomial coefficients; we need omega/dt through
    // t^{nmax-1}, u' costs one order, the u-recursion costs a few more.
    let prec = nmax + 2;
    let u = match model.level {
        Level::Three => {
            // u = 1 + a1 t u + a3 t^3 u^2
            let a1 = &model.a1;
            let a3 = &model.a3;
            fixed_point(prec, &base, &Poly::one(&base), |u| {
                let t_u = shift(u, 1);
                let t3_u2 = shift(&u.mul(u), 3);
                PolySeries::constant(&base, Poly::one(&base), prec)
                    .add(&t_u.scale(a1))
                    .add(&t3_u2.scale(a3))
            })?
        }
        Level::One => {
            // u = 4 - g2 t^4 u^2 - g3 t^6 u^3
            let g2 = model.a4.scale(&Rational::from_i64(-4));
            let g3 = model.a6.scale(&Rational::from_i64(-4));
            let four = Poly::constant(&base, Rational::from_i64(4));
            fixed_point(prec, &base, &four, |u| {
                let u2 = u.mul(u);
                let u3 = u2.mul(u);
                PolySeries::constant(&base, four.clone(), prec)
                    .sub(&shift(&u2, 4).scale(&g2))
                    .sub(&shift(&u3, 6).scale(&g3))
            })?
        }
    };
    let t_du = shift(&u.derivative(), 1).truncate(prec - 1);
    let two_u = u.scale(&Poly::constant(&base, Rational::from_i64(2))).truncate(prec - 1);
    let numerator = two_u.add(&t_du);
    let omega = match model.level {
        Level::Three => {
            // (2u + t u') / (u (2 - a1 t - a3 t^3 u))
            let mut denom_factor = PolySeries::constant(&base, Poly::constant(&base, Rational::from_i64(2)), prec);
            denom_factor = denom_factor.sub(&shift(
                &PolySeries::constant(&base, Poly::one(&base), prec),
                1,
            )
            .scale(&model.a1));
            denom_factor = denom_factor.sub(&shift(&u, 3).scale(&model.a3));
            let denom = u.mul(&denom_factor).truncate(prec - 1);
            numerator.mul(&denom.invert_unit()?)
        }
        Level::One => {
            // normalised: (2u + t u')/(2u); raw = -2 * normalised
            let denom = two_u.clone();
            numerator.mul(&denom.invert_unit()?)
        }
    };
    let coeffs: Vec<Poly> = (0..nmax).map(|k| omega.coeff(k)).collect();
    let raw_coeffs = match model.level {
        Level::One => Some(coeffs.iter().map(|c| c.scale(&Rational::from_i64(-2))).collect()),
        Level::Three => None,
    };
    // degree sanity: a_n is homogeneous of weight n-1 (topological 2(n-1))
    for (i, c) in coeffs.iter().enumerate() {
        match c.homogeneous_degree() {
            Ok(None) => {}
            Ok(Some(d)) if d == 2 * i as i64 => {}
            _ => {
                return Err(Error::Other(format!(
                    "log coefficient a_{} is not homogeneous of weight {}",
                    i + 1,
                    i
                )))
            }
        }
    }
    Ok(FormalLogData { level: model.level, coeffs, raw_coeffs })
}

/// Multiply a series by t^k.
fn shift(s: &PolySeries, k: usize) -> PolySeries {
    let mut coeffs = vec![GradedPolynomial::zero(&s.alphabet); k];
    coeffs.extend(s.coeffs.iter().cloned());
    PolySeries::new(&s.alphabet, coeffs, s.precision)
}

/// t-adic fixed-point iteration with a convergence guard.
fn fixed_point(
    prec: usize,
    base: &Arc<algebra_kernel::Alphabet>,
    start: &Poly,
    step: impl Fn(&PolySeries) -> PolySeries,
) -> Result<PolySeries> {
    let mut u = PolySeries::constant(base, start.clone(), prec);
    for _ in 0..(prec + 2) {
        let next = step(&u).truncate(prec);
        if next == u {
            return Ok(u);
        }
        u = next;
    }
    Err(Error::Other(
        "Weierstrass parameter iteration did not converge (malformed model)".into(),
    ))
}
