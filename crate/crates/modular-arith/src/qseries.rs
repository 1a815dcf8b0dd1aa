//! q-expansions of the base modular generators.
//!
//! Level 3 (p = 2): over W = Z_2\[zeta\],
//!   a1(q) = (1+2*zeta)(1 + 6 sum sigma_0^chi(n) q^n),
//!   a3(q) = (1+2*zeta)(-1/9 + sum sigma_2^chi(n) q^n),
//! with cusp values a1(inf) = 1+2*zeta, a3(inf) = -(1+2*zeta)/9 and
//! a3(0) = 0 held as stored constants.
//!
//! Level 1 (p >= 5): g2 = E4/12 and g3 = -E6/216 with the classical
//! Eisenstein expansions E4 = 1 + 240 sum sigma_3(n) q^n and
//! E6 = 1 - 504 sum sigma_5(n) q^n.

use crate::sigma::{sigma, sigma_chi};
use crate::{Error, Level, Result};
use algebra_kernel::{
    Alphabet, Coeff, Cyclotomic, GradedPolynomial, QExpansion, Rational,
};
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

pub type CycSeries = QExpansion<Cyclotomic>;
pub type Poly = GradedPolynomial<Rational>;
pub type CycPoly = GradedPolynomial<Cyclotomic>;

/// Shared context for one (prime, level) pair: the base alphabet and a
/// cache of generator-power q-expansions keyed by (generator, exponent,
/// precision).
pub struct ModularCtx {
    pub p: u64,
    pub level: Level,
    pub base: Arc<Alphabet>,
    cache: Mutex<BTreeMap<(usize, u32, usize), Arc<CycSeries>>>,
}

impl ModularCtx {
    pub fn new(p: u64, level: Level) -> Result<Self> {
        match (p, level) {
            (2, Level::Three) => {}
            (q, Level::One) if q >= 5 => {}
            _ => {
                return Err(Error::UnsupportedConfiguration(format!(
                    "(p, level) = ({p}, {level:?}); supported: (2, level 3) and (p >= 5, level 1)"
                )))
            }
        }
        let base = match level {
            Level::Three => Alphabet::level3(),
            Level::One => Alphabet::level1(),
        };
        Ok(ModularCtx { p, level, base, cache: Mutex::new(BTreeMap::new()) })
    }

    /// Default working precision for a computation whose top weight is
    /// `top_weight`: max(200, 4*top_weight + 20).
    pub fn default_precision(top_weight: i64) -> usize {
        200usize.max((4 * top_weight + 20) as usize)
    }

    /// q-expansion of the base generator with the given index.
    pub fn gen_series(&self, idx: usize, precision: usize) -> Arc<CycSeries> {
        self.gen_power(idx, 1, precision)
    }

    /// Cached power of a base generator.
    pub fn gen_power(&self, idx: usize, exp: u32, precision: usize) -> Arc<CycSeries> {
        if let Some(hit) = self.cache.lock().unwrap().get(&(idx, exp, precision)) {
            return hit.clone();
        }
        let value = if exp == 0 {
            Arc::new(CycSeries::one(precision))
        } else if exp == 1 {
            Arc::new(self.base_expansion(idx, precision))
        } else {
            let half = self.gen_power(idx, exp / 2, precision);
            let mut v = half.mul(&half);
            if exp % 2 == 1 {
                v = v.mul(&self.gen_power(idx, 1, precision));
            }
            Arc::new(v)
        };
        self.cache
            .lock()
            .unwrap()
            .entry((idx, exp, precision))
            .or_insert(value)
            .clone()
    }

    fn base_expansion(&self, idx: usize, precision: usize) -> CycSeries {
        match self.level {
            Level::Three => match idx {
                0 => level3_a1(precision),
                1 => level3_a3(precision),
                _ => panic!("level 3 has two generators"),
            },
            Level::One => match idx {
                0 => g2_series(precision),
                1 => g3_series(precision),
                _ => panic!("level 1 has two generators"),
            },
        }
    }

    /// Constant term of a base generator (total, exact).
    pub fn q0_gen(&self, idx: usize) -> Cyclotomic {
        match (self.level, idx) {
            (Level::Three, 0) => a1_infinity(),
            (Level::Three, 1) => a3_infinity(),
            (Level::One, 0) => Cyclotomic::from_rational(Rational::ratio(1, 12)),
            (Level::One, 1) => Cyclotomic::from_rational(Rational::ratio(-1, 216)),
            _ => panic!("bad generator index"),
        }
    }

    /// q^0 of a polynomial over the base generators, evaluated exactly on
    /// the stored cusp constants (no series needed).
    pub fn q0_of_poly(&self, poly: &Poly) -> Cyclotomic {
        let mut total = Cyclotomic::zero();
        for (m, c) in &poly.terms {
            let mut v = Cyclotomic::from_rational(c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    v = v.mul(&self.q0_gen(i).pow(e));
                }
            }
            total = total.add(&v);
        }
        total
    }

    /// Evaluate a polynomial over the base generators as a q-expansion.
    pub fn evaluate(&self, poly: &CycPoly, precision: usize) -> CycSeries {
        let mut total = CycSeries::zero(precision);
        for (m, c) in &poly.terms {
            let mut term = CycSeries::constant(c.clone(), precision);
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&self.gen_power(i, e, precision));
                }
            }
            total = total.add(&term);
        }
        total
    }

    pub fn evaluate_rational(&self, poly: &Poly, precision: usize) -> CycSeries {
        self.evaluate(&poly.to_cyclotomic(), precision)
    }
}

/// Cusp constants at level 3 (stored, not recomputed).
pub fn a1_infinity() -> Cyclotomic {
    Cyclotomic::one_plus_two_zeta()
}

pub fn a3_infinity() -> Cyclotomic {
    Cyclotomic::one_plus_two_zeta().scale(&Rational::ratio(-1, 9))
}

pub fn a3_zero() -> Cyclotomic {
    Cyclotomic::zero()
}

fn level3_a1(precision: usize) -> CycSeries {
    let u = Cyclotomic::one_plus_two_zeta();
    QExpansion::from_fn(precision, |n| {
        if n == 0 {
            u.clone()
        } else {
            u.scale(&Rational::from_i64(6 * sigma_chi(0, n as u64)))
        }
    })
}

fn level3_a3(precision: usize) -> CycSeries {
    let u = Cyclotomic::one_plus_two_zeta();
    QExpansion::from_fn(precision, |n| {
        if n == 0 {
            u.scale(&Rational::ratio(-1, 9))
        } else {
            u.scale(&Rational::from_i64(sigma_chi(2, n as u64)))
        }
    })
}

/// E4 = 1 + 240 sum sigma_3(n) q^n.
pub fn e4_series(precision: usize) -> CycSeries {
    QExpansion::from_fn(precision, |n| {
        Cyclotomic::from_rational(if n == 0 {
            Rational::one()
        } else {
            Rational::from_i64(240 * sigma(3, n as u64))
        })
    })
}

/// E6 = 1 - 504 sum sigma_5(n) q^n.
pub fn e6_series(precision: usize) -> CycSeries {
    QExpansion::from_fn(precision, |n| {
        Cyclotomic::from_rational(if n == 0 {
            Rational::one()
        } else {
            Rational::from_i64(-504 * sigma(5, n as u64))
        })
    })
}

fn g2_series(precision: usize) -> CycSeries {
    e4_series(precision).scale(&Cyclotomic::from_rational(Rational::ratio(1, 12)))
}

fn g3_series(precision: usize) -> CycSeries {
    e6_series(precision).scale(&Cyclotomic::from_rational(Rational::ratio(-1, 216)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_kernel::F4;

    #[test]
    fn level3_constants() {
        let ctx = ModularCtx::new(2, Level::Three).unwrap();
        let a1 = ctx.gen_series(0, 10);
        let a3 = ctx.gen_series(1, 10);
        assert_eq!(a1.q0(), a1_infinity());
        assert_eq!(a3.q0(), a3_infinity());
        // a1 = 1 mod 2: all higher coefficients are 6 * integer * unit
        let a1_mod2 = a1.try_map(|c| c.reduce_mod_2()).unwrap();
        assert_eq!(a1_mod2, QExpansion::one(10));
    }

    #[test]
    fn a3_mod_2_series() {
        // constant term 1 (from (1+2z)(-1/9)), then sigma_2^chi parities
        let ctx = ModularCtx::new(2, Level::Three).unwrap();
        let a3 = ctx.gen_series(1, 30);
        let red = a3.try_map(|c| c.reduce_mod_2()).unwrap();
        assert_eq!(red.coeff(0), F4::one());
        for n in 1..30 {
            let expect = if sigma_chi(2, n as u64) % 2 != 0 { F4::one() } else { F4::zero() };
            assert_eq!(red.coeff(n), expect, "a3 mod 2 coefficient of q^{n}");
        }
    }

    #[test]
    fn eisenstein_leading_terms() {
        let e4 = e4_series(5);
        let e6 = e6_series(5);
        let r = |x: i64| Cyclotomic::from_rational(Rational::from_i64(x));
        assert_eq!(e4.coeff(0), r(1));
        assert_eq!(e4.coeff(1), r(240));
        assert_eq!(e4.coeff(2), r(2160));
        assert_eq!(e6.coeff(1), r(-504));
        assert_eq!(e6.coeff(2), r(-16632));
    }

    #[test]
    fn unsupported_configurations_rejected() {
        assert!(ModularCtx::new(3, Level::Three).is_err());
        assert!(ModularCtx::new(2, Level::One).is_err());
        assert!(ModularCtx::new(5, Level::One).is_ok());
    }
}
