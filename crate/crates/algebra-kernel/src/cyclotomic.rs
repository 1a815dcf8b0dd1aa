//! The quadratic cyclotomic extension Q(zeta) with zeta^2 + zeta + 1 = 0.
//!
//! Values are kept in the canonical form `a + b*zeta`; zeta^2 never appears
//! because multiplication rewrites it via `zeta^2 = -1 - zeta`. The prime 2
//! is inert in Z\[zeta\], so the 2-adic valuation of `a + b*zeta` is the
//! minimum of the component valuations and reduction mod 2 lands in F4.

use crate::rational::Valuation;
use crate::residue::F4;
use crate::{Coeff, Error, Rational, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    pub a: Rational,
    pub b: Rational,
}

impl Cyclotomic {
    pub fn new(a: Rational, b: Rational) -> Self {
        Cyclotomic { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Cyclotomic { a, b: Rational::zero() }
    }

    pub fn zeta() -> Self {
        Cyclotomic { a: Rational::zero(), b: Rational::one() }
    }

    /// The constant 1 + 2*zeta (a square root of -3).
    pub fn one_plus_two_zeta() -> Self {
        Cyclotomic { a: Rational::one(), b: Rational::from_int(2) }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugation zeta -> zeta^2 = -1 - zeta.
    pub fn conjugate(&self) -> Self {
        Cyclotomic { a: self.a.sub(&self.b), b: self.b.neg() }
    }

    /// Norm to Q: (a + b zeta)(a + b zeta^2) = a^2 - ab + b^2.
    pub fn norm(&self) -> Rational {
        self.a
            .mul(&self.a)
            .sub(&self.a.mul(&self.b))
            .add(&self.b.mul(&self.b))
    }

    /// 2-adic valuation; 2 is inert so this is min of the components.
    pub fn valuation2(&self) -> Valuation {
        std::cmp::min(self.a.valuation(2), self.b.valuation(2))
    }

    pub fn is_2_integral(&self) -> bool {
        self.valuation2().is_nonnegative()
    }

    /// Reduction modulo 2 into F4 = F2(zeta); defined exactly when both
    /// components are 2-integral.
    pub fn reduce_mod_2(&self) -> Result<F4> {
        if !self.is_2_integral() {
            return Err(Error::NonIntegral {
                monomial: "1".into(),
                p: 2,
                valuation: self.valuation2().finite().unwrap_or(0),
            });
        }
        Ok(F4::new(self.a.reduce_mod_p(2)? == 1, self.b.reduce_mod_p(2)? == 1))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { a: self.a.mul(r), b: self.b.mul(r) }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Cyclotomic::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!([self.a.to_string(), self.b.to_string()])
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Other(format!("bad cyclotomic: {v}")))?;
        Ok(Cyclotomic {
            a: Rational::from_json(&arr[0])?,
            b: Rational::from_json(&arr[1])?,
        })
    }
}

impl Coeff for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(Rational::zero())
    }

    fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Cyclotomic { a: self.a.add(&rhs.a), b: self.b.add(&rhs.b) }
    }

    fn neg(&self) -> Self {
        Cyclotomic { a: self.a.neg(), b: self.b.neg() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = -1 - z
        let ac = self.a.mul(&rhs.a);
        let bd = self.b.mul(&rhs.b);
        let ad_bc = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a));
        Cyclotomic { a: ac.sub(&bd), b: ad_bc.sub(&bd) }
    }

    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        let n_inv = n.inv()?;
        let c = self.conjugate();
        Some(c.scale(&n_inv))
    }

    fn from_int(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_int(n))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*zeta", self.b);
        }
        if self.b.is_negative() {
            write!(f, "({}-{}*zeta)", self.a, self.b.neg())
        } else {
            write!(f, "({}+{}*zeta)", self.a, self.b)
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
