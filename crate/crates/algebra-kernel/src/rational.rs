//! Arbitrary-precision rationals with p-adic structure.

use crate::{Coeff, Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// p-adic valuation value: finite or +infinity (for zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn is_nonnegative(&self) -> bool {
        match self {
            Valuation::Finite(v) => *v >= 0,
            Valuation::Infinity => true,
        }
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::Infinity => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "+inf"),
        }
    }
}

/// An exact rational number, always in lowest terms with positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn from_parts(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_parts(BigInt::from(num), BigInt::from(den))
    }

    /// Parse "a" or "a/b".
    pub fn parse(s: &str) -> Result<Self> {
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::Other(format!("bad integer: {t}")))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((a, b)) => {
                let den = parse_int(b)?;
                if den.is_zero() {
                    return Err(Error::Other("zero denominator".into()));
                }
                Ok(Rational(BigRational::new(parse_int(a)?, den)))
            }
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// p-adic valuation; `Infinity` for zero.
    pub fn valuation(&self, p: u64) -> Valuation {
        assert!(p >= 2, "p must be at least 2");
        if self.is_zero() {
            return Valuation::Infinity;
        }
        let pb = BigInt::from(p);
        Valuation::Finite(int_valuation(self.numer(), &pb) - int_valuation(self.denom(), &pb))
    }

    /// True when the p-adic valuation is >= 0 (the denominator is coprime
    /// to p).
    pub fn is_p_integral(&self, p: u64) -> bool {
        self.valuation(p).is_nonnegative()
    }

    /// Multiply by p^k (k may be negative).
    pub fn mul_p_power(&self, p: u64, k: i64) -> Self {
        let pw = BigInt::from(p).pow(k.unsigned_abs() as u32);
        if k >= 0 {
            Rational(&self.0 * BigRational::from_integer(pw))
        } else {
            Rational(&self.0 / BigRational::from_integer(pw))
        }
    }

    /// Canonical representative of `self` modulo `p^e * Z_(p)`.
    ///
    /// The result is the truncated p-adic digit expansion
    /// `sum_{v <= i < e} c_i p^i` with digits in `0..p`; in particular it is
    /// `0` when the valuation is at least `e`, and it lies in `[0, p^e)`
    /// whenever `self` is p-integral. Subtracting the result from `self`
    /// always yields an element of `p^e * Z_(p)`.
    pub fn padic_normal_form(&self, p: u64, e: i64) -> Self {
        let mut x = self.clone();
        let mut digits = Rational::zero();
        let pb = BigInt::from(p);
        loop {
            let v = match x.valuation(p) {
                Valuation::Infinity => break,
                Valuation::Finite(v) => v,
            };
            if v >= e {
                break;
            }
            // unit part u = x / p^v; digit = u mod p via numer * denom^-1.
            let u = x.mul_p_power(p, -v);
            let n = u.numer().mod_floor(&pb);
            let d = u.denom().mod_floor(&pb);
            let d_inv = mod_inverse(&d, &pb).expect("denominator invertible mod p");
            let digit = (n * d_inv).mod_floor(&pb);
            let term = Rational(BigRational::from_integer(digit)).mul_p_power(p, v);
            digits = digits.add(&term);
            x = x.sub(&term);
        }
        digits
    }

    /// Reduce modulo a prime p, failing on non-p-integral input.
    pub fn reduce_mod_p(&self, p: u64) -> Result<u64> {
        if !self.is_p_integral(p) {
            return Err(Error::NonIntegral {
                monomial: "1".into(),
                p,
                valuation: self.valuation(p).finite().unwrap_or(0),
            });
        }
        let pb = BigInt::from(p);
        let n = self.numer().mod_floor(&pb);
        let d = self.denom().mod_floor(&pb);
        let d_inv = mod_inverse(&d, &pb).expect("denominator invertible mod p");
        let r = (n * d_inv).mod_floor(&pb);
        let (_, digits) = r.to_u64_digits();
        Ok(digits.first().copied().unwrap_or(0))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Rational::one();
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
        serde_json::Value::String(self.to_string())
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        match v {
            serde_json::Value::String(s) => Rational::parse(s),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(Rational::from_i64)
                .ok_or_else(|| Error::Other(format!("bad rational: {n}"))),
            _ => Err(Error::Other(format!("bad rational: {v}"))),
        }
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    assert!(!n.is_zero());
    let mut v = 0i64;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if r.is_zero() {
            v += 1;
            m = q;
        } else {
            return v;
        }
    }
}

/// Inverse of a mod m for gcd(a, m) = 1.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-self.0.clone())
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn from_int(n: i64) -> Self {
        Rational::from_i64(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(Rational::zero().valuation(5), Valuation::Infinity);
        assert_eq!(Rational::ratio(1, 4).valuation(2), Valuation::Finite(-2));
        // -4900 / 3^10 has 3-adic valuation -10
        let q = Rational::from_parts(BigInt::from(-4900), BigInt::from(3).pow(10));
        assert_eq!(q.valuation(3), Valuation::Finite(-10));
    }

    #[test]
    fn valuation_additive() {
        let mut s = crate::rng::SplitMix64::new(7);
        for _ in 0..200 {
            let a = Rational::ratio(s.range_i64(-50, 50), 1 + s.range_i64(1, 40))
                .add(&Rational::from_i64(0));
            let b = Rational::ratio(s.range_i64(-50, 50), 1 + s.range_i64(1, 40));
            if a.is_zero() || b.is_zero() {
                continue;
            }
            for p in [2u64, 3, 5] {
                let va = a.valuation(p).finite().unwrap();
                let vb = b.valuation(p).finite().unwrap();
                assert_eq!(a.mul(&b).valuation(p), Valuation::Finite(va + vb));
            }
        }
    }

    #[test]
    fn padic_normal_form_digits() {
        // 7/2 mod 8 Z_(2): valuation -1; digits c_{-1}..c_2
        let x = Rational::ratio(7, 2);
        let r = x.padic_normal_form(2, 3);
        let diff = x.sub(&r);
        assert!(diff.valuation(2) >= Valuation::Finite(3));
        // idempotent
        assert_eq!(r.padic_normal_form(2, 3), r);
        // integral input lands in [0, p^e)
        let y = Rational::from_i64(-3);
        let ry = y.padic_normal_form(2, 3);
        assert_eq!(ry, Rational::from_i64(5));
    }

    #[test]
    fn reduce_mod_p_unit_denominator() {
        assert_eq!(Rational::ratio(1, 3).reduce_mod_p(2).unwrap(), 1);
        assert_eq!(Rational::ratio(-1, 9).reduce_mod_p(2).unwrap(), 1);
        assert!(Rational::ratio(1, 2).reduce_mod_p(2).is_err());
    }
}
