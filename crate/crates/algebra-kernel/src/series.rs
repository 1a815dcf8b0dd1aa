//! Truncated univariate series with polynomial coefficients.

use crate::poly::GradedPolynomial;
use crate::{Alphabet, Coeff, Error, Result};
use std::fmt;
use std::sync::Arc;

/// A series `sum_k coeffs[k] x^k` truncated at order `precision`:
/// coefficients of `x^k` for `k < precision` are trusted, everything above
/// is discarded. Operations never claim precision beyond the minimum of
/// their inputs.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<C: Coeff> {
    pub alphabet: Arc<Alphabet>,
    pub coeffs: Vec<GradedPolynomial<C>>,
    pub precision: usize,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn new(alphabet: &Arc<Alphabet>, coeffs: Vec<GradedPolynomial<C>>, precision: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.truncate(precision);
        while coeffs.len() < precision {
            coeffs.push(GradedPolynomial::zero(alphabet));
        }
        TruncatedSeries { alphabet: alphabet.clone(), coeffs, precision }
    }

    pub fn zero(alphabet: &Arc<Alphabet>, precision: usize) -> Self {
        Self::new(alphabet, Vec::new(), precision)
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: GradedPolynomial<C>, precision: usize) -> Self {
        Self::new(alphabet, vec![c], precision)
    }

    /// The identity series x.
    pub fn x(alphabet: &Arc<Alphabet>, precision: usize) -> Self {
        let mut coeffs = vec![GradedPolynomial::zero(alphabet); 2.min(precision)];
        if precision >= 2 {
            coeffs[1] = GradedPolynomial::one(alphabet);
        }
        Self::new(alphabet, coeffs, precision)
    }

    pub fn coeff(&self, k: usize) -> GradedPolynomial<C> {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| GradedPolynomial::zero(&self.alphabet))
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Self::new(&self.alphabet, self.coeffs.clone(), precision.min(self.precision))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.precision.min(rhs.precision);
        let coeffs = (0..prec).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect();
        Self::new(&self.alphabet, coeffs, prec)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(
            &self.alphabet,
            self.coeffs.iter().map(|c| c.neg()).collect(),
            self.precision,
        )
    }

    pub fn scale(&self, c: &GradedPolynomial<C>) -> Self {
        Self::new(
            &self.alphabet,
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
            self.precision,
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.precision.min(rhs.precision);
        let mut coeffs = vec![GradedPolynomial::zero(&self.alphabet); prec];
        for (i, a) in self.coeffs.iter().enumerate().take(prec) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= prec {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::new(&self.alphabet, coeffs, prec)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(&self.alphabet, GradedPolynomial::one(&self.alphabet), self.precision);
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

    /// Formal derivative d/dx.
    pub fn derivative(&self) -> Self {
        let prec = self.precision.saturating_sub(1);
        let coeffs = (0..prec)
            .map(|k| self.coeff(k + 1).scale(&C::from_int((k + 1) as i64)))
            .collect();
        Self::new(&self.alphabet, coeffs, prec)
    }

    /// Compose `self(inner)`; the inner series must have zero constant
    /// term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let prec = self.precision.min(inner.precision);
        let mut acc = Self::zero(&self.alphabet, prec);
        // Horner evaluation from the top coefficient down.
        for k in (0..prec).rev() {
            acc = acc.mul(inner);
            acc = acc.add(&Self::constant(&self.alphabet, self.coeff(k), prec));
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a series whose constant term is a nonzero
    /// scalar (a constant polynomial with invertible coefficient).
    pub fn invert_unit(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        let unit = c0.coefficient(&crate::GradedMonomial::unit(&self.alphabet));
        if c0.num_terms() > 1 || unit.is_zero() {
            return Err(Error::NotAUnit);
        }
        let unit_inv = unit.inv().ok_or(Error::NotAUnit)?;
        let mut inv = vec![GradedPolynomial::zero(&self.alphabet); self.precision];
        inv[0] = GradedPolynomial::constant(&self.alphabet, unit_inv.clone());
        for n in 1..self.precision {
            let mut s = GradedPolynomial::zero(&self.alphabet);
            for k in 1..=n {
                s = s.add(&self.coeff(k).mul(&inv[n - k]));
            }
            inv[n] = s.neg().scale(&unit_inv);
        }
        Ok(Self::new(&self.alphabet, inv, self.precision))
    }

    /// Compositional inverse of `f = x + (higher order)`: returns `g` with
    /// `f(g(x)) = g(f(x)) = x` to the stored precision.
    ///
    /// Solved triangularly: the x^n coefficient of `f(g)` is `g_n` plus
    /// terms depending only on `g_k` for `k < n`.
    pub fn reverse(&self) -> Result<Self> {
        if self.precision < 2 {
            return Err(Error::PrecisionTooSmall(self.precision, 2));
        }
        if !self.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let lead = self.coeff(1);
        if lead != GradedPolynomial::one(&self.alphabet) {
            return Err(Error::LeadingCoefficientNotOne);
        }
        let mut g = Self::x(&self.alphabet, self.precision);
        for n in 2..self.precision {
            let h = self.compose(&g)?;
            // f(g) = x + c x^n + ... ; correct g by -c x^n.
            let c = h.coeff(n);
            if c.is_zero() {
                continue;
            }
            let mut coeffs = g.coeffs.clone();
            coeffs[n] = coeffs[n].sub(&c);
            g = Self::new(&self.alphabet, coeffs, self.precision);
        }
        Ok(g)
    }
}

impl<C: Coeff> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*x^{}", c.render(), k)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.precision)
    }
}

impl<C: Coeff> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn empty_alph() -> Arc<Alphabet> {
        Alphabet::new("scalar", vec![])
    }

    #[test]
    fn reverse_identity() {
        let al = empty_alph();
        let x = TruncatedSeries::<Rational>::x(&al, 6);
        assert_eq!(x.reverse().unwrap(), x);
    }

    #[test]
    fn reverse_x_plus_x2() {
        // hand-solved oracle: g = x - x^2 + 2x^3 - 5x^4 (mod x^5)
        let al = empty_alph();
        let one = GradedPolynomial::<Rational>::one(&al);
        let f = TruncatedSeries::new(
            &al,
            vec![GradedPolynomial::zero(&al), one.clone(), one.clone()],
            5,
        );
        let g = f.reverse().unwrap();
        let expect = [0i64, 1, -1, 2, -5];
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(
                g.coeff(k),
                GradedPolynomial::constant(&al, Rational::from_i64(e)),
                "coefficient of x^{k}"
            );
        }
        // both round trips
        assert_eq!(f.compose(&g).unwrap(), TruncatedSeries::x(&al, 5));
        assert_eq!(g.compose(&f).unwrap(), TruncatedSeries::x(&al, 5));
    }

    #[test]
    fn reverse_involution_random() {
        let al = empty_alph();
        let mut s = crate::rng::SplitMix64::new(42);
        for _ in 0..50 {
            let mut coeffs = vec![
                GradedPolynomial::zero(&al),
                GradedPolynomial::one(&al),
            ];
            for _ in 2..7 {
                coeffs.push(GradedPolynomial::constant(
                    &al,
                    Rational::ratio(s.range_i64(-9, 9), 1 + s.range_i64(1, 6)),
                ));
            }
            let f = TruncatedSeries::new(&al, coeffs, 7);
            let g = f.reverse().unwrap();
            assert_eq!(g.reverse().unwrap(), f);
        }
    }

    #[test]
    fn invert_unit_series() {
        let al = empty_alph();
        let one = GradedPolynomial::<Rational>::one(&al);
        // 1/(1 - x) = 1 + x + x^2 + ...
        let f = TruncatedSeries::new(
            &al,
            vec![one.clone(), one.neg()],
            6,
        );
        let inv = f.invert_unit().unwrap();
        for k in 0..6 {
            assert_eq!(inv.coeff(k), one);
        }
        assert_eq!(f.mul(&inv).coeff(0), one);
    }
}
