//! Truncated scalar power series: q-expansions with explicit precision.

use crate::{Coeff, Error, Result};
use std::fmt;

/// `sum_{0 <= n < precision} coeffs[n] q^n`; coefficients beyond the stored
/// precision are unknown, and arithmetic never claims precision beyond the
/// minimum of its inputs.
#[derive(Clone, PartialEq)]
pub struct QExpansion<C: Coeff> {
    pub coeffs: Vec<C>,
    pub precision: usize,
}

impl<C: Coeff> QExpansion<C> {
    pub fn new(mut coeffs: Vec<C>, precision: usize) -> Self {
        coeffs.truncate(precision);
        while coeffs.len() < precision {
            coeffs.push(C::zero());
        }
        QExpansion { coeffs, precision }
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(Vec::new(), precision)
    }

    pub fn constant(c: C, precision: usize) -> Self {
        Self::new(vec![c], precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(C::one(), precision)
    }

    /// Build from a coefficient function.
    pub fn from_fn(precision: usize, f: impl Fn(usize) -> C) -> Self {
        Self::new((0..precision).map(f).collect(), precision)
    }

    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    /// Constant-term extraction; total.
    pub fn q0(&self) -> C {
        self.coeff(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Self::new(self.coeffs.clone(), precision.min(self.precision))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.precision.min(rhs.precision);
        Self::from_fn(prec, |n| self.coeff(n).add(&rhs.coeff(n)))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.neg()).collect(), self.precision)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.precision)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.precision.min(rhs.precision);
        let mut coeffs = vec![C::zero(); prec];
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
        Self::new(coeffs, prec)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.precision);
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

    /// Inverse of a series with invertible constant term.
    pub fn invert(&self) -> Result<Self> {
        let u = self.q0().inv().ok_or(Error::NotAUnit)?;
        let mut inv = vec![C::zero(); self.precision];
        if self.precision == 0 {
            return Ok(Self::new(inv, 0));
        }
        inv[0] = u.clone();
        for n in 1..self.precision {
            let mut s = C::zero();
            for k in 1..=n {
                s = s.add(&self.coeff(k).mul(&inv[n - k]));
            }
            inv[n] = s.neg().mul(&u);
        }
        Ok(Self::new(inv, self.precision))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QExpansion<D> {
        QExpansion::new(self.coeffs.iter().map(f).collect(), self.precision)
    }

    /// Fallible coefficient map, reporting the failing q-power.
    pub fn try_map<D: Coeff>(
        &self,
        f: impl Fn(&C) -> Result<D>,
    ) -> Result<QExpansion<D>> {
        let mut out = Vec::with_capacity(self.precision);
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push(f(c).map_err(|e| Error::Other(format!("coefficient of q^{n}: {e}")))?);
        }
        Ok(QExpansion::new(out, self.precision))
    }

    pub fn render(&self, max_terms: usize) -> String {
        let mut out = String::new();
        let mut shown = 0;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if shown >= max_terms {
                out.push_str(" + ...");
                break;
            }
            if shown > 0 {
                out.push_str(" + ");
            }
            if n == 0 {
                out.push_str(&c.to_string());
            } else if c.is_one() {
                out.push_str(&format!("q^{n}"));
            } else {
                out.push_str(&format!("({c})*q^{n}"));
            }
            shown += 1;
        }
        if shown == 0 {
            out.push('0');
        }
        out.push_str(&format!(" + O(q^{})", self.precision));
        out
    }

    pub fn to_json_with(&self, coeff: impl Fn(&C) -> serde_json::Value) -> serde_json::Value {
        serde_json::json!({
            "precision": self.precision,
            "coeffs": self.coeffs.iter().map(coeff).collect::<Vec<_>>(),
        })
    }

    pub fn from_json_with(
        v: &serde_json::Value,
        coeff: impl Fn(&serde_json::Value) -> Result<C>,
    ) -> Result<Self> {
        let precision = v["precision"]
            .as_u64()
            .ok_or_else(|| Error::Other("q-expansion missing precision".into()))?
            as usize;
        let coeffs = v["coeffs"]
            .as_array()
            .ok_or_else(|| Error::Other("q-expansion missing coeffs".into()))?
            .iter()
            .map(coeff)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs, precision))
    }
}

impl<C: Coeff> fmt::Display for QExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(12))
    }
}

impl<C: Coeff> fmt::Debug for QExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(6))
    }
}
