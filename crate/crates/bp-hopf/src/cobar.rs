//! A small model of the rationalised cosimplicial complex.
//!
//! Degree n holds (n+1)-fold tensors of BP-coefficient monomials with
//! rational coefficients. Cofaces insert a 1; the full differential is the
//! alternating coface sum. Modulo the subcomplex spanned by tensors with a
//! constant in some non-leading slot, the differential collapses to
//! "prepend 1", which is what the Greek-letter recipe uses.

use crate::BpContext;
use algebra_kernel::{Coeff, GradedMonomial, Rational};
use std::collections::BTreeMap;

/// A sum of elementary tensors `c * (m_0 (x) ... (x) m_n)` of monomials in
/// the v's.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement {
    pub terms: BTreeMap<Vec<GradedMonomial>, Rational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn single(factors: Vec<GradedMonomial>, c: Rational) -> Self {
        let mut t = TensorElement::zero();
        t.insert(factors, c);
        t
    }

    fn insert(&mut self, factors: Vec<GradedMonomial>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(factors).or_insert_with(Rational::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            // re-borrow to remove; key clone is cheap enough here
            let dead: Vec<Vec<GradedMonomial>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = TensorElement::zero();
        for (k, v) in &self.terms {
            out.insert(k.clone(), v.mul(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coface: insert the unit monomial at slot `i` (0-based, up to n+1).
    pub fn coface(&self, ctx: &BpContext, i: usize) -> Self {
        let unit = GradedMonomial::unit(&ctx.bp);
        let mut out = TensorElement::zero();
        for (k, v) in &self.terms {
            let mut f = k.clone();
            f.insert(i, unit.clone());
            out.insert(f, v.clone());
        }
        out
    }

    /// Full differential: alternating sum of all cofaces.
    pub fn differential(&self, ctx: &BpContext) -> Self {
        let n = match self.terms.keys().next() {
            Some(k) => k.len(),
            None => return TensorElement::zero(),
        };
        let mut out = TensorElement::zero();
        for i in 0..=n {
            let face = self.coface(ctx, i);
            let sign = if i % 2 == 0 { Rational::one() } else { Rational::from_i64(-1) };
            out = out.add(&face.scale(&sign));
        }
        out
    }

    /// Reduce modulo the subcomplex: drop tensors whose slot i >= 1 holds a
    /// constant.
    pub fn sigma_reduce(&self) -> Self {
        let mut out = TensorElement::zero();
        for (k, v) in &self.terms {
            if k.iter().skip(1).any(|m| m.is_unit()) {
                continue;
            }
            out.insert(k.clone(), v.clone());
        }
        out
    }
}
