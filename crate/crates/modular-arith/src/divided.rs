//! Divided congruences: mixed-weight sums of modular forms with a joint
//! q-expansion and an integrality verdict.

use crate::qseries::{CycPoly, CycSeries, ModularCtx};
use crate::Level;
use algebra_kernel::rational::Valuation;
use algebra_kernel::{Coeff, Cyclotomic, GradedPolynomial, QExpansion, Rational};
use std::collections::BTreeMap;
use std::fmt;

/// A finite list of (weight, form) pairs. The forms are polynomials in the
/// base modular generators with coefficients in Q(zeta) (level 3) or Q
/// (level 1, zeta-part zero). Integrality is a property of the joint
/// q-expansion, never of the individual parts.
#[derive(Clone, PartialEq)]
pub struct DividedCongruence {
    pub level: Level,
    pub p: u64,
    pub parts: BTreeMap<i64, CycPoly>,
}

impl DividedCongruence {
    pub fn zero(level: Level, p: u64) -> Self {
        DividedCongruence { level, p, parts: BTreeMap::new() }
    }

    pub fn constant(level: Level, p: u64, base: &std::sync::Arc<algebra_kernel::Alphabet>, c: Cyclotomic) -> Self {
        let mut dc = Self::zero(level, p);
        dc.add_part(0, CycPoly::constant(base, c));
        dc
    }

    /// Insert `form` into the weight bucket, merging and pruning zeros.
    pub fn add_part(&mut self, weight: i64, form: CycPoly) {
        if form.is_zero() {
            return;
        }
        match self.parts.entry(weight) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(form);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let merged = e.get().add(&form);
                if merged.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = merged;
                }
            }
        }
    }

    /// A single homogeneous form placed at its weight (degree/2).
    pub fn from_form(level: Level, p: u64, form: CycPoly) -> Self {
        let mut dc = Self::zero(level, p);
        if let Ok(Some(d)) = form.homogeneous_degree() {
            dc.add_part(d / 2, form);
        } else if !form.is_zero() {
            // split by weight
            let mut by_weight: BTreeMap<i64, CycPoly> = BTreeMap::new();
            for (m, c) in &form.terms {
                by_weight
                    .entry(m.degree() / 2)
                    .or_insert_with(|| CycPoly::zero(&form.alphabet))
                    .terms
                    .insert(m.clone(), c.clone());
            }
            for (w, f) in by_weight {
                dc.add_part(w, f);
            }
        }
        dc
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn top_weight(&self) -> i64 {
        self.parts.keys().next_back().copied().unwrap_or(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, f) in &rhs.parts {
            out.add_part(*w, f.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        DividedCongruence {
            level: self.level,
            p: self.p,
            parts: self.parts.iter().map(|(w, f)| (*w, f.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.level, self.p);
        for (w, f) in &self.parts {
            out.add_part(*w, f.scale(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.level, self.p);
        for (w1, f1) in &self.parts {
            for (w2, f2) in &rhs.parts {
                out.add_part(w1 + w2, f1.mul(f2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = match self.parts.values().next() {
            Some(f) => DividedCongruence::constant(self.level, self.p, &f.alphabet, Cyclotomic::one()),
            None => return self.clone(),
        };
        if k == 0 {
            return acc;
        }
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

    /// Diamond operator `[alpha]`: the weight-i part is scaled by alpha^i.
    /// `alpha` must be a p-adic unit.
    pub fn diamond(&self, alpha: i64) -> Self {
        assert!(alpha.rem_euclid(self.p as i64) != 0, "diamond needs a p-adic unit");
        let mut out = Self::zero(self.level, self.p);
        for (w, f) in &self.parts {
            let scalar = Cyclotomic::from_rational(Rational::from_i64(alpha).pow(*w as u32));
            out.add_part(*w, f.scale(&scalar));
        }
        out
    }

    /// The joint q-expansion of the mixed-weight sum.
    pub fn joint_expansion(&self, ctx: &ModularCtx, precision: usize) -> CycSeries {
        let mut total = QExpansion::zero(precision);
        for f in self.parts.values() {
            total = total.add(&ctx.evaluate(f, precision));
        }
        total
    }

    /// Integrality verdict to the stated precision: every joint
    /// coefficient must be p-integral. Returns the first offending
    /// q-power and valuation otherwise.
    pub fn integrality(&self, ctx: &ModularCtx, precision: usize) -> Result<(), (usize, i64)> {
        let series = self.joint_expansion(ctx, precision);
        for (n, c) in series.coeffs.iter().enumerate() {
            let v = match self.p {
                2 => c.valuation2(),
                p => {
                    // level 1: the zeta-part is identically zero
                    std::cmp::min(c.a.valuation(p), c.b.valuation(p))
                }
            };
            if let Valuation::Finite(v) = v {
                if v < 0 {
                    return Err((n, v));
                }
            }
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        if self.parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, f)) in self.parts.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            out.push_str(&format!("[wt {w}] {}", f.render()));
        }
        out
    }
}

impl fmt::Display for DividedCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for DividedCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Convenience: a divided congruence from a rational-coefficient form.
pub fn from_rational_form(level: Level, p: u64, form: &GradedPolynomial<Rational>) -> DividedCongruence {
    DividedCongruence::from_form(level, p, form.to_cyclotomic())
}
