//! Sparse graded multivariate polynomials.

use crate::alphabet::Alphabet;
use crate::monomial::GradedMonomial;
use crate::rational::Valuation;
use crate::{Coeff, Cyclotomic, Error, Rational, Result, F4};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A polynomial over a declared alphabet, stored as a sorted term map with
/// no zero coefficients. The `BTreeMap` keyed by the graded-lex monomial
/// order makes iteration, printing and serialization deterministic.
#[derive(Clone, PartialEq)]
pub struct GradedPolynomial<C: Coeff> {
    pub alphabet: Arc<Alphabet>,
    pub terms: BTreeMap<GradedMonomial, C>,
}

impl<C: Coeff> GradedPolynomial<C> {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        GradedPolynomial { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: C) -> Self {
        let mut poly = Self::zero(alphabet);
        if !c.is_zero() {
            poly.terms.insert(GradedMonomial::unit(alphabet), c);
        }
        poly
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::constant(alphabet, C::one())
    }

    /// The generator `name` as a polynomial.
    pub fn gen(alphabet: &Arc<Alphabet>, name: &str) -> Result<Self> {
        let idx = alphabet.index_of(name)?;
        Ok(Self::monomial_term(alphabet, GradedMonomial::single(alphabet, idx, 1), C::one()))
    }

    pub fn monomial_term(alphabet: &Arc<Alphabet>, m: GradedMonomial, c: C) -> Self {
        let mut poly = Self::zero(alphabet);
        if !c.is_zero() {
            poly.terms.insert(m, c);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &GradedMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn check_compatible(&self, rhs: &Self) -> Result<()> {
        if self.alphabet == rhs.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(
                self.alphabet.name.clone(),
                rhs.alphabet.name.clone(),
            ))
        }
    }

    fn insert_term(&mut self, m: GradedMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_compatible(rhs).expect("alphabet mismatch in add");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        GradedPolynomial {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        let mut out = Self::zero(&self.alphabet);
        for (m, a) in &self.terms {
            out.insert_term(m.clone(), a.mul(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_compatible(rhs).expect("alphabet mismatch in mul");
        let mut out = Self::zero(&self.alphabet);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.alphabet);
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

    /// Total degree when homogeneous; `Err` otherwise. The zero polynomial
    /// is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Result<Option<i64>> {
        let mut deg = None;
        for m in self.terms.keys() {
            match deg {
                None => deg = Some(m.degree()),
                Some(d) if d == m.degree() => {}
                Some(_) => return Err(Error::Inhomogeneous),
            }
        }
        Ok(deg)
    }

    pub fn homogeneous_component(&self, degree: i64) -> Self {
        GradedPolynomial {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn degrees_present(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.keys().map(|m| m.degree()).collect();
        ds.dedup();
        ds
    }

    /// Substitute each generator by a polynomial over `target`. Every image
    /// must be homogeneous of the generator's degree, which preserves
    /// homogeneity of the result.
    pub fn substitute(
        &self,
        target: &Arc<Alphabet>,
        images: &[GradedPolynomial<C>],
    ) -> Result<GradedPolynomial<C>> {
        if images.len() != self.alphabet.len() {
            return Err(Error::Other("substitution image count mismatch".into()));
        }
        for (i, img) in images.iter().enumerate() {
            if img.alphabet != *target {
                return Err(Error::AlphabetMismatch(
                    img.alphabet.name.clone(),
                    target.name.clone(),
                ));
            }
            let expected = self.alphabet.degree(i);
            match img.homogeneous_degree() {
                Ok(None) => {}
                Ok(Some(d)) if d == expected => {}
                _ => {
                    return Err(Error::DegreeViolation {
                        gen: self.alphabet.gen_name(i).to_string(),
                        expected,
                        got: format!("{:?}", img.degrees_present()),
                    })
                }
            }
        }
        let mut out = GradedPolynomial::zero(target);
        // Cache generator powers across terms.
        let mut powers: Vec<BTreeMap<u32, GradedPolynomial<C>>> =
            vec![BTreeMap::new(); images.len()];
        for (m, c) in &self.terms {
            let mut term = GradedPolynomial::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers[i]
                    .entry(e)
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                term = term.mul(&pw);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Rename-style substitution: each generator maps to a single generator
    /// of the target alphabet (given by name), with degree checking.
    pub fn rename_into(
        &self,
        target: &Arc<Alphabet>,
        map: &[(usize, usize)],
    ) -> Result<GradedPolynomial<C>> {
        let mut out = GradedPolynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for &(src, dst) in map {
                if m.exps[src] > 0 {
                    if self.alphabet.degree(src) != target.degree(dst) {
                        return Err(Error::DegreeViolation {
                            gen: self.alphabet.gen_name(src).to_string(),
                            expected: self.alphabet.degree(src),
                            got: target.degree(dst).to_string(),
                        });
                    }
                    exps[dst] += m.exps[src];
                }
            }
            let total: u32 = m.exps.iter().sum();
            let mapped: u32 = map.iter().map(|&(src, _)| m.exps[src]).sum();
            if total != mapped {
                return Err(Error::Other(format!(
                    "rename map does not cover monomial {}",
                    m.render(&self.alphabet)
                )));
            }
            out.insert_term(GradedMonomial::new(target, exps), c.clone());
        }
        Ok(out)
    }

    pub fn map_coefficients<D: Coeff>(&self, f: impl Fn(&C) -> D) -> GradedPolynomial<D> {
        let mut out = GradedPolynomial::zero(&self.alphabet);
        for (m, c) in &self.terms {
            out.insert_term(m.clone(), f(c));
        }
        out
    }

    /// Canonical text form, leading (largest) term first.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let cs = c.to_string();
            if i > 0 {
                if let Some(stripped) = cs.strip_prefix('-') {
                    out.push_str(" - ");
                    Self::push_term(&mut out, stripped, m, &self.alphabet);
                    continue;
                }
                out.push_str(" + ");
            }
            Self::push_term(&mut out, &cs, m, &self.alphabet);
        }
        out
    }

    fn push_term(out: &mut String, coeff: &str, m: &GradedMonomial, alphabet: &Alphabet) {
        if m.is_unit() {
            out.push_str(coeff);
        } else if coeff == "1" {
            out.push_str(&m.render(alphabet));
        } else {
            out.push_str(coeff);
            out.push('*');
            out.push_str(&m.render(alphabet));
        }
    }

    pub fn to_json_with(&self, coeff: impl Fn(&C) -> serde_json::Value) -> serde_json::Value {
        serde_json::json!({
            "format_version": 1,
            "alphabet": self.alphabet.to_json(),
            "terms": self
                .terms
                .iter()
                .map(|(m, c)| serde_json::json!([m.exps, coeff(c)]))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json_with(
        v: &serde_json::Value,
        coeff: impl Fn(&serde_json::Value) -> Result<C>,
    ) -> Result<Self> {
        let alphabet = Alphabet::from_json(&v["alphabet"])?;
        let mut out = GradedPolynomial::zero(&alphabet);
        for t in v["terms"]
            .as_array()
            .ok_or_else(|| Error::Other("polynomial missing terms".into()))?
        {
            let pair = t
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Other(format!("bad term: {t}")))?;
            let exps = pair[0]
                .as_array()
                .ok_or_else(|| Error::Other("bad exponents".into()))?
                .iter()
                .map(|e| e.as_u64().unwrap_or(0) as u32)
                .collect();
            out.insert_term(GradedMonomial::new(&alphabet, exps), coeff(&pair[1])?);
        }
        Ok(out)
    }
}

impl GradedPolynomial<Rational> {
    /// Minimal p-adic valuation over all coefficients.
    pub fn min_valuation(&self, p: u64) -> Valuation {
        self.terms
            .values()
            .map(|c| c.valuation(p))
            .min()
            .unwrap_or(Valuation::Infinity)
    }

    /// Fails with the offending monomial when some coefficient is not
    /// p-integral.
    pub fn assert_p_integral(&self, p: u64) -> Result<()> {
        for (m, c) in &self.terms {
            if !c.is_p_integral(p) {
                return Err(Error::NonIntegral {
                    monomial: m.render(&self.alphabet),
                    p,
                    valuation: c.valuation(p).finite().unwrap_or(0),
                });
            }
        }
        Ok(())
    }

    /// Reduce every coefficient into its canonical representative in
    /// `[0, p^r)`; requires p-integral coefficients.
    pub fn reduce_coeffs_mod_p_power(&self, p: u64, r: u32) -> Result<Self> {
        self.assert_p_integral(p)?;
        let mut out = Self::zero(&self.alphabet);
        for (m, c) in &self.terms {
            out.insert_term(m.clone(), c.padic_normal_form(p, r as i64));
        }
        Ok(out)
    }

    /// Exact division by `v^s` where `v` is the generator at `idx`:
    /// every monomial must carry exponent at least `s`.
    pub fn divide_by_gen_power(&self, idx: usize, s: u32) -> Result<Self> {
        let div = GradedMonomial::single(&self.alphabet, idx, s);
        let mut out = Self::zero(&self.alphabet);
        for (m, c) in &self.terms {
            match m.div(&div) {
                Some(q) => out.insert_term(q, c.clone()),
                None => {
                    return Err(Error::Other(format!(
                        "not divisible by {}^{}: term {}",
                        self.alphabet.gen_name(idx),
                        s,
                        m.render(&self.alphabet)
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(r)
    }

    pub fn to_cyclotomic(&self) -> GradedPolynomial<Cyclotomic> {
        self.map_coefficients(|c| Cyclotomic::from_rational(c.clone()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.to_json_with(Rational::to_json)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        Self::from_json_with(v, Rational::from_json)
    }
}

impl GradedPolynomial<Cyclotomic> {
    /// Componentwise residue reduction into F4; reports the offending
    /// monomial on non-2-integral coefficients.
    pub fn reduce_mod_2(&self) -> Result<GradedPolynomial<F4>> {
        let mut out = GradedPolynomial::zero(&self.alphabet);
        for (m, c) in &self.terms {
            let r = c.reduce_mod_2().map_err(|_| Error::NonIntegral {
                monomial: m.render(&self.alphabet),
                p: 2,
                valuation: c.valuation2().finite().unwrap_or(0),
            })?;
            out.insert_term(m.clone(), r);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.to_json_with(Cyclotomic::to_json)
    }
}

impl<C: Coeff> fmt::Display for GradedPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<C: Coeff> fmt::Debug for GradedPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(al: &Arc<Alphabet>, name: &str) -> GradedPolynomial<Rational> {
        GradedPolynomial::gen(al, name).unwrap()
    }

    #[test]
    fn product_degree_bookkeeping() {
        let al = Alphabet::bp(2, 2);
        let v1 = v(&al, "v1");
        let sq = v1.mul(&v1);
        assert_eq!(sq.homogeneous_degree().unwrap(), Some(4));
        assert_eq!(sq.num_terms(), 1);
    }

    #[test]
    fn substitution_respects_degrees() {
        // substitute v1 -> a1, v2 -> a3 in v2 + v1^3 at p = 2
        let bp = Alphabet::bp(2, 2);
        let l3 = Alphabet::level3();
        let poly = v(&bp, "v2").add(&v(&bp, "v1").pow(3));
        let images = vec![
            GradedPolynomial::gen(&l3, "a1").unwrap(),
            GradedPolynomial::gen(&l3, "a3").unwrap(),
        ];
        let out = poly.substitute(&l3, &images).unwrap();
        assert_eq!(out.homogeneous_degree().unwrap(), Some(6));
        assert_eq!(out.num_terms(), 2);
        // degree-violating substitution is rejected
        let bad = vec![
            GradedPolynomial::gen(&l3, "a3").unwrap(),
            GradedPolynomial::gen(&l3, "a3").unwrap(),
        ];
        assert!(poly.substitute(&l3, &bad).is_err());
    }

    #[test]
    fn discriminant_expansion() {
        // a3^3 (a1^3 - 27 a3) = a1^3 a3^3 - 27 a3^4
        let l3 = Alphabet::level3();
        let a1 = v(&l3, "a1");
        let a3 = v(&l3, "a3");
        let disc = a3
            .pow(3)
            .mul(&a1.pow(3).sub(&a3.scale(&Rational::from_i64(27))));
        assert_eq!(disc.num_terms(), 2);
        assert_eq!(disc.render(), "a1^3*a3^3 - 27*a3^4");
        assert_eq!(disc.homogeneous_degree().unwrap(), Some(24));
    }

    #[test]
    fn alphabet_mismatch_detected() {
        let a = Alphabet::bp(2, 2);
        let b = Alphabet::bp(3, 2);
        let pa = v(&a, "v1");
        let pb = v(&b, "v1");
        assert!(pa.check_compatible(&pb).is_err());
    }
}
