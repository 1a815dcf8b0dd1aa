//! Graded monomials over a declared alphabet.

use crate::alphabet::Alphabet;
use std::cmp::Ordering;
use std::fmt::Write;

/// A monomial is a dense exponent vector over its alphabet. The total
/// topological degree is the exponent-weighted sum of generator degrees.
///
/// Ordering is graded lexicographic: lower total degree first, ties broken
/// by comparing exponent vectors lexicographically in generator-precedence
/// order (so the earliest generator is the most significant).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GradedMonomial {
    pub exps: Vec<u32>,
    degree: i64,
}

impl GradedMonomial {
    pub fn new(alphabet: &Alphabet, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), alphabet.len(), "exponent vector length");
        let degree = exps
            .iter()
            .enumerate()
            .map(|(i, &e)| alphabet.degree(i) * e as i64)
            .sum();
        GradedMonomial { exps, degree }
    }

    pub fn unit(alphabet: &Alphabet) -> Self {
        GradedMonomial { exps: vec![0; alphabet.len()], degree: 0 }
    }

    pub fn single(alphabet: &Alphabet, idx: usize, exp: u32) -> Self {
        let mut exps = vec![0; alphabet.len()];
        exps[idx] = exp;
        GradedMonomial::new(alphabet, exps)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), rhs.exps.len());
        GradedMonomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + rhs.degree,
        }
    }

    /// Exact division, `None` when some exponent underflows.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&rhs.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(GradedMonomial { exps, degree: self.degree - rhs.degree })
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            if e == 1 {
                let _ = write!(out, "{}", alphabet.gen_name(i));
            } else {
                let _ = write!(out, "{}^{}", alphabet.gen_name(i), e);
            }
        }
        out
    }
}

impl Ord for GradedMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for GradedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
