//! Exact coefficient arithmetic and graded symbolic algebra.
//!
//! This crate provides the arithmetic kernel used by the rest of the
//! workspace:
//!
//! - [`Rational`]: arbitrary-precision rationals, always in lowest terms,
//!   with p-adic valuations and canonical p-adic normal forms;
//! - [`Cyclotomic`]: the quadratic extension by a primitive cube root of
//!   unity, `a + b*zeta` with `zeta^2 + zeta + 1 = 0`;
//! - [`F2`], [`F4`]: the residue fields that mod-2 reduction lands in;
//! - [`GradedPolynomial`]: sparse multivariate polynomials over a declared
//!   alphabet of graded generators, with a deterministic graded-lex term
//!   order;
//! - [`TruncatedSeries`]: truncated univariate series with polynomial
//!   coefficients, supporting composition, reversion and unit inversion;
//! - [`QExpansion`]: truncated scalar series (q-expansions) with explicit
//!   precision.
//!
//! All values are immutable after construction and every operation is pure,
//! so values can be shared freely between threads.

pub mod alphabet;
pub mod cyclotomic;
pub mod monomial;
pub mod poly;
pub mod qexp;
pub mod rational;
pub mod residue;
pub mod rng;
pub mod series;

pub use alphabet::{Alphabet, Generator};
pub use cyclotomic::Cyclotomic;
pub use monomial::GradedMonomial;
pub use poly::GradedPolynomial;
pub use qexp::QExpansion;
pub use rational::{Rational, Valuation};
pub use residue::{F2, F4};
pub use series::TruncatedSeries;

use std::fmt;

/// Errors reported by kernel operations.
#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum Error {
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(String, String),
    #[error("degree-violating substitution for {gen}: expected {expected}, got {got}")]
    DegreeViolation { gen: String, expected: i64, got: String },
    #[error("non-integral coefficient at {monomial}: {p}-adic valuation {valuation}")]
    NonIntegral { monomial: String, p: u64, valuation: i64 },
    #[error("series has nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series leading coefficient is not one")]
    LeadingCoefficientNotOne,
    #[error("precision {0} too small, need at least {1}")]
    PrecisionTooSmall(usize, usize),
    #[error("input is not homogeneous")]
    Inhomogeneous,
    #[error("cannot invert: leading coefficient is not a unit")]
    NotAUnit,
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Common interface for exact coefficient domains.
///
/// Implementations must be exact: there is no floating point anywhere in
/// this workspace, and division is only available when it is exact.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_int(n: i64) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// FNV-1a digest of a canonical byte rendering; used for stable output
/// digests in the structured CLI format.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}
