//! Residue fields for mod-p reduction.
//!
//! [`F4`] is F2(zeta) with `zeta^2 = 1 + zeta` (the reduction of
//! `zeta^2 = -1 - zeta` in characteristic 2); it is where level-3
//! divided-congruence arithmetic lands mod 2. [`F2`] is the prime field,
//! used for Chern-number parity polynomials. Level-1 work mod an odd prime
//! uses plain `u64` residues handled by the modular-arithmetic crate.

use crate::Coeff;
use std::fmt;

/// Element a + b*zetabar of F4, with zetabar^2 = 1 + zetabar.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F4 {
    pub a: bool,
    pub b: bool,
}

impl F4 {
    pub fn new(a: bool, b: bool) -> Self {
        F4 { a, b }
    }

    pub fn zeta() -> Self {
        F4 { a: false, b: true }
    }

    /// Frobenius x -> x^2.
    pub fn frobenius(&self) -> Self {
        // (a + b z)^2 = a + b z^2 = a + b(1 + z) = (a + b) + b z
        F4 { a: self.a ^ self.b, b: self.b }
    }

    /// Trace to F2: x + x^2.
    pub fn trace(&self) -> F2 {
        let s = self.add(&self.frobenius());
        debug_assert!(!s.b);
        F2(s.a)
    }
}

impl Coeff for F4 {
    fn zero() -> Self {
        F4 { a: false, b: false }
    }

    fn one() -> Self {
        F4 { a: true, b: false }
    }

    fn is_zero(&self) -> bool {
        !self.a && !self.b
    }

    fn add(&self, rhs: &Self) -> Self {
        F4 { a: self.a ^ rhs.a, b: self.b ^ rhs.b }
    }

    fn neg(&self) -> Self {
        *self
    }

    fn mul(&self, rhs: &Self) -> Self {
        // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = 1 + z
        let ac = self.a & rhs.a;
        let bd = self.b & rhs.b;
        let ad_bc = (self.a & rhs.b) ^ (self.b & rhs.a);
        F4 { a: ac ^ bd, b: ad_bc ^ bd }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x^3 = 1 for x != 0, so x^-1 = x^2
        Some(self.frobenius())
    }

    fn from_int(n: i64) -> Self {
        if n.rem_euclid(2) == 1 {
            F4::one()
        } else {
            F4::zero()
        }
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (false, false) => write!(f, "0"),
            (true, false) => write!(f, "1"),
            (false, true) => write!(f, "zeta"),
            (true, true) => write!(f, "1+zeta"),
        }
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2(pub bool);

impl Coeff for F2 {
    fn zero() -> Self {
        F2(false)
    }

    fn one() -> Self {
        F2(true)
    }

    fn is_zero(&self) -> bool {
        !self.0
    }

    fn add(&self, rhs: &Self) -> Self {
        F2(self.0 ^ rhs.0)
    }

    fn neg(&self) -> Self {
        *self
    }

    fn mul(&self, rhs: &Self) -> Self {
        F2(self.0 & rhs.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 {
            Some(*self)
        } else {
            None
        }
    }

    fn from_int(n: i64) -> Self {
        F2(n.rem_euclid(2) == 1)
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.0 { 1 } else { 0 })
    }
}

impl fmt::Debug for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_field_axioms() {
        let all = [
            F4::zero(),
            F4::one(),
            F4::zeta(),
            F4::new(true, true),
        ];
        for &x in &all {
            for &y in &all {
                assert_eq!(x.mul(&y), y.mul(&x));
                for &z in &all {
                    assert_eq!(x.mul(&y.mul(&z)), x.mul(&y).mul(&z));
                    assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
                }
            }
            if !x.is_zero() {
                assert_eq!(x.mul(&x.inv().unwrap()), F4::one());
            }
        }
        // zeta^2 = 1 + zeta
        assert_eq!(F4::zeta().mul(&F4::zeta()), F4::new(true, true));
    }
}
