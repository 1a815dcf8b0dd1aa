//! The multiplicative genus `Q(x) = x / exp(x)` of the 2-typical formal
//! group law, expanded over the logarithm coefficients.

use crate::{Error, Result};
use algebra_kernel::{Alphabet, GradedPolynomial, Rational, TruncatedSeries};
use std::sync::Arc;

pub type Poly = GradedPolynomial<Rational>;
pub type Series = TruncatedSeries<Rational>;

/// The 2-typical logarithm `x + sum_{i>=1} l_i x^{2^i}` to the given
/// precision, over l_1..l_nmax.
pub fn log_series(alphabet: &Arc<Alphabet>, nmax: usize, precision: usize) -> Series {
    let mut coeffs = vec![Poly::zero(alphabet); precision];
    if precision > 1 {
        coeffs[1] = Poly::one(alphabet);
    }
    for i in 1..=nmax {
        let k = 1usize << i;
        if k < precision {
            coeffs[k] = Poly::gen(alphabet, &format!("l{i}")).unwrap();
        }
    }
    Series::new(alphabet, coeffs, precision)
}

/// exp is the compositional reverse of the logarithm.
pub fn exp_series(alphabet: &Arc<Alphabet>, nmax: usize, precision: usize) -> Result<Series> {
    log_series(alphabet, nmax, precision)
        .reverse()
        .map_err(Error::Kernel)
}

/// Q(x) = x / exp(x) to the given precision (coefficients of x^0..x^{m-1}).
pub fn genus_q(alphabet: &Arc<Alphabet>, nmax: usize, precision: usize) -> Result<Series> {
    if precision < 2 {
        return Err(Error::Kernel(algebra_kernel::Error::PrecisionTooSmall(precision, 2)));
    }
    // exp(x)/x is a unit series; Q is its inverse.
    let exp = exp_series(alphabet, nmax, precision + 1)?;
    let over_x = Series::new(
        alphabet,
        exp.coeffs.iter().skip(1).cloned().collect(),
        precision,
    );
    over_x.invert_unit().map_err(Error::Kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_and_genus_leading_terms() {
        let al = Alphabet::logs(2, 2);
        let l1 = Poly::gen(&al, "l1").unwrap();
        let l2 = Poly::gen(&al, "l2").unwrap();
        let two = Rational::from_i64(2);
        // exp(x) = x - l1 x^2 + 2 l1^2 x^3 - (5 l1^3 + l2) x^4 (mod x^5)
        let exp = exp_series(&al, 2, 5).unwrap();
        assert_eq!(exp.coeff(1), Poly::one(&al));
        assert_eq!(exp.coeff(2), l1.neg());
        assert_eq!(exp.coeff(3), l1.pow(2).scale(&two));
        assert_eq!(
            exp.coeff(4),
            l1.pow(3).scale(&Rational::from_i64(5)).add(&l2).neg()
        );
        // Q(x) = 1 + l1 x - l1^2 x^2 + (2 l1^3 + l2) x^3 (mod x^4)
        let q = genus_q(&al, 2, 4).unwrap();
        assert_eq!(q.coeff(0), Poly::one(&al));
        assert_eq!(q.coeff(1), l1);
        assert_eq!(q.coeff(2), l1.pow(2).neg());
        assert_eq!(q.coeff(3), l1.pow(3).scale(&two).add(&l2));
    }

    #[test]
    fn additive_degeneration() {
        // substituting l_i = 0 leaves the constant series 1
        let al = Alphabet::logs(2, 2);
        let q = genus_q(&al, 2, 6).unwrap();
        let zero_l = vec![Poly::zero(&al); 2];
        for k in 0..6 {
            let coeff = q.coeff(k).substitute(&al, &zero_l).unwrap();
            if k == 0 {
                assert_eq!(coeff, Poly::one(&al));
            } else {
                assert!(coeff.is_zero());
            }
        }
    }
}
