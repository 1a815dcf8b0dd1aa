//! Invariant ideals and the x_n polynomials at p = 2.

use crate::{BpContext, Error, Poly, Result};
use algebra_kernel::{Coeff, Rational};

/// Certificate for `eta_R(x) - x = p^r * A + v1^s * B` in the Hopf
/// algebroid.
#[derive(Clone, Debug)]
pub struct InvarianceCertificate {
    pub holds: bool,
    pub p_cofactor: Poly,
    pub v1_cofactor: Poly,
}

/// Check that `(p^r, v1^s, x)` is an invariant ideal; returns the cofactor
/// decomposition when it holds. `s = 0` checks invariance of `(p^r, x)`.
pub fn invariance_check(ctx: &BpContext, x: &Poly, r: u32, s: u32) -> Result<InvarianceCertificate> {
    let lifted = ctx.lift_to_hopf(x);
    let d = ctx.eta_r(x, None)?.image.sub(&lifted);
    let reduced = d.reduce_coeffs_mod_p_power(ctx.p, r)?;
    let v1_idx = ctx.hopf.index_of("v1")?;
    let divisible = reduced
        .terms
        .keys()
        .all(|m| m.exp(v1_idx) >= s);
    if !divisible {
        return Ok(InvarianceCertificate {
            holds: false,
            p_cofactor: Poly::zero(&ctx.hopf),
            v1_cofactor: Poly::zero(&ctx.hopf),
        });
    }
    let v1_cofactor = reduced.divide_by_gen_power(v1_idx, s)?;
    let v1s = Poly::gen(&ctx.hopf, "v1")?.pow(s);
    let p_r = Rational::from_i64(ctx.p as i64).pow(r);
    let p_cofactor = d.sub(&v1s.mul(&v1_cofactor)).scale(&p_r.inv().unwrap());
    p_cofactor.assert_p_integral(ctx.p)?;
    // decomposition must reproduce d exactly
    let check = p_cofactor.scale(&p_r).add(&v1s.mul(&v1_cofactor));
    debug_assert_eq!(check, d);
    Ok(InvarianceCertificate { holds: true, p_cofactor, v1_cofactor })
}

/// The p = 2 sequence of invariant polynomials:
/// x_0 = v2, x_1 = v2^2, x_2 = v2^4 - v1^3 v2^3, x_n = x_{n-1}^2 for n >= 3.
pub fn x_sequence(ctx: &BpContext, n: u32) -> Result<Poly> {
    if ctx.p != 2 {
        return Err(Error::Other(format!(
            "x_sequence is specific to p = 2 (context has p = {})",
            ctx.p
        )));
    }
    let v1 = Poly::gen(&ctx.bp, "v1")?;
    let v2 = Poly::gen(&ctx.bp, "v2")?;
    Ok(match n {
        0 => v2,
        1 => v2.pow(2),
        2 => v2.pow(4).sub(&v1.pow(3).mul(&v2.pow(3))),
        _ => x_sequence(ctx, n - 1)?.pow(2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_sequence_values() {
        let ctx = BpContext::new(2, 2);
        let v1 = Poly::gen(&ctx.bp, "v1").unwrap();
        let v2 = Poly::gen(&ctx.bp, "v2").unwrap();
        assert_eq!(x_sequence(&ctx, 0).unwrap(), v2);
        assert_eq!(x_sequence(&ctx, 1).unwrap(), v2.pow(2));
        let x2 = v2.pow(4).sub(&v1.pow(3).mul(&v2.pow(3)));
        assert_eq!(x_sequence(&ctx, 2).unwrap(), x2);
        assert_eq!(x_sequence(&ctx, 3).unwrap(), x2.pow(2));
    }

    #[test]
    fn invariant_ideals() {
        // (p, v1, v2) is invariant for every p
        for p in [2u64, 3, 5] {
            let ctx = BpContext::new(p, 2);
            let v2 = Poly::gen(&ctx.bp, "v2").unwrap();
            let cert = invariance_check(&ctx, &v2, 1, 1).unwrap();
            assert!(cert.holds, "eta_R(v2) - v2 lies in (p, v1) at p = {p}");
        }
        // (p) alone is invariant for v1: eta_R(v1) - v1 = p t1
        let ctx = BpContext::new(2, 2);
        let v1 = Poly::gen(&ctx.bp, "v1").unwrap();
        let cert = invariance_check(&ctx, &v1, 1, 0).unwrap();
        assert!(cert.holds);
        let t1 = Poly::gen(&ctx.hopf, "t1").unwrap();
        assert_eq!(cert.p_cofactor, t1);
        // (2, v1) does NOT contain eta_R(v1) - v1 = 2 t1 with v1-divisibility
        let cert = invariance_check(&ctx, &v1, 1, 1).unwrap();
        assert!(cert.holds, "2 t1 = 2 * t1 + v1 * 0 is in (2, v1)");
        // x2 = v2^4 - v1^3 v2^3 is invariant modulo (2, v1^4)
        let x2 = x_sequence(&ctx, 2).unwrap();
        let cert = invariance_check(&ctx, &x2, 1, 4).unwrap();
        assert!(cert.holds);
    }

    #[test]
    fn non_invariant_detected() {
        // (2, v1^4, v2) is not invariant: d(v2) = v1 t1^2 + v1^2 t1 mod 2
        let ctx = BpContext::new(2, 2);
        let v2 = Poly::gen(&ctx.bp, "v2").unwrap();
        let cert = invariance_check(&ctx, &v2, 1, 4).unwrap();
        assert!(!cert.holds);
    }
}
