//! From tensor cosets to f-invariant values.

use crate::fclass::{ambiguity_basis, FClass};
use crate::{Error, FInvCtx, Result};
use bp_hopf::TensorCoset;
use modular_arith::igusa::{igusa_express, reduce_dc_mod_p, ResidueSeries};
use modular_arith::rho::rho;
use modular_arith::{DividedCongruence, Level};

/// The psi-image of a coset of order p carrying its integral cocycle
/// certificate `w`: multiplying the rational representative
/// `phi^{-1}(w)/p` back by p and applying the orientation and the
/// constant-term pairing is exactly `rho(w)`, an integral divided
/// congruence (the topological q-expansion principle). Non-integrality is
/// a hard failure.
pub fn psi_image(ctx: &FInvCtx, coset: &TensorCoset) -> Result<DividedCongruence> {
    let w = coset.gamma_lift.as_ref().ok_or(Error::MissingCertificate)?;
    if coset.lift_power > 1 {
        return Err(Error::UnsupportedOrder(coset.lift_power));
    }
    if coset.lift_power == 0 {
        return Err(Error::MissingCertificate);
    }
    let dc = rho(&ctx.bp, &ctx.orientation, &ctx.modular, w)?;
    if let Err((power, valuation)) = dc.integrality(&ctx.modular, ctx.precision) {
        return Err(Error::NonIntegralPsiImage { power, valuation });
    }
    Ok(dc)
}

/// The f-invariant of a tensor coset, reduced mod p, with the structured
/// Igusa-tower form attached at (2, level 3).
pub fn f_invariant(ctx: &FInvCtx, coset: &TensorCoset) -> Result<FClass> {
    if coset.degree % 2 != 0 {
        return Err(Error::Other(format!("odd degree {}", coset.degree)));
    }
    if coset.p != ctx.p() {
        return Err(Error::Other(format!(
            "coset prime {} does not match orientation prime {}",
            coset.p,
            ctx.p()
        )));
    }
    let psi = psi_image(ctx, coset)?;
    class_from_psi(ctx, psi, coset.degree)
}

/// The f-invariant of an order-p class given directly by its integral
/// cocycle `w` (a degree-one cocycle in the quotient Hopf algebroid whose
/// class under `nu` is `[phi^{-1}(w)/p]`). Skips the canonical coset
/// reduction, which the mod-p value never needs.
pub fn f_invariant_of_cocycle(
    ctx: &FInvCtx,
    w: &bp_hopf::Poly,
    degree: i64,
) -> Result<FClass> {
    let psi = rho(&ctx.bp, &ctx.orientation, &ctx.modular, w)?;
    if let Err((power, valuation)) = psi.integrality(&ctx.modular, ctx.precision) {
        return Err(Error::NonIntegralPsiImage { power, valuation });
    }
    class_from_psi(ctx, psi, degree)
}

fn class_from_psi(ctx: &FInvCtx, psi: DividedCongruence, degree: i64) -> Result<FClass> {
    let raw = reduce_dc_mod_p(&psi, &ctx.modular, ctx.precision)?;
    let structured = match (&raw, ctx.level()) {
        (ResidueSeries::F4(series), Level::Three) => {
            let basis = ctx.igusa()?;
            let bound = (degree / 2 + 4).max(4) as u32;
            igusa_express(basis, series, bound)
        }
        _ => None,
    };
    let ambiguity = ambiguity_basis(ctx, degree)?;
    Ok(FClass {
        degree,
        p: ctx.p(),
        level: ctx.level(),
        psi: Some(psi),
        raw,
        structured,
        ambiguity,
        precision: ctx.precision,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use bp_hopf::{alpha1_alpha_t, beta_representative};

    #[test]
    fn missing_certificate_is_rejected() {
        let ctx = FInvCtx::level3(2, 80).unwrap();
        let rep = beta_representative(&ctx.bp, 2, 2, 1).unwrap();
        let mut stripped = rep.clone();
        stripped.gamma_lift = None;
        assert!(matches!(
            f_invariant(&ctx, &stripped),
            Err(Error::MissingCertificate)
        ));
    }

    #[test]
    fn beta22_structured_form() {
        let ctx = FInvCtx::level3(2, 120).unwrap();
        let rep = beta_representative(&ctx.bp, 2, 2, 1).unwrap();
        let f = f_invariant(&ctx, &rep).unwrap();
        let s = f.structured.as_ref().expect("structured at level 3");
        // 1 + a3^2, exactly (no ambiguity correction needed here)
        let expect = modular_arith::StructuredForm::one()
            .add(&modular_arith::StructuredForm::a3_power(2));
        assert_eq!(s, &expect, "f(beta_{{2,2}}) = 1 + a3^2, got {s}");
    }

    #[test]
    fn alpha_family_maps_to_t() {
        let ctx = FInvCtx::level3(2, 120).unwrap();
        let rep = alpha1_alpha_t(&ctx.bp, 3).unwrap();
        let f = f_invariant(&ctx, &rep).unwrap();
        let s = f.structured.as_ref().unwrap();
        // T modulo constants: the pipeline may shift by an F4 constant
        let t = modular_arith::StructuredForm::t_gen();
        let diff = s.add(&t);
        assert!(
            diff.terms.keys().all(|&(i, j)| i == 0 && j == 0),
            "f(alpha1 alpha_3) = T up to a constant, got {s}"
        );
    }
}
