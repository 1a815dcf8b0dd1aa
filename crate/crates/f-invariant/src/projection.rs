//! The Kervaire-coefficient projection.
//!
//! In internal degree 2^n (n >= 3) the projection reads the coefficient of
//! a3^{2^{n-2}} (T-degree zero) in the structured form. The ambiguity
//! subgroup cannot touch this coefficient: weight-2^{n-1} integral forms
//! reduce to a3-powers of exponent at most 2^{n-1}/3 < 2^{n-2}, which the
//! setup asserts per degree.

use crate::fclass::FClass;
use crate::{Error, Result};
use algebra_kernel::Coeff;
use modular_arith::Level;

/// 1 when the structured form contains a3^{2^{n-2}} with nonzero
/// coefficient, 0 otherwise. (The coefficients arising from the catalog
/// are 0 or 1, so nonzero means exactly 1; the F4 -> F2 collapse is the
/// nonzero test.)
pub fn kervaire_projection(class: &FClass, n: u32) -> Result<u8> {
    if n < 3 {
        return Err(Error::Other("the projection is defined for n >= 3".into()));
    }
    if class.level != Level::Three || class.p != 2 {
        return Err(Error::Other("the projection lives at (2, level 3)".into()));
    }
    if class.degree != (1i64 << n) {
        return Err(Error::Other(format!(
            "class degree {} does not match 2^{n}",
            class.degree
        )));
    }
    let structured = class
        .structured
        .as_ref()
        .ok_or_else(|| Error::Other("unstructured input: no Igusa-tower form attached".into()))?;
    // setup assertion: the ambiguity subgroup misses a3^{2^{n-2}}
    let k = class.degree / 2;
    let target = 1u32 << (n - 2);
    if k / 3 >= target as i64 {
        return Err(Error::Other(format!(
            "ambiguity subgroup reaches a3^{target} in degree {}",
            class.degree
        )));
    }
    let c = structured.coefficient(target, 0);
    Ok(if c.is_zero() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{ext2_catalog, GeneratorKind};
    use crate::FInvCtx;

    #[test]
    fn projection_selects_the_kervaire_generator() {
        let ctx = FInvCtx::level3(2, 80).unwrap();
        for n in 3..=6u32 {
            for g in ext2_catalog(&ctx, n).unwrap() {
                let bit = kervaire_projection(&g.closed_form, n).unwrap();
                let is_kervaire = matches!(
                    g.kind,
                    GeneratorKind::Beta { s: 1, i, .. } if i == n - 2
                );
                assert_eq!(bit == 1, is_kervaire, "generator {} in degree 2^{n}", g.name);
            }
        }
    }

    #[test]
    fn zero_class_projects_to_zero() {
        // beta_{4,4} lives in internal degree 2^4
        let ctx = FInvCtx::level3(2, 80).unwrap();
        let mut f = crate::closed::closed_form_kervaire_family(&ctx, 1, 2).unwrap();
        assert_eq!(kervaire_projection(&f, 4).unwrap(), 1);
        f.structured = Some(modular_arith::StructuredForm::zero());
        assert_eq!(kervaire_projection(&f, 4).unwrap(), 0);
    }
}
