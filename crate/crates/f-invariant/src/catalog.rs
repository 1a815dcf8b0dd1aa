//! The generator catalog of the 2-line in internal degree 2^n at p = 2.
//!
//! Degree 2^n (n >= 2) is an elementary abelian 2-group generated by
//! alpha_1 * alpha_{2^{n-1}-1} together with the beta_{s 2^i, 2^i} for
//! s odd, i >= 0, (3s - 1) 2^{i+1} = 2^n, omitting (s, i) = (1, 0). For
//! n >= 3 the generator count is floor(n/2) + 1.

use crate::closed::{closed_form_alpha1_alpha_t, closed_form_kervaire_family};
use crate::fclass::FClass;
use crate::{Error, FInvCtx, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorKind {
    /// alpha_1 * alpha_t with t = 2^{n-1} - 1.
    AlphaProduct { t: u64 },
    /// beta_{s 2^i, 2^i}.
    Beta { t: u64, s: u64, i: u32 },
}

#[derive(Clone)]
pub struct Ext2Generator {
    pub name: String,
    pub kind: GeneratorKind,
    pub internal_degree: i64,
    pub closed_form: FClass,
}

/// Catalog for internal degree 2^n, n >= 2, with closed-form f-invariants
/// attached.
pub fn ext2_catalog(ctx: &FInvCtx, n: u32) -> Result<Vec<Ext2Generator>> {
    if n < 2 {
        return Err(Error::Other("the catalog starts at internal degree 4 (n = 2)".into()));
    }
    if ctx.p() != 2 {
        return Err(Error::Other("the catalog is a p = 2 structure".into()));
    }
    let degree = 1i64 << n;
    let mut out = Vec::new();
    let t_alpha = (1u64 << (n - 1)) - 1;
    out.push(Ext2Generator {
        name: format!("alpha1*alpha{t_alpha}"),
        kind: GeneratorKind::AlphaProduct { t: t_alpha },
        internal_degree: degree,
        closed_form: closed_form_alpha1_alpha_t(ctx, t_alpha)?,
    });
    // (3s - 1) 2^{i+1} = 2^n with s odd: 3s - 1 = 2^{n-i-1}
    for i in 0..n {
        if n < i + 1 {
            break;
        }
        let rhs = 1u64 << (n - i - 1);
        if !(rhs + 1).is_multiple_of(3) {
            continue;
        }
        let s = (rhs + 1) / 3;
        if s.is_multiple_of(2) || (s, i) == (1, 0) {
            continue;
        }
        let t = s << i;
        out.push(Ext2Generator {
            name: format!("beta_{{{t},{}}}", 1u64 << i),
            kind: GeneratorKind::Beta { t, s, i },
            internal_degree: degree,
            closed_form: closed_form_kervaire_family(ctx, s, i)?,
        });
    }
    // generators are listed alpha first, then betas by descending i
    out[1..].sort_by(|a, b| match (&a.kind, &b.kind) {
        (GeneratorKind::Beta { i: ia, .. }, GeneratorKind::Beta { i: ib, .. }) => ib.cmp(ia),
        _ => std::cmp::Ordering::Equal,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(ctx: &FInvCtx, n: u32) -> Vec<String> {
        ext2_catalog(ctx, n)
            .unwrap()
            .into_iter()
            .map(|g| g.name)
            .collect()
    }

    #[test]
    fn low_degree_catalogs() {
        let ctx = FInvCtx::level3(2, 80).unwrap();
        assert_eq!(names(&ctx, 3), vec!["alpha1*alpha3", "beta_{2,2}"]);
        assert_eq!(names(&ctx, 4), vec!["alpha1*alpha7", "beta_{4,4}", "beta_{3,1}"]);
        assert_eq!(names(&ctx, 5), vec!["alpha1*alpha15", "beta_{8,8}", "beta_{6,2}"]);
        assert_eq!(
            names(&ctx, 8),
            vec![
                "alpha1*alpha127",
                "beta_{64,64}",
                "beta_{48,16}",
                "beta_{44,4}",
                "beta_{43,1}"
            ]
        );
    }

    #[test]
    fn generator_count() {
        let ctx = FInvCtx::level3(2, 80).unwrap();
        for n in 3..=8u32 {
            let count = ext2_catalog(&ctx, n).unwrap().len();
            assert_eq!(count as u32, n / 2 + 1, "count in degree 2^{n}");
        }
    }

    #[test]
    fn beta_indices_satisfy_degree_equation() {
        let ctx = FInvCtx::level3(2, 80).unwrap();
        for n in 3..=9u32 {
            for g in ext2_catalog(&ctx, n).unwrap() {
                if let GeneratorKind::Beta { t, s, i } = g.kind {
                    assert_eq!(t, s << i);
                    assert_eq!((3 * s - 1) << (i + 1), 1 << n);
                    assert_eq!(s % 2, 1);
                    // closed form degree matches the catalog degree
                    assert_eq!(g.closed_form.degree, 1 << n);
                }
            }
        }
    }
}
