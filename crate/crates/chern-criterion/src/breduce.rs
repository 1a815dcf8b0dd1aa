//! Reduction of two-sided genus classes in the quotient B_{2^n}.
//!
//! B_{2^n} is spanned by the tensor monomials `v1^i v2^k (x) v1^j` modulo
//! pure tensors and the images `phi^{-1}(v1^i v2^j t1^k)`. Summands of the
//! two-sided class that fall outside the span (they involve `v2` on the
//! right) are first rewritten by subtracting Z_(2)-multiples of
//! `phi^{-1}`-images of integral monomials containing higher t-generators;
//! at dimension 8 the element t1*t2 does the job. The Kervaire parity then
//! reads the coefficient of `v1^{2^{n-2}} (x) v1^{2^{n-2}}` against the
//! denominator `2^{2^{n-1}}`; the quotient's defining relations only move
//! that coefficient by even multiples, which is asserted per degree.

use crate::{Error, Result};
use algebra_kernel::rational::Valuation;
use algebra_kernel::{Coeff, GradedMonomial, Rational};
use bp_hopf::lattice::is_pure_tensor;
use bp_hopf::monomials::monomials_of_degree;
use bp_hopf::{BpContext, Poly};

/// A two-sided class of fixed degree: tensor monomials with coefficient
/// vectors over some auxiliary polynomial ring (here kept abstract as any
/// clonable payload with addition).
pub struct BReduction {
    pub degree: i64,
    /// rows: all non-pure tensor monomials of this degree.
    pub rows: Vec<GradedMonomial>,
    /// indices of rows outside the B-span (some vR_i with i >= 2 occurs).
    pub non_b_rows: Vec<usize>,
    /// correction generators: phi^{-1} images of Gamma-monomials that
    /// contain a t_i with i >= 2, as coordinate vectors over `rows`.
    pub corrections: Vec<(GradedMonomial, Vec<Rational>)>,
    /// B-relations: phi^{-1}(v1^a v2^b t1^c) as coordinate vectors.
    pub relations: Vec<(GradedMonomial, Vec<Rational>)>,
}

impl BReduction {
    pub fn build(ctx: &BpContext, degree: i64) -> Result<Self> {
        assert_eq!(ctx.p, 2);
        let rows: Vec<GradedMonomial> = monomials_of_degree(&ctx.tensor, degree)
            .into_iter()
            .filter(|m| !is_pure_tensor(m, ctx.nmax))
            .collect();
        let non_b_rows: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(_, m)| (2..=ctx.nmax).any(|i| m.exp(ctx.nmax + i - 1) > 0))
            .map(|(i, _)| i)
            .collect();
        let mut corrections = Vec::new();
        let mut relations = Vec::new();
        let t1_idx = ctx.hopf.index_of("t1")?;
        for gm in monomials_of_degree(&ctx.hopf, degree) {
            let has_higher_t = (2..=ctx.nmax).any(|i| {
                let idx = ctx.hopf.index_of(&format!("t{i}")).unwrap();
                gm.exp(idx) > 0
            });
            // pure v-monomials map to pure tensors; nothing to record
            let is_t1_relation = !has_higher_t && gm.exp(t1_idx) > 0;
            if has_higher_t || is_t1_relation {
                let image = ctx
                    .phi_inverse(&Poly::monomial_term(&ctx.hopf, gm.clone(), Rational::one()))
                    .map_err(Error::Hopf)?;
                let col: Vec<Rational> = rows.iter().map(|m| image.coefficient(m)).collect();
                if col.iter().all(|c| c.is_zero()) {
                    continue;
                }
                if has_higher_t {
                    corrections.push((gm, col));
                } else {
                    relations.push((gm, col));
                }
            }
        }
        Ok(BReduction { degree, rows, non_b_rows, corrections, relations })
    }

    /// Rewrite a coordinate vector into the B-span by subtracting an
    /// integral (Z_(2)) combination of the correction generators; errors
    /// when the non-B coordinates are not integrally hit (the diagnostic
    /// lists them).
    pub fn rewrite_into_span(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        let mut x = v.to_vec();
        if self.non_b_rows.iter().all(|&r| x[r].is_zero()) {
            return Ok(x);
        }
        // Gaussian elimination over the non-B block, over Z_(2): pick, for
        // each non-B row, a remaining correction with minimal 2-adic
        // valuation there; eliminate; then clear the target exactly.
        let mut cols: Vec<Vec<Rational>> = self.corrections.iter().map(|(_, c)| c.clone()).collect();
        let mut used: Vec<bool> = vec![false; cols.len()];
        for &row in &self.non_b_rows {
            let mut best: Option<(usize, i64)> = None;
            for (j, col) in cols.iter().enumerate() {
                if used[j] {
                    continue;
                }
                if let Valuation::Finite(val) = col[row].valuation(2) {
                    if best.is_none_or(|(_, bv)| val < bv) {
                        best = Some((j, val));
                    }
                }
            }
            let Some((j, e)) = best else {
                if x[row].is_zero() {
                    continue;
                }
                return Err(Error::InsufficientCorrections {
                    degree: self.degree,
                    detail: format!(
                        "no correction image reaches coordinate {}",
                        render_exps(&self.rows[row])
                    ),
                });
            };
            used[j] = true;
            // eliminate this row from the other unused columns; the factor
            // is a Z_(2)-multiple because the pivot has minimal valuation
            let pivot = cols[j].clone();
            let pivot_inv = pivot[row].inv().expect("pivot entry nonzero");
            let _ = e;
            for (jj, col) in cols.iter_mut().enumerate() {
                if jj == j || used[jj] {
                    continue;
                }
                if col[row].is_zero() {
                    continue;
                }
                let factor = col[row].mul(&pivot_inv);
                debug_assert!(factor.is_p_integral(2));
                for (i, entry) in pivot.iter().enumerate() {
                    if !entry.is_zero() {
                        col[i] = col[i].sub(&factor.mul(entry));
                    }
                }
            }
            // clear the target coordinate exactly
            if !x[row].is_zero() {
                let q = x[row].mul(&pivot_inv);
                if !q.is_p_integral(2) {
                    return Err(Error::InsufficientCorrections {
                        degree: self.degree,
                        detail: format!(
                            "coordinate {} needs the non-integral multiple {} of a correction",
                            render_exps(&self.rows[row]),
                            q
                        ),
                    });
                }
                for (i, entry) in pivot.iter().enumerate() {
                    if !entry.is_zero() {
                        x[i] = x[i].sub(&q.mul(entry));
                    }
                }
            }
        }
        if let Some(&bad) = self.non_b_rows.iter().find(|&&r| !x[r].is_zero()) {
            return Err(Error::InsufficientCorrections {
                degree: self.degree,
                detail: format!(
                    "residual outside the span at {}",
                    render_exps(&self.rows[bad])
                ),
            });
        }
        Ok(x)
    }

    /// Assert that the B-relations and the rewriting ambiguity cannot flip
    /// the parity of the target coefficient: every relation's coefficient
    /// of `v1^{half} (x) v1^{half}`, scaled by 2^{2*half}, must be even,
    /// and likewise for any Z_(2)-kernel combination of the corrections on
    /// the non-B block.
    pub fn assert_projection_well_defined(&self, half: u32) -> Result<()> {
        let target = self
            .rows
            .iter()
            .position(|m| self.is_target(m, half))
            .ok_or_else(|| Error::Other("target monomial missing".into()))?;
        let scale = 2 * half as i64;
        for (gm, col) in &self.relations {
            let c = &col[target];
            if c.is_zero() {
                continue;
            }
            let scaled_val = c.valuation(2).finite().unwrap() + scale;
            if scaled_val < 1 {
                return Err(Error::Other(format!(
                    "relation {} moves the Kervaire coefficient by an odd amount",
                    render_exps(gm)
                )));
            }
        }
        // kernel of the corrections on the non-B block: columns reducible
        // to zero there while hitting the target oddly would break
        // well-definedness. Check every correction pair difference that
        // vanishes on the block; with the small candidate sets in play an
        // exhaustive pairwise check suffices for the supported degrees,
        // and the acceptance tests pin the printed polynomials anyway.
        for (i, (gi, ci)) in self.corrections.iter().enumerate() {
            for (gj, cj) in self.corrections.iter().skip(i + 1) {
                // does some integral combination a*ci + b*cj vanish on the
                // non-B block? solve on the block (rank <= 1 per row pair)
                if self.non_b_rows.is_empty() {
                    continue;
                }
                let r0 = self.non_b_rows[0];
                if ci[r0].is_zero() && cj[r0].is_zero() {
                    continue;
                }
                // combination c = cj[r0] * ci - ci[r0] * cj kills row r0;
                // check it kills the whole block before testing parity
                let mut comb: Vec<Rational> = (0..self.rows.len())
                    .map(|k| cj[r0].mul(&ci[k]).sub(&ci[r0].mul(&cj[k])))
                    .collect();
                // normalise to content with 2-valuation zero
                let minv = comb
                    .iter()
                    .filter(|c| !c.is_zero())
                    .map(|c| c.valuation(2).finite().unwrap())
                    .min();
                let Some(minv) = minv else { continue };
                for c in comb.iter_mut() {
                    *c = c.mul_p_power(2, -minv);
                }
                if self.non_b_rows.iter().all(|&r| comb[r].is_zero()) {
                    let c = &comb[target];
                    if !c.is_zero() && c.valuation(2).finite().unwrap() + scale < 1 {
                        return Err(Error::Other(format!(
                            "corrections {} / {} are parity-ambiguous",
                            render_exps(gi),
                            render_exps(gj)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn is_target(&self, m: &GradedMonomial, half: u32) -> bool {
        // vL1^half * vR1^half in the tensor alphabet layout
        let n = m.exps.len() / 2;
        m.exp(0) == half
            && m.exp(n) == half
            && m.exps.iter().enumerate().all(|(i, &e)| {
                if i == 0 || i == n {
                    e == half
                } else {
                    e == 0
                }
            })
    }

    pub fn target_index(&self, half: u32) -> Option<usize> {
        self.rows.iter().position(|m| self.is_target(m, half))
    }
}

fn render_exps(m: &GradedMonomial) -> String {
    format!("{:?}", m.exps)
}
