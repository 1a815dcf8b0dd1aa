//! The integral lattice of the tensor square and its p-local normal form.
//!
//! In each even degree 2k the integral Hopf algebroid maps into the
//! rational tensor square through `phi^{-1}`. Projecting away pure tensors
//! (monomials supported entirely on the left or entirely on the right
//! copies) leaves a full-rank Z_(p)-lattice on the non-pure coordinates;
//! the quotient of the rational span by this lattice plus pure tensors is
//! the group where degree-2k cocycle classes of cohomological degree two
//! live. The lattice is brought into a p-local column echelon form once so
//! that coset reduction has a unique normal form.

use crate::monomials::monomials_of_degree;
use crate::{BpContext, Poly};
use algebra_kernel::rational::Valuation;
use algebra_kernel::{Coeff, Error, GradedMonomial, Rational};

pub struct IntegralLatticeBasis {
    pub p: u64,
    pub degree: i64,
    /// Non-pure tensor monomials of this degree, in monomial order: the
    /// coordinate rows.
    pub rows: Vec<GradedMonomial>,
    /// The Hopf-algebroid monomials whose phi^{-1}-images generated the
    /// lattice (column labels before echelon reduction).
    pub gamma_monomials: Vec<GradedMonomial>,
    /// Largest e such that p^e divides a column denominator.
    pub denominator_exponent: u32,
    /// Echelon columns: column k has its first nonzero entry p^{e_k} in row
    /// `pivots[k].0`, and zero entries in all earlier pivot rows.
    pub echelon: Vec<Vec<Rational>>,
    pub pivots: Vec<(usize, i64)>,
}

/// A monomial of the tensor alphabet is a pure tensor when its left block
/// or its right block of exponents vanishes (the constant monomial counts
/// as pure).
pub fn is_pure_tensor(m: &GradedMonomial, nmax: usize) -> bool {
    let left: u32 = m.exps[..nmax].iter().sum();
    let right: u32 = m.exps[nmax..].iter().sum();
    left == 0 || right == 0
}

/// Smallest generator bound whose alphabet carries every v_i/t_i of
/// dimension at most `degree`; lattices built with a smaller context would
/// miss relations.
pub fn sufficient_nmax(p: u64, degree: i64) -> usize {
    let mut n = 1usize;
    while 2 * ((p as i64).pow(n as u32 + 1) - 1) <= degree {
        n += 1;
    }
    n
}

impl IntegralLatticeBasis {
    pub fn build(ctx: &BpContext, degree: i64) -> Self {
        assert!(
            ctx.nmax >= sufficient_nmax(ctx.p, degree),
            "context bound nmax = {} misses generators of dimension <= {degree}; need {}",
            ctx.nmax,
            sufficient_nmax(ctx.p, degree)
        );
        let rows: Vec<GradedMonomial> = monomials_of_degree(&ctx.tensor, degree)
            .into_iter()
            .filter(|m| !is_pure_tensor(m, ctx.nmax))
            .collect();
        let gamma_monomials = monomials_of_degree(&ctx.hopf, degree);
        let mut columns: Vec<Vec<Rational>> = Vec::new();
        let mut denominator_exponent = 0u32;
        for gm in &gamma_monomials {
            let image = ctx
                .phi_inverse(&Poly::monomial_term(&ctx.hopf, gm.clone(), Rational::one()))
                .expect("phi^{-1} of a monomial");
            let col: Vec<Rational> = rows.iter().map(|m| image.coefficient(m)).collect();
            for c in &col {
                if let Valuation::Finite(v) = c.valuation(ctx.p) {
                    if v < 0 {
                        denominator_exponent = denominator_exponent.max((-v) as u32);
                    }
                }
            }
            if col.iter().any(|c| !c.is_zero()) {
                columns.push(col);
            }
        }
        let (echelon, pivots) = echelonize(ctx.p, rows.len(), columns);
        IntegralLatticeBasis {
            p: ctx.p,
            degree,
            rows,
            gamma_monomials,
            denominator_exponent,
            echelon,
            pivots,
        }
    }

    /// Coordinates of a non-pure tensor polynomial with respect to `rows`.
    pub fn coordinates(&self, x: &Poly) -> Result<Vec<Rational>, Error> {
        let mut v = vec![Rational::zero(); self.rows.len()];
        for (m, c) in &x.terms {
            match self.rows.binary_search(m) {
                Ok(i) => v[i] = c.clone(),
                Err(_) => {
                    return Err(Error::Other(format!(
                        "monomial {} is not a non-pure coordinate of degree {}",
                        m.render(&x.alphabet),
                        self.degree
                    )))
                }
            }
        }
        Ok(v)
    }

    /// Reduce a coordinate vector to its canonical representative modulo
    /// the lattice: for each pivot `(row, e)` the entry is replaced by its
    /// canonical residue modulo `p^e Z_(p)` (truncated p-adic digits), by
    /// subtracting a Z_(p)-multiple of the pivot column. Idempotent by
    /// construction.
    pub fn reduce_vector(&self, v: &[Rational]) -> Vec<Rational> {
        let mut x = v.to_vec();
        for (k, &(row, e)) in self.pivots.iter().enumerate() {
            let c = x[row].clone();
            if c.is_zero() {
                continue;
            }
            let rem = c.padic_normal_form(self.p, e);
            let q = c.sub(&rem).mul_p_power(self.p, -e);
            if q.is_zero() {
                continue;
            }
            for (i, entry) in self.echelon[k].iter().enumerate() {
                if !entry.is_zero() {
                    x[i] = x[i].sub(&q.mul(entry));
                }
            }
        }
        x
    }

    pub fn is_in_lattice(&self, v: &[Rational]) -> bool {
        self.reduce_vector(v).iter().all(|c| c.is_zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "format_version": 1,
            "p": self.p,
            "degree": self.degree,
            "denominator_exponent": self.denominator_exponent,
            "rows": self.rows.iter().map(|m| serde_json::json!(m.exps)).collect::<Vec<_>>(),
            "gamma_monomials": self.gamma_monomials.iter().map(|m| serde_json::json!(m.exps)).collect::<Vec<_>>(),
            "echelon": self
                .echelon
                .iter()
                .map(|col| col.iter().map(|c| c.to_json()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "pivots": self.pivots.iter().map(|&(r, e)| serde_json::json!([r, e])).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(ctx: &BpContext, v: &serde_json::Value) -> Result<Self, Error> {
        let degree = v["degree"]
            .as_i64()
            .ok_or_else(|| Error::Other("lattice missing degree".into()))?;
        let p = v["p"].as_u64().ok_or_else(|| Error::Other("lattice missing p".into()))?;
        let exps = |val: &serde_json::Value| -> Result<GradedMonomial, Error> {
            let arr = val
                .as_array()
                .ok_or_else(|| Error::Other("bad monomial".into()))?;
            Ok(GradedMonomial::new(
                &ctx.tensor,
                arr.iter().map(|e| e.as_u64().unwrap_or(0) as u32).collect(),
            ))
        };
        let hopf_exps = |val: &serde_json::Value| -> Result<GradedMonomial, Error> {
            let arr = val
                .as_array()
                .ok_or_else(|| Error::Other("bad monomial".into()))?;
            Ok(GradedMonomial::new(
                &ctx.hopf,
                arr.iter().map(|e| e.as_u64().unwrap_or(0) as u32).collect(),
            ))
        };
        let rows = v["rows"]
            .as_array()
            .ok_or_else(|| Error::Other("lattice missing rows".into()))?
            .iter()
            .map(&exps)
            .collect::<Result<Vec<_>, _>>()?;
        let gamma_monomials = v["gamma_monomials"]
            .as_array()
            .ok_or_else(|| Error::Other("lattice missing gamma monomials".into()))?
            .iter()
            .map(&hopf_exps)
            .collect::<Result<Vec<_>, _>>()?;
        let echelon = v["echelon"]
            .as_array()
            .ok_or_else(|| Error::Other("lattice missing echelon".into()))?
            .iter()
            .map(|col| {
                col.as_array()
                    .ok_or_else(|| Error::Other("bad column".into()))?
                    .iter()
                    .map(Rational::from_json)
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let pivots = v["pivots"]
            .as_array()
            .ok_or_else(|| Error::Other("lattice missing pivots".into()))?
            .iter()
            .map(|pv| {
                let arr = pv.as_array().filter(|a| a.len() == 2);
                arr.map(|a| (a[0].as_u64().unwrap_or(0) as usize, a[1].as_i64().unwrap_or(0)))
                    .ok_or_else(|| Error::Other("bad pivot".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntegralLatticeBasis {
            p,
            degree,
            rows,
            gamma_monomials,
            denominator_exponent: v["denominator_exponent"].as_u64().unwrap_or(0) as u32,
            echelon,
            pivots,
        })
    }
}

/// Column echelon form over Z_(p): permitted operations are column swaps,
/// scaling by p-adic units, and adding Z_(p)-multiples of one column to
/// another. Rows are visited in order; the pivot of a row is the remaining
/// column with minimal p-adic valuation there, normalised so the pivot
/// entry is exactly p^e. Later columns are cleared at the pivot row, which
/// leaves every column zero in all pivot rows that precede its own.
fn echelonize(
    p: u64,
    nrows: usize,
    mut cols: Vec<Vec<Rational>>,
) -> (Vec<Vec<Rational>>, Vec<(usize, i64)>) {
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for row in 0..nrows {
        // pick the remaining column with minimal valuation at `row`
        let mut best: Option<(usize, i64)> = None;
        for (j, col) in cols.iter().enumerate().skip(next) {
            if let Valuation::Finite(v) = col[row].valuation(p) {
                if best.is_none_or(|(_, bv)| v < bv) {
                    best = Some((j, v));
                }
            }
        }
        let Some((j, e)) = best else { continue };
        cols.swap(next, j);
        // scale so the pivot entry is exactly p^e
        let unit = cols[next][row].mul_p_power(p, -e);
        let unit_inv = unit.inv().expect("p-adic unit");
        for entry in cols[next].iter_mut() {
            if !entry.is_zero() {
                *entry = entry.mul(&unit_inv);
            }
        }
        // clear the row in the not-yet-pivoted columns
        let pivot_col = cols[next].clone();
        for col in cols.iter_mut().skip(next + 1) {
            if col[row].is_zero() {
                continue;
            }
            let factor = col[row].mul_p_power(p, -e);
            for (i, entry) in pivot_col.iter().enumerate() {
                if !entry.is_zero() {
                    col[i] = col[i].sub(&factor.mul(entry));
                }
            }
        }
        pivots.push((row, e));
        next += 1;
    }
    cols.truncate(next);
    (cols, pivots)
}
