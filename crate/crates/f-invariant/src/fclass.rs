//! f-invariant values and ambiguity-aware equality.

use crate::{Error, FInvCtx, Result};
use algebra_kernel::{Coeff, QExpansion, F4};
use modular_arith::igusa::{reduce_series_mod_p, FpSeries, ResidueSeries, StructuredForm};
use modular_arith::{DividedCongruence, Level};

/// The subgroup of D/pD modulo which an f-invariant value is well defined:
/// reductions of constants and of integral forms of the top weight k
/// (= degree/2). Stored as residue q-series with printable labels.
#[derive(Clone)]
pub struct AmbiguityBasis {
    pub degree: i64,
    pub series: Vec<ResidueSeries>,
    pub labels: Vec<String>,
}

impl AmbiguityBasis {
    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }
}

/// Build the ambiguity subgroup basis for classes of the given degree 2k.
///
/// Reduction mod p is a ring homomorphism on integral q-expansions, so the
/// reduction of a weight-k monomial is computed as the product of the
/// reduced generators (much cheaper than reducing an exact high power).
pub fn ambiguity_basis(ctx: &FInvCtx, degree: i64) -> Result<AmbiguityBasis> {
    let k = degree / 2;
    let precision = ctx.precision;
    let mut series = Vec::new();
    let mut labels = Vec::new();
    // the constants
    series.push(reduce_series_mod_p(&QExpansion::one(precision), ctx.p())?);
    labels.push("1".to_string());
    if ctx.p() == 2 {
        // zeta is a second F4-constant
        let zeta_series = QExpansion::constant(algebra_kernel::Cyclotomic::zeta(), precision);
        series.push(reduce_series_mod_p(&zeta_series, 2)?);
        labels.push("zeta".to_string());
    }
    // reduced base generators
    let gen_red: Vec<ResidueSeries> = (0..2)
        .map(|i| {
            reduce_series_mod_p(&ctx.modular.gen_series(i, precision), ctx.p())
                .map_err(Error::Modular)
        })
        .collect::<Result<_>>()?;
    // reductions of weight-k monomials in the base generators
    let (d1, d2) = match ctx.level() {
        Level::Three => (1i64, 3i64),
        Level::One => (4, 6),
    };
    let names = match ctx.level() {
        Level::Three => ("a1", "a3"),
        Level::One => ("g2", "g3"),
    };
    let mut b = 0i64;
    while d2 * b <= k {
        if (k - d2 * b) % d1 == 0 {
            let a = (k - d2 * b) / d1;
            series.push(residue_monomial(&gen_red, a as u32, b as u32));
            labels.push(format!("{}^{}*{}^{}", names.0, a, names.1, b));
        }
        b += 1;
    }
    Ok(AmbiguityBasis { degree, series, labels })
}

fn residue_monomial(gens: &[ResidueSeries], e0: u32, e1: u32) -> ResidueSeries {
    match (&gens[0], &gens[1]) {
        (ResidueSeries::F4(g0), ResidueSeries::F4(g1)) => {
            ResidueSeries::F4(g0.pow(e0).mul(&g1.pow(e1)))
        }
        (ResidueSeries::Fp(g0), ResidueSeries::Fp(g1)) => {
            ResidueSeries::Fp(fp_series_mul(&fp_series_pow(g0, e0), &fp_series_pow(g1, e1)))
        }
        _ => panic!("mixed residue series"),
    }
}

fn fp_series_mul(a: &FpSeries, b: &FpSeries) -> FpSeries {
    assert_eq!(a.p, b.p);
    let p = a.p;
    let n = a.coeffs.len().min(b.coeffs.len());
    let mut out = vec![0u64; n];
    for (i, &x) in a.coeffs.iter().enumerate().take(n) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.coeffs.iter().enumerate() {
            if i + j >= n {
                break;
            }
            if y != 0 {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
    }
    FpSeries { p, coeffs: out }
}

fn fp_series_pow(a: &FpSeries, e: u32) -> FpSeries {
    let mut acc = FpSeries { p: a.p, coeffs: vec![0; a.coeffs.len()] };
    if !acc.coeffs.is_empty() {
        acc.coeffs[0] = 1;
    }
    let mut base = a.clone();
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc = fp_series_mul(&acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = fp_series_mul(&base, &base);
        }
    }
    acc
}

/// An f-invariant value.
#[derive(Clone)]
pub struct FClass {
    pub degree: i64,
    pub p: u64,
    pub level: Level,
    /// Integral divided congruence whose mod-p reduction is `raw`; present
    /// for pipeline-computed classes (the psi-image), absent for closed
    /// forms.
    pub psi: Option<DividedCongruence>,
    pub raw: ResidueSeries,
    pub structured: Option<StructuredForm>,
    pub ambiguity: AmbiguityBasis,
    pub precision: usize,
}

impl FClass {
    pub fn is_zero_mod_ambiguity(&self) -> bool {
        residue_in_span(&self.raw, &self.ambiguity.series)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "format_version": 1,
            "degree": self.degree,
            "prime": self.p,
            "level": match self.level { Level::Three => 3, Level::One => 1 },
            "structured": self.structured.as_ref().map(|s| s.render()),
            "raw_digest": format!("{:016x}", self.raw.digest()),
            "precision": self.precision,
            "ambiguity_basis_size": self.ambiguity.len(),
        })
    }
}

/// Equality modulo the declared ambiguity subgroup: the difference of the
/// residue series must lie in the F4- (resp. F_p-) span of the basis.
pub fn classes_equal_mod_ambiguity(a: &FClass, b: &FClass) -> Result<bool> {
    if a.degree != b.degree || a.p != b.p || a.level != b.level {
        return Err(Error::Other(format!(
            "incompatible classes: degree {} vs {}, p {} vs {}",
            a.degree, b.degree, a.p, b.p
        )));
    }
    let diff = a.raw.sub(&b.raw);
    Ok(residue_in_span(&diff, &a.ambiguity.series))
}

/// Span membership over the residue field.
pub fn residue_in_span(target: &ResidueSeries, basis: &[ResidueSeries]) -> bool {
    match target {
        ResidueSeries::F4(t) => {
            let cols: Vec<&QExpansion<F4>> = basis
                .iter()
                .map(|s| match s {
                    ResidueSeries::F4(v) => v,
                    _ => panic!("mixed residue series"),
                })
                .collect();
            f4_in_span(&cols, t)
        }
        ResidueSeries::Fp(t) => {
            let cols: Vec<&FpSeries> = basis
                .iter()
                .map(|s| match s {
                    ResidueSeries::Fp(v) => v,
                    _ => panic!("mixed residue series"),
                })
                .collect();
            fp_in_span(&cols, t)
        }
    }
}

fn f4_in_span(cols: &[&QExpansion<F4>], target: &QExpansion<F4>) -> bool {
    let prec = cols
        .iter()
        .map(|c| c.precision)
        .chain(std::iter::once(target.precision))
        .min()
        .unwrap_or(0);
    let ncols = cols.len();
    let mut m: Vec<Vec<F4>> = (0..prec)
        .map(|r| {
            let mut row: Vec<F4> = cols.iter().map(|c| c.coeff(r)).collect();
            row.push(target.coeff(r));
            row
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(piv) = (rank..prec).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].inv().unwrap();
        for e in m[rank].iter_mut() {
            *e = e.mul(&inv);
        }
        for r in 0..prec {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..=ncols {
                    let d = f.mul(&m[rank][c]);
                    m[r][c] = m[r][c].add(&d);
                }
            }
        }
        rank += 1;
    }
    m.iter().skip(rank).all(|row| row[ncols].is_zero())
}

fn fp_in_span(cols: &[&FpSeries], target: &FpSeries) -> bool {
    let p = target.p;
    let prec = cols
        .iter()
        .map(|c| c.coeffs.len())
        .chain(std::iter::once(target.coeffs.len()))
        .min()
        .unwrap_or(0);
    let ncols = cols.len();
    let inv = |x: u64| -> u64 {
        // Fermat inverse
        let mut acc = 1u64;
        let mut b = x % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    let mut m: Vec<Vec<u64>> = (0..prec)
        .map(|r| {
            let mut row: Vec<u64> = cols.iter().map(|c| c.coeffs[r] % p).collect();
            row.push(target.coeffs[r] % p);
            row
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(piv) = (rank..prec).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let iv = inv(m[rank][col]);
        for e in m[rank].iter_mut() {
            *e = *e * iv % p;
        }
        for r in 0..prec {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..=ncols {
                    m[r][c] = (m[r][c] + (p - f % p) * m[rank][c]) % p;
                }
            }
        }
        rank += 1;
    }
    m.iter().skip(rank).all(|row| row[ncols] == 0)
}
