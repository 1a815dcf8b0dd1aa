//! The mod-p Igusa tower: residue reductions, the structured
//! `k[a3, T]`-algebra with `T^2 + T = 1 + a3`, and expression of residue
//! q-series in the `{a3^i T^j}` basis.

use crate::divided::DividedCongruence;
use crate::orientation::Orientation;
use crate::qseries::{CycSeries, ModularCtx};
use crate::rho::t_class;
use crate::{Error, Level, Result};
use algebra_kernel::{Coeff, QExpansion, F4};
use bp_hopf::BpContext;
use std::collections::BTreeMap;
use std::fmt;

/// Residue q-series: F4 coefficients at (2, level 3), scalar mod-p
/// coefficients at (p >= 5, level 1).
#[derive(Clone, PartialEq, Debug)]
pub enum ResidueSeries {
    F4(QExpansion<F4>),
    Fp(FpSeries),
}

impl ResidueSeries {
    pub fn is_zero(&self) -> bool {
        match self {
            ResidueSeries::F4(s) => s.is_zero(),
            ResidueSeries::Fp(s) => s.coeffs.iter().all(|&c| c == 0),
        }
    }

    pub fn precision(&self) -> usize {
        match self {
            ResidueSeries::F4(s) => s.precision,
            ResidueSeries::Fp(s) => s.coeffs.len(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (ResidueSeries::F4(a), ResidueSeries::F4(b)) => ResidueSeries::F4(a.add(b)),
            (ResidueSeries::Fp(a), ResidueSeries::Fp(b)) => ResidueSeries::Fp(a.add(b)),
            _ => panic!("mixed residue series"),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (ResidueSeries::F4(a), ResidueSeries::F4(b)) => ResidueSeries::F4(a.sub(b)),
            (ResidueSeries::Fp(a), ResidueSeries::Fp(b)) => ResidueSeries::Fp(a.sub(b)),
            _ => panic!("mixed residue series"),
        }
    }

    pub fn digest(&self) -> u64 {
        let mut bytes = Vec::new();
        match self {
            ResidueSeries::F4(s) => {
                for c in &s.coeffs {
                    bytes.push(c.a as u8 | ((c.b as u8) << 1));
                }
            }
            ResidueSeries::Fp(s) => {
                bytes.extend(s.p.to_le_bytes());
                for c in &s.coeffs {
                    bytes.extend(c.to_le_bytes());
                }
            }
        }
        algebra_kernel::fnv1a64(&bytes)
    }
}

/// Scalar residue series modulo an odd prime.
#[derive(Clone, PartialEq, Debug)]
pub struct FpSeries {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl FpSeries {
    pub fn zero(p: u64, precision: usize) -> Self {
        FpSeries { p, coeffs: vec![0; precision] }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let n = self.coeffs.len().min(rhs.coeffs.len());
        FpSeries {
            p: self.p,
            coeffs: (0..n).map(|i| (self.coeffs[i] + rhs.coeffs[i]) % self.p).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let n = self.coeffs.len().min(rhs.coeffs.len());
        FpSeries {
            p: self.p,
            coeffs: (0..n)
                .map(|i| (self.p + self.coeffs[i] - rhs.coeffs[i]) % self.p)
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        FpSeries {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&x| (x * (c % self.p)) % self.p).collect(),
        }
    }
}

/// Reduce a cyclotomic q-expansion mod p. At p = 2 the coefficients land
/// in F4; at odd p (level 1) the zeta-part must vanish and coefficients
/// land in F_p. Non-integral coefficients are reported with their q-power.
pub fn reduce_series_mod_p(series: &CycSeries, p: u64) -> Result<ResidueSeries> {
    if p == 2 {
        let reduced = series
            .try_map(|c| c.reduce_mod_2())
            .map_err(|e| Error::NonIntegralSeries(e.to_string()))?;
        Ok(ResidueSeries::F4(reduced))
    } else {
        let mut coeffs = Vec::with_capacity(series.precision);
        for (n, c) in series.coeffs.iter().enumerate() {
            if !c.b.is_zero() {
                let b_red = c
                    .b
                    .reduce_mod_p(p)
                    .map_err(|_| Error::NonIntegralSeries(format!("q^{n}: zeta part not p-integral")))?;
                if b_red != 0 {
                    return Err(Error::NonIntegralSeries(format!(
                        "q^{n}: unexpected zeta part at level 1"
                    )));
                }
            }
            let a = c
                .a
                .reduce_mod_p(p)
                .map_err(|_| Error::NonIntegralSeries(format!("q^{n}: not p-integral")))?;
            coeffs.push(a);
        }
        Ok(ResidueSeries::Fp(FpSeries { p, coeffs }))
    }
}

/// Reduce a divided congruence mod p via its joint expansion.
pub fn reduce_dc_mod_p(
    dc: &DividedCongruence,
    ctx: &ModularCtx,
    precision: usize,
) -> Result<ResidueSeries> {
    reduce_series_mod_p(&dc.joint_expansion(ctx, precision), ctx.p)
}

/// An element of `F4[a3, T] / (T^2 + T + 1 + a3)`, kept with T-degree at
/// most one via the rewriting rule `T^2 -> T + 1 + a3`.
#[derive(Clone, PartialEq, Eq)]
pub struct StructuredForm {
    /// (a3 exponent, T exponent <= 1) -> coefficient
    pub terms: BTreeMap<(u32, u8), F4>,
}

impl StructuredForm {
    pub fn zero() -> Self {
        StructuredForm { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, F4::one())
    }

    pub fn a3_power(i: u32) -> Self {
        Self::monomial(i, 0, F4::one())
    }

    pub fn t_gen() -> Self {
        Self::monomial(0, 1, F4::one())
    }

    pub fn monomial(i: u32, j: u8, c: F4) -> Self {
        let mut s = Self::zero();
        s.insert(i, j, c);
        s
    }

    fn insert(&mut self, i: u32, j: u8, c: F4) {
        if c.is_zero() {
            return;
        }
        debug_assert!(j <= 1);
        let e = self.terms.entry((i, j)).or_insert_with(F4::zero);
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.insert(i, j, *c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                let c = c1.mul(c2);
                let i = i1 + i2;
                match j1 + j2 {
                    0 | 1 => out.insert(i, j1 + j2, c),
                    2 => {
                        // T^2 = T + 1 + a3
                        out.insert(i, 1, c);
                        out.insert(i, 0, c);
                        out.insert(i + 1, 0, c);
                    }
                    _ => unreachable!(),
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Coefficient of a3^i T^j.
    pub fn coefficient(&self, i: u32, j: u8) -> F4 {
        self.terms.get(&(i, j)).copied().unwrap_or_else(F4::zero)
    }

    /// Evaluate as an F4 q-series from the reductions of a3 and T.
    pub fn to_series(
        &self,
        a3_bar: &QExpansion<F4>,
        t_bar: &QExpansion<F4>,
        precision: usize,
    ) -> QExpansion<F4> {
        let mut powers: BTreeMap<u32, QExpansion<F4>> = BTreeMap::new();
        let mut out = QExpansion::zero(precision);
        for (&(i, j), c) in &self.terms {
            let a3p = powers
                .entry(i)
                .or_insert_with(|| a3_bar.truncate(precision).pow(i))
                .clone();
            let mut term = a3p.scale(c);
            if j == 1 {
                term = term.mul(&t_bar.truncate(precision));
            }
            out = out.add(&term);
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut pieces = Vec::new();
        for (&(i, j), c) in self.terms.iter().rev() {
            let mut s = String::new();
            if !c.is_one() {
                s.push_str(&format!("({c})"));
            }
            if i > 0 {
                if !s.is_empty() {
                    s.push('*');
                }
                s.push_str(&format!("a3^{i}"));
            }
            if j == 1 {
                if !s.is_empty() {
                    s.push('*');
                }
                s.push('T');
            }
            if s.is_empty() {
                s.push('1');
            }
            pieces.push(s);
        }
        pieces.join(" + ")
    }
}

impl fmt::Display for StructuredForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for StructuredForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Element of D/2D at (2, level 3) with an optional structured form and a
/// record of the diamond-invariance checks performed.
#[derive(Clone)]
pub struct IgusaClass {
    pub series: QExpansion<F4>,
    pub structured: Option<StructuredForm>,
    pub tower_level: u32,
    /// (\[alpha\], invariant mod 2 to the stored precision) pairs.
    pub invariance_checks: Vec<(i64, bool)>,
}

/// Build the tower element of a divided congruence: reduce mod 2, solve
/// the structured form, and certify invariance under `[1 + 2^k]` for the
/// claimed tower level (membership in V_{1,n} means invariance under
/// `[1 + 2^n]`, to the stored precision).
pub fn igusa_class(
    bp: &BpContext,
    orient: &Orientation,
    ctx: &ModularCtx,
    dc: &DividedCongruence,
    tower_level: u32,
    precision: usize,
    max_a3_degree: u32,
) -> Result<IgusaClass> {
    let series = match reduce_dc_mod_p(dc, ctx, precision)? {
        ResidueSeries::F4(s) => s,
        _ => unreachable!("level 3 reduces into F4"),
    };
    let mut invariance_checks = Vec::new();
    for k in [tower_level, tower_level + 1] {
        let alpha = 1i64 + (1i64 << k);
        let diff = dc.diamond(alpha).sub(dc);
        let invariant = reduce_dc_mod_p(&diff, ctx, precision)?.is_zero();
        invariance_checks.push((alpha, invariant));
    }
    let basis = igusa_basis(bp, orient, ctx, precision)?;
    let structured = igusa_express(&basis, &series, max_a3_degree);
    Ok(IgusaClass { series, structured, tower_level, invariance_checks })
}

/// The reductions of a3 and T = rho(t_1) mod 2, the basis ingredients of
/// the tower coordinates.
pub struct IgusaBasis {
    pub a3_bar: QExpansion<F4>,
    pub t_bar: QExpansion<F4>,
    pub precision: usize,
}

pub fn igusa_basis(
    bp: &BpContext,
    orient: &Orientation,
    ctx: &ModularCtx,
    precision: usize,
) -> Result<IgusaBasis> {
    if ctx.level != Level::Three {
        return Err(Error::UnsupportedConfiguration(
            "the Igusa basis machinery is the level-3, p = 2 structure".into(),
        ));
    }
    let a3 = ctx.gen_series(1, precision);
    let a3_bar = a3
        .try_map(|c| c.reduce_mod_2())
        .map_err(|e| Error::NonIntegralSeries(e.to_string()))?;
    let t = t_class(bp, orient, ctx, 1)?;
    let t_bar = match reduce_dc_mod_p(&t, ctx, precision)? {
        ResidueSeries::F4(s) => s,
        _ => unreachable!(),
    };
    Ok(IgusaBasis { a3_bar, t_bar, precision })
}

/// Solve a residue q-series against the basis `{a3^i T^j : j <= 1}` up to
/// the given a3-degree bound. Returns the structured form, or `None` when
/// the series is not in the span to this precision (the residual after
/// elimination is nonzero).
pub fn igusa_express(
    basis: &IgusaBasis,
    series: &QExpansion<F4>,
    max_a3_degree: u32,
) -> Option<StructuredForm> {
    let precision = basis.precision.min(series.precision);
    let mut columns: Vec<(u32, u8, QExpansion<F4>)> = Vec::new();
    for i in 0..=max_a3_degree {
        for j in 0..=1u8 {
            let form = StructuredForm::monomial(i, j, F4::one());
            columns.push((i, j, form.to_series(&basis.a3_bar, &basis.t_bar, precision)));
        }
    }
    // Gaussian elimination over F4 on the (precision x columns) system.
    let ncols = columns.len();
    let mut matrix: Vec<Vec<F4>> = (0..precision)
        .map(|row| {
            let mut r: Vec<F4> = columns.iter().map(|(_, _, s)| s.coeff(row)).collect();
            r.push(series.coeff(row));
            r
        })
        .collect();
    let mut pivot_cols: Vec<Option<usize>> = vec![None; ncols];
    let mut rank_row = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank_row..precision).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(rank_row, pivot);
        let inv = matrix[rank_row][col].inv().unwrap();
        for entry in matrix[rank_row].iter_mut() {
            *entry = entry.mul(&inv);
        }
        for r in 0..precision {
            if r != rank_row && !matrix[r][col].is_zero() {
                let factor = matrix[r][col];
                for c in 0..=ncols {
                    let delta = factor.mul(&matrix[rank_row][c]);
                    matrix[r][c] = matrix[r][c].add(&delta);
                }
            }
        }
        pivot_cols[col] = Some(rank_row);
        rank_row += 1;
    }
    // consistency: rows with zero coefficients must have zero rhs
    for row in rank_row..precision {
        if !matrix[row][ncols].is_zero() {
            return None;
        }
    }
    let mut out = StructuredForm::zero();
    for (col, &(i, j, _)) in pivot_cols.iter().zip(columns.iter()) {
        if let Some(r) = col {
            let c = matrix[*r][ncols];
            if !c.is_zero() {
                out = out.add(&StructuredForm::monomial(i, j, c));
            }
        }
    }
    // solved under possible column dependence: verify
    let check = out.to_series(&basis.a3_bar, &basis.t_bar, precision);
    if check == series.truncate(precision) {
        Some(out)
    } else {
        None
    }
}
