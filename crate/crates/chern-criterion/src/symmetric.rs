//! Symmetric-function expansion of the genus product.
//!
//! For indeterminates x_l of dimension 2 the product `Pi = prod_l Q(x_l)`
//! has `log Pi = sum_k LQ_k p_k` with `p_k` the power sums, so each
//! component `Pi^{(2i)}` is a polynomial in the elementary symmetric
//! classes c_j via Newton's identities, with coefficients in the rational
//! span of v-monomials after rewriting the logarithm coefficients through
//! the Hazewinkel generators.

use crate::genus::{genus_q, Poly};
use crate::{Error, Result};
use algebra_kernel::{Alphabet, Coeff, Rational};
use bp_hopf::BpContext;
use std::sync::Arc;

/// Power sum p_k in the elementary symmetric basis (Newton's identities):
/// `p_k = (-1)^{k-1} k e_k + sum_{j=1}^{k-1} (-1)^{j-1} e_j p_{k-j}`.
pub fn power_sum_in_elementary(alphabet: &Arc<Alphabet>, k: usize) -> Poly {
    assert!(k >= 1);
    let mut table: Vec<Poly> = Vec::with_capacity(k);
    for kk in 1..=k {
        let mut acc = Poly::gen(alphabet, &format!("c{kk}"))
            .unwrap()
            .scale(&Rational::from_i64(if kk % 2 == 1 { kk as i64 } else { -(kk as i64) }));
        for j in 1..kk {
            let sign = if j % 2 == 1 { Rational::one() } else { Rational::from_i64(-1) };
            let e_j = Poly::gen(alphabet, &format!("c{j}")).unwrap();
            acc = acc.add(&e_j.mul(&table[kk - j - 1]).scale(&sign));
        }
        table.push(acc);
    }
    table.pop().unwrap()
}

/// Elementary symmetric e_k in the power-sum basis:
/// `e_k = (1/k) sum_{j=1}^k (-1)^{j-1} e_{k-j} p_j` (generators named p_j
/// in the given alphabet).
pub fn elementary_in_power_sums(alphabet: &Arc<Alphabet>, k: usize) -> Poly {
    assert!(k >= 1);
    let mut table: Vec<Poly> = vec![Poly::one(alphabet)]; // e_0 = 1
    for kk in 1..=k {
        let mut acc = Poly::zero(alphabet);
        for j in 1..=kk {
            let sign = if j % 2 == 1 { Rational::one() } else { Rational::from_i64(-1) };
            let p_j = Poly::gen(alphabet, &format!("c{j}")).unwrap();
            acc = acc.add(&table[kk - j].mul(&p_j).scale(&sign));
        }
        table.push(acc.scale(&Rational::from_i64(kk as i64).inv().unwrap()));
    }
    table.pop().unwrap()
}

/// A component of the symmetric expansion: polynomial in c_1..c_i with
/// coefficients in the rational span of v-monomials, homogeneous of
/// c-degree 2i and v-degree 2i.
pub struct SymmetricExpansion {
    pub degree: i64,
    /// over the joined alphabet [v1..v_nmax, c1..c_m]
    pub value: Poly,
    pub nmax: usize,
    pub m: usize,
}

/// The alphabet [v1..v_nmax, c1..c_m] at p = 2.
pub fn vc_alphabet(nmax: usize, m: usize) -> Arc<Alphabet> {
    Alphabet::join(
        &format!("vc_{nmax}_{m}"),
        &Alphabet::bp(2, nmax),
        &Alphabet::chern(m),
    )
}

/// All components Pi^{(2)}, Pi^{(4)}, ..., Pi^{(2*max_i)} at p = 2.
pub fn pi_components(max_i: usize) -> Result<Vec<SymmetricExpansion>> {
    assert!(max_i >= 1);
    // the x^k coefficient of Q involves l_j with 2^j <= k + 1
    let mut nmax = 1usize;
    while (1usize << (nmax + 1)) <= max_i + 1 {
        nmax += 1;
    }
    let bp = BpContext::new(2, nmax);
    let logs_al = Alphabet::logs(2, nmax);
    let q = genus_q(&logs_al, nmax, max_i + 1)?;
    // log Q = log(1 + w), w = Q - 1
    let one = crate::genus::Series::constant(&logs_al, Poly::one(&logs_al), max_i + 1);
    let w = q.sub(&one);
    let mut log_q = crate::genus::Series::zero(&logs_al, max_i + 1);
    let mut w_pow = one.clone();
    for k in 1..=max_i {
        w_pow = w_pow.mul(&w);
        let sign = if k % 2 == 1 { 1i64 } else { -1 };
        log_q = log_q.add(&w_pow.scale(&Poly::constant(
            &logs_al,
            Rational::ratio(sign, k as i64),
        )));
    }
    // D = sum_k LQ_k P_k in the joined alphabet [l's, c's]
    let m = max_i;
    let lc = Alphabet::join(&format!("lc_{nmax}_{m}"), &logs_al, &Alphabet::chern(m));
    let chern = Alphabet::chern(m);
    let lift_l = |x: &Poly| -> Poly {
        let map: Vec<(usize, usize)> = (0..nmax).map(|i| (i, i)).collect();
        x.rename_into(&lc, &map).unwrap()
    };
    let lift_c = |x: &Poly| -> Poly {
        let map: Vec<(usize, usize)> = (0..m).map(|j| (j, nmax + j)).collect();
        x.rename_into(&lc, &map).unwrap()
    };
    let mut d = Poly::zero(&lc);
    for k in 1..=max_i {
        let lq_k = log_q.coeff(k);
        if lq_k.is_zero() {
            continue;
        }
        let p_k = power_sum_in_elementary(&chern, k);
        d = d.add(&lift_l(&lq_k).mul(&lift_c(&p_k)));
    }
    // Pi = exp(D), truncated: every D-term is bihomogeneous with equal
    // l- and c-degrees, so total degree 4i captures the 2i-component.
    let truncate = |x: &Poly| -> Poly {
        let mut out = Poly::zero(&lc);
        for (mon, c) in &x.terms {
            if mon.degree() <= 4 * max_i as i64 {
                out = out.add(&Poly::monomial_term(&lc, mon.clone(), c.clone()));
            }
        }
        out
    };
    let mut pi = Poly::one(&lc);
    let mut d_pow = Poly::one(&lc);
    let mut factorial = Rational::one();
    for j in 1..=max_i {
        d_pow = truncate(&d_pow.mul(&d));
        factorial = factorial.mul(&Rational::from_i64(j as i64));
        pi = pi.add(&d_pow.scale(&factorial.inv().unwrap()));
    }
    // rewrite l's into Hazewinkel v's and split by degree
    let vc = vc_alphabet(nmax, m);
    let mut images: Vec<Poly> = Vec::new();
    for i in 1..=nmax {
        let map: Vec<(usize, usize)> = (0..nmax).map(|idx| (idx, idx)).collect();
        images.push(bp.log_coefficient(i).rename_into(&vc, &map)?);
    }
    for j in 1..=m {
        images.push(Poly::gen(&vc, &format!("c{j}"))?);
    }
    let pi_v = pi.substitute(&vc, &images)?;
    let mut out = Vec::new();
    for i in 1..=max_i {
        let component = pi_v.homogeneous_component(4 * i as i64);
        // sanity: c-degree is exactly 2i on every term
        for mon in component.terms.keys() {
            let c_deg: i64 = (0..m)
                .map(|j| mon.exp(nmax + j) as i64 * 2 * (j as i64 + 1))
                .sum();
            if c_deg != 2 * i as i64 {
                return Err(Error::Other(format!(
                    "bigrading broken in component {}: c-degree {c_deg}",
                    2 * i
                )));
            }
        }
        out.push(SymmetricExpansion { degree: 2 * i as i64, value: component, nmax, m });
    }
    Ok(out)
}

/// Brute-force oracle: expand `prod_{l<=m} Q(x_l)` in explicit variables
/// and extract the part of x-degree 2i.
pub fn product_expansion_oracle(max_i: usize, vars: usize) -> Result<Vec<Poly>> {
    let mut nmax = 1usize;
    while (1usize << (nmax + 1)) <= max_i + 1 {
        nmax += 1;
    }
    let logs_al = Alphabet::logs(2, nmax);
    let q = genus_q(&logs_al, nmax, max_i + 1)?;
    // alphabet [l's, x_1..x_vars] with |x_l| = 2
    let gens: Vec<(String, i64)> = (1..=nmax)
        .map(|i| (format!("l{i}"), 2 * ((1i64 << i) - 1)))
        .chain((1..=vars).map(|l| (format!("x{l}"), 2)))
        .collect();
    let lx = Alphabet::new(&format!("lx_{nmax}_{vars}"), gens);
    let lift_l = |x: &Poly| -> Poly {
        let map: Vec<(usize, usize)> = (0..nmax).map(|i| (i, i)).collect();
        x.rename_into(&lx, &map).unwrap()
    };
    let mut product = Poly::one(&lx);
    for l in 1..=vars {
        let x_l = Poly::gen(&lx, &format!("x{l}"))?;
        let mut q_at = Poly::zero(&lx);
        let mut x_pow = Poly::one(&lx);
        for k in 0..=max_i {
            q_at = q_at.add(&lift_l(&q.coeff(k)).mul(&x_pow));
            x_pow = x_pow.mul(&x_l);
        }
        product = product.mul(&q_at);
        // drop everything beyond the range of interest
        let mut trimmed = Poly::zero(&lx);
        for (mon, c) in &product.terms {
            let x_deg: i64 = (0..vars).map(|j| mon.exp(nmax + j) as i64 * 2).sum();
            if x_deg <= 2 * max_i as i64 {
                trimmed = trimmed.add(&Poly::monomial_term(&lx, mon.clone(), c.clone()));
            }
        }
        product = trimmed;
    }
    // split by x-degree, keeping only bihomogeneous (l-deg = x-deg) parts
    let mut out = Vec::new();
    for i in 1..=max_i {
        out.push(product.homogeneous_component(4 * i as i64));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_round_trip() {
        // substituting p_j = P_j(e) into E_k(p) returns e_k, degrees <= 8
        let e_al = Alphabet::chern(8);
        for k in 1..=8usize {
            let e_in_p = elementary_in_power_sums(&e_al, k);
            let images: Vec<Poly> = (1..=8)
                .map(|j| power_sum_in_elementary(&e_al, j))
                .collect();
            let back = e_in_p.substitute(&e_al, &images).unwrap();
            assert_eq!(back, Poly::gen(&e_al, &format!("c{k}")).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn printed_components() {
        let comps = pi_components(3).unwrap();
        let vc = vc_alphabet(2, 3);
        let g = |n: &str| Poly::gen(&vc, n).unwrap();
        let half = Rational::ratio(1, 2);
        let quarter = Rational::ratio(1, 4);
        let eighth = Rational::ratio(1, 8);
        // Pi^(2) = (v1/2) c1
        assert_eq!(comps[0].value, g("v1").mul(&g("c1")).scale(&half));
        // Pi^(4) = (v1^2/4)(3 c2 - c1^2)
        let expect4 = g("v1").pow(2).scale(&quarter).mul(
            &g("c2")
                .scale(&Rational::from_i64(3))
                .sub(&g("c1").pow(2)),
        );
        assert_eq!(comps[1].value, expect4);
        // Pi^(6) = (v1^3/8)(4 c1^3 - 13 c1 c2 + 16 c3) + (v2/2)(c1^3 - 3 c1 c2 + 3 c3)
        let expect6 = g("v1")
            .pow(3)
            .scale(&eighth)
            .mul(
                &g("c1")
                    .pow(3)
                    .scale(&Rational::from_i64(4))
                    .sub(&g("c1").mul(&g("c2")).scale(&Rational::from_i64(13)))
                    .add(&g("c3").scale(&Rational::from_i64(16))),
            )
            .add(&g("v2").scale(&half).mul(
                &g("c1")
                    .pow(3)
                    .sub(&g("c1").mul(&g("c2")).scale(&Rational::from_i64(3)))
                    .add(&g("c3").scale(&Rational::from_i64(3))),
            ));
        assert_eq!(comps[2].value, expect6);
    }

    #[test]
    fn components_match_product_oracle() {
        // substituting c_j -> e_j(x_1..x_m) reproduces the direct product
        // expansion, for components up to degree 8 in 4 variables
        let max_i = 4usize;
        let vars = 4usize;
        let comps = pi_components(max_i).unwrap();
        let oracle = product_expansion_oracle(max_i, vars).unwrap();
        // build e_j(x) in the oracle alphabet
        let nmax = 2usize;
        let lx = oracle
            .iter()
            .find(|p| !p.is_zero())
            .map(|p| p.alphabet.clone())
            .unwrap();
        let mut e_polys: Vec<Poly> = Vec::new();
        for j in 1..=max_i {
            // e_j = sum over j-subsets of x_1..x_vars
            let mut e = Poly::zero(&lx);
            let idx: Vec<usize> = (0..vars).collect();
            fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
                if k == 0 {
                    return vec![vec![]];
                }
                if pool.len() < k {
                    return vec![];
                }
                let mut out = subsets(&pool[1..], k - 1)
                    .into_iter()
                    .map(|mut s| {
                        s.insert(0, pool[0]);
                        s
                    })
                    .collect::<Vec<_>>();
                out.extend(subsets(&pool[1..], k));
                out
            }
            for subset in subsets(&idx, j) {
                let mut term = Poly::one(&lx);
                for l in subset {
                    term = term.mul(&Poly::gen(&lx, &format!("x{}", l + 1)).unwrap());
                }
                e = e.add(&term);
            }
            e_polys.push(e);
        }
        // rewrite the v's back into l's (inverting the Hazewinkel
        // recursion: v1 = 2 l1, and 2 l2 = l1 v1^2 + v2 gives
        // v2 = 2 l2 - 4 l1^3), then substitute c_j -> e_j(x)
        let v1_in_l = Poly::gen(&lx, "l1").unwrap().scale(&Rational::from_i64(2));
        let v2_in_l = Poly::gen(&lx, "l2")
            .unwrap()
            .scale(&Rational::from_i64(2))
            .sub(
                &Poly::gen(&lx, "l1")
                    .unwrap()
                    .pow(3)
                    .scale(&Rational::from_i64(4)),
            );
        let mut images: Vec<Poly> = vec![v1_in_l, v2_in_l];
        images.extend(e_polys.iter().cloned());
        for (i, comp) in comps.iter().enumerate() {
            assert_eq!(comp.nmax, nmax);
            let expanded = comp.value.substitute(&lx, &images).unwrap();
            assert_eq!(expanded, oracle[i], "component 2i = {}", 2 * (i + 1));
        }
    }
}
