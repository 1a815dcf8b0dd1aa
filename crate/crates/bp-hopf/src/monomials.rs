//! Enumeration of monomials of a fixed topological degree.

use algebra_kernel::{Alphabet, GradedMonomial};

/// All monomials over `alphabet` of total degree exactly `degree`, in the
/// canonical monomial order. Generators of nonpositive degree are rejected
/// (enumeration would not terminate).
pub fn monomials_of_degree(alphabet: &Alphabet, degree: i64) -> Vec<GradedMonomial> {
    for g in &alphabet.gens {
        assert!(g.degree > 0, "enumeration needs positive degrees");
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; alphabet.len()];
    walk(alphabet, 0, degree, &mut exps, &mut out);
    out.sort();
    out
}

fn walk(
    alphabet: &Alphabet,
    idx: usize,
    remaining: i64,
    exps: &mut Vec<u32>,
    out: &mut Vec<GradedMonomial>,
) {
    if remaining == 0 {
        out.push(GradedMonomial::new(alphabet, exps.clone()));
        return;
    }
    if idx >= alphabet.len() || remaining < 0 {
        return;
    }
    let d = alphabet.degree(idx);
    let max = remaining / d;
    for e in 0..=max {
        exps[idx] = e as u32;
        walk(alphabet, idx + 1, remaining - e * d, exps, out);
    }
    exps[idx] = 0;
}

/// Monomials of degree at most `degree` (even degrees only make sense for
/// our alphabets, but the bound is taken literally).
pub fn monomials_up_to_degree(alphabet: &Alphabet, degree: i64) -> Vec<GradedMonomial> {
    let mut out = Vec::new();
    for d in 0..=degree {
        out.extend(monomials_of_degree(alphabet, d));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_eight_hopf_monomials_at_p2() {
        // weights v1,t1 = 2 and v2,t2 = 6: nine monomials of degree 8
        let al = Alphabet::hopf(2, 2);
        let ms = monomials_of_degree(&al, 8);
        assert_eq!(ms.len(), 9);
        for m in &ms {
            assert_eq!(m.degree(), 8);
        }
    }
}
