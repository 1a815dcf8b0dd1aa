//! Integration checks of the tensor-square quotient across contexts.

use algebra_kernel::{Coeff, GradedMonomial, Rational};
use bp_hopf::monomials::monomials_up_to_degree;
use bp_hopf::{beta_representative, coset_reduce, BpContext, Poly};

#[test]
fn full_round_trips_medium_degrees() {
    // phi . phi^{-1} = id through degree 24 with all four generators in
    // play, entirely through the substitution path
    let ctx = BpContext::new(2, 4);
    let mut count = 0usize;
    for m in monomials_up_to_degree(&ctx.hopf, 24) {
        let g = Poly::monomial_term(&ctx.hopf, m, Rational::one());
        assert_eq!(ctx.phi(&ctx.phi_inverse(&g).unwrap()).unwrap(), g);
        count += 1;
    }
    assert!(count > 300, "expected a few hundred monomials, got {count}");
}

#[test]
fn beta22_equals_the_sixteenth() {
    // the class of beta_{2,2} is also represented by (v1^2 (x) v1^2)/16
    let ctx = BpContext::new(2, 2);
    let rep = beta_representative(&ctx, 2, 2, 1).unwrap();
    let mut e = vec![0u32; 4];
    e[0] = 2;
    e[2] = 2;
    let sixteenth = Poly::monomial_term(
        &ctx.tensor,
        GradedMonomial::new(&ctx.tensor, e),
        Rational::ratio(1, 16),
    );
    let diff = rep.representative.sub(&sixteenth);
    assert!(coset_reduce(&ctx, &diff, 8).unwrap().is_zero());
}

#[test]
fn lattice_respects_context_bound() {
    // a degree-16 lattice needs v3/t3 relations; the small context must
    // refuse rather than compute a wrong quotient
    let small = BpContext::new(2, 2);
    let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| small.lattice(16)));
    assert!(result.is_err(), "nmax = 2 misses dimension-14 generators in degree 16");
    let big = BpContext::new(2, 3);
    let lat = big.lattice(16);
    assert!(!lat.rows.is_empty());
}

#[test]
fn beta_representative_degrees_and_orders() {
    let ctx = BpContext::new(2, 3);
    for (t, s, degree) in [(2u64, 2u32, 8i64), (4, 4, 16), (3, 1, 16)] {
        let rep = beta_representative(&ctx, t, s, 1).unwrap();
        assert_eq!(rep.degree, degree);
        assert_eq!(rep.order_exponent, 1, "beta_{{{t},{s}}} has order 2");
        // doubling kills the class
        let doubled = rep.representative.scale(&Rational::from_i64(2));
        assert!(coset_reduce(&ctx, &doubled, degree).unwrap().is_zero());
    }
}
