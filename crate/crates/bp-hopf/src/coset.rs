//! Canonical representatives in the tensor-square quotient.

use crate::lattice::is_pure_tensor;
use crate::{BpContext, Error, Poly, Result};
use algebra_kernel::{Coeff, Rational};

/// A class in the degree-2k quotient of the rational tensor square modulo
/// the integral lattice and pure tensors.
///
/// The representative contains no pure-tensor monomial and is the unique
/// normal form under the lattice reduction; `p^order_exponent` kills the
/// class. When the class arose from a Greek-letter construction the
/// integral cocycle `w` with class `nu(w) = [phi^{-1}(w)/p^lift_power]` is
/// carried along; the f-invariant pipeline consumes it.
#[derive(Clone)]
pub struct TensorCoset {
    pub p: u64,
    pub degree: i64,
    pub representative: Poly,
    pub order_exponent: u32,
    pub gamma_lift: Option<Poly>,
    pub lift_power: u32,
}

impl TensorCoset {
    pub fn is_zero(&self) -> bool {
        self.representative.is_zero()
    }

    /// Additive order of the class: p^order_exponent.
    pub fn order(&self) -> u64 {
        self.p.pow(self.order_exponent)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "format_version": 1,
            "p": self.p,
            "degree": self.degree,
            "order_exponent": self.order_exponent,
            "representative": self.representative.to_json(),
            "representative_text": self.representative.render(),
            "gamma_lift": self.gamma_lift.as_ref().map(|w| w.to_json()),
            "gamma_lift_text": self.gamma_lift.as_ref().map(|w| w.render()),
            "lift_power": self.lift_power,
        })
    }
}

/// Reduce a homogeneous tensor polynomial to the canonical coset
/// representative: pure-tensor monomials are dropped, then the coefficient
/// vector is reduced modulo the p-local normal form of the integral
/// lattice. The class order is the smallest p-power whose multiple reduces
/// to zero.
pub fn coset_reduce(ctx: &BpContext, x: &Poly, degree: i64) -> Result<TensorCoset> {
    match x.homogeneous_degree()? {
        None => {}
        Some(d) if d == degree => {}
        Some(d) => {
            return Err(Error::Other(format!(
                "polynomial has degree {d}, expected {degree}"
            )))
        }
    }
    let lattice = ctx.lattice(degree);
    let mut nonpure = Poly::zero(&ctx.tensor);
    for (m, c) in &x.terms {
        if !is_pure_tensor(m, ctx.nmax) {
            nonpure = nonpure.add(&Poly::monomial_term(&ctx.tensor, m.clone(), c.clone()));
        }
    }
    let coords = lattice.coordinates(&nonpure)?;
    let reduced = lattice.reduce_vector(&coords);
    // order: iterate multiplication by p until the class dies
    let mut order_exponent = 0u32;
    let mut cur = reduced.clone();
    while cur.iter().any(|c| !c.is_zero()) {
        order_exponent += 1;
        if order_exponent > 64 {
            return Err(Error::Other(
                "class order exceeds p^64; lattice is not of full rank".into(),
            ));
        }
        let scaled: Vec<Rational> = cur
            .iter()
            .map(|c| c.mul(&Rational::from_i64(ctx.p as i64)))
            .collect();
        cur = lattice.reduce_vector(&scaled);
    }
    let mut representative = Poly::zero(&ctx.tensor);
    for (i, c) in reduced.iter().enumerate() {
        if !c.is_zero() {
            representative = representative.add(&Poly::monomial_term(
                &ctx.tensor,
                lattice.rows[i].clone(),
                c.clone(),
            ));
        }
    }
    Ok(TensorCoset {
        p: ctx.p,
        degree,
        representative,
        order_exponent,
        gamma_lift: None,
        lift_power: 0,
    })
}

/// Coset difference x - y reduced; used for "equal as cosets" checks.
pub fn coset_difference_is_zero(ctx: &BpContext, x: &Poly, y: &Poly, degree: i64) -> Result<bool> {
    Ok(coset_reduce(ctx, &x.sub(y), degree)?.is_zero())
}
