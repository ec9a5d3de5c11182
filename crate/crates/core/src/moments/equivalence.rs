//! Comparing the polynomial image of `Λ = w⁻¹ ∘ ∂ ∘ w` with the
//! polynomials of vanishing integral against `w`.
//!
//! When `1` is not an image the two spaces coincide. The check runs over
//! `tⁿ` and `tⁿ − νₙ` for every `n` up to the bound, which covers both a
//! basis of the polynomials of bounded degree and a basis of the
//! integral-zero ones.

use serde::Serialize;

use super::functional::MomentFunctional;
use super::weight::WeightSpec;
use crate::algebra::{format_qpoly, QPoly, Rational};
use crate::error::{Error, Result};
use crate::operator::{im_structure, member, OperatorSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub poly: String,
    pub member: bool,
    pub vb_member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub one_in_image: bool,
    /// False when `1` is an image, in which case the image is everything and
    /// only that fact is checked.
    pub equivalence_asserted: bool,
    pub checked: usize,
    pub disagreements: Vec<Disagreement>,
}

/// The operator `w⁻¹ ∘ ∂ ∘ w` attached to a classical weight.
pub fn matched_operator(w: &WeightSpec) -> Result<OperatorSpec> {
    match w {
        WeightSpec::Hermite => Ok(OperatorSpec::hermite()),
        WeightSpec::Laguerre { alpha } => Ok(OperatorSpec::laguerre(alpha.clone())),
        WeightSpec::Jacobi { alpha, beta } => Ok(OperatorSpec::jacobi(alpha.clone(), beta.clone())),
        WeightSpec::Atomic { .. } => Err(Error::BadPair("atomic measures have no operator".into())),
    }
}

pub fn equivalence_check(
    w: &WeightSpec,
    op: &OperatorSpec,
    deg_bound: usize,
) -> Result<EquivalenceReport> {
    if deg_bound < 1 {
        return Err(Error::BadInput("degree bound must be at least 1".into()));
    }
    let expected = matched_operator(w)?;
    if expected != *op {
        return Err(Error::BadPair(format!(
            "{w} pairs with {expected}, not {op}"
        )));
    }
    let mut functional = MomentFunctional::new(w.clone())?;
    let one_in_image = im_structure(op)?.one_in_image;
    let mut disagreements = Vec::new();
    let mut checked = 0;
    let nu: Vec<Rational> = functional.moments(deg_bound).to_vec();
    for (n, nu_n) in nu.iter().enumerate() {
        let monomial = QPoly::t_pow(n);
        let centered = &monomial - &QPoly::constant(nu_n.clone());
        for f in [monomial, centered] {
            checked += 1;
            let in_image = member(op, &f)?.member;
            let integral_zero = functional.vb_member(&f);
            let agree = if one_in_image {
                in_image
            } else {
                in_image == integral_zero
            };
            if !agree {
                disagreements.push(Disagreement {
                    poly: format_qpoly(&f),
                    member: in_image,
                    vb_member: integral_zero,
                });
            }
        }
    }
    Ok(EquivalenceReport {
        one_in_image,
        equivalence_asserted: !one_in_image,
        checked,
        disagreements,
    })
}

/// Smallest `m ≤ budget` with `∫ fᵐ dσ ≠ 0`.
pub fn vb_escape_exponent(w: &WeightSpec, f: &QPoly, budget: u64) -> Result<Option<u64>> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut functional = MomentFunctional::new(w.clone())?;
    let mut power = QPoly::one();
    for m in 1..=budget {
        power = &power * f;
        if !functional.vb_member(&power) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
