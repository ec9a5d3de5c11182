//! Radical membership, escape exponents and the largest ideal of a
//! cofinite subspace.
//!
//! ## The window rule
//!
//! Let `A = ℚ[t]/(g)` with `D = dim A = deg g` and let `L` be
//! multiplication by `ā` on `A`. By Fitting's lemma `L^M A = L^D A =: W`
//! for every `M ≥ D`, and `L` restricts to an invertible map of `W`. Its
//! minimal polynomial `ψ` on `W` has degree `e ≤ D` and `ψ(0) ≠ 0`.
//!
//! For any `b̄`, the sequence `yₘ = āᵐ b̄ = Lᵐ b̄` lies in `W` once `m ≥ D`
//! and satisfies `ψ(L) yₘ = 0` there. That recurrence runs both ways:
//! `y_{m+e}` is a combination of `yₘ, …, y_{m+e−1}`, and, since `ψ(0) ≠ 0`,
//! `yₘ` is a combination of `y_{m+1}, …, y_{m+e}`. Hence, for a subspace
//! `V̄ ⊆ A`,
//!
//! * if `yₘ ∈ V̄` for `m ∈ [D, 2D]` then `yₘ ∈ V̄` for every `m ≥ D`, and
//! * if `yₘ ∈ V̄` for all large `m` then `yₘ ∈ V̄` for every `m ≥ D`.
//!
//! With `b̄ = 1` this decides `a ∈ 𝔯(V)` exactly; with a general `b̄` it
//! decides whether `aᵐ b ∈ V` for all large `m`.

use std::ops::RangeInclusive;

use crate::algebra::{gcd, squarefree_part, QPoly};
use crate::error::{Error, Result};
use crate::operator::{member, OperatorSpec};

use super::subspace::CofiniteSubspace;

/// True when `fᵐ ∈ V` for every `m` in the window, with `V` given by its
/// membership predicate. This is a finite probe and proves nothing about
/// exponents outside the window.
pub fn radical_probe(
    oracle: impl Fn(&QPoly) -> Result<bool>,
    f: &QPoly,
    window: RangeInclusive<u64>,
) -> Result<bool> {
    if window.is_empty() {
        return Err(Error::BadInput("empty window".into()));
    }
    let (lo, hi) = (*window.start(), *window.end());
    let mut power = f.pow(lo);
    for m in lo..=hi {
        if m > lo {
            power = &power * f;
        }
        if !oracle(&power)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `m ≤ budget` with `fᵐ` outside the image of `op`.
pub fn escape_exponent(op: &OperatorSpec, f: &QPoly, budget: u64) -> Result<Option<u64>> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut power = QPoly::one();
    for m in 1..=budget {
        power = &power * f;
        if !member(op, &power)?.member {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Smallest `N ≤ budget` with `aᵐ b ∈ V` for every `m ∈ [N, budget]`.
pub fn definition_witness(
    oracle: impl Fn(&QPoly) -> Result<bool>,
    a: &QPoly,
    b: &QPoly,
    budget: u64,
) -> Result<Option<u64>> {
    let mut inside = Vec::with_capacity(budget as usize);
    let mut term = b.clone();
    for _ in 1..=budget {
        term = &term * a;
        inside.push(oracle(&term)?);
    }
    let tail = inside.iter().rev().take_while(|&&x| x).count();
    Ok((tail > 0).then(|| budget - tail as u64 + 1))
}

/// Whether `āᵐ b̄ ∈ V̄` for every `m` in `[D, 2D]`, which by the window rule
/// means for every `m ≥ D`.
pub fn eventually_in(v: &CofiniteSubspace, a: &QPoly, b: &QPoly) -> bool {
    let dim = v.quotient_dim() as u64;
    let a = v.reduce(a);
    let mut y = v.reduce(b);
    for m in 1..=2 * dim {
        y = v.mul_mod(&y, &a);
        if m >= dim && !v.residue_in_vbar(&v.residue(&y)) {
            return false;
        }
    }
    true
}

/// Exact decision of `f ∈ 𝔯(V)`.
pub fn radical_member_cofinite(v: &CofiniteSubspace, f: &QPoly) -> bool {
    eventually_in(v, f, &QPoly::one())
}

/// Monic divisors of `∏ pᵢ^{eᵢ}`, listed by exponent vectors.
pub(crate) fn monic_divisors(factors: &[(QPoly, usize)]) -> Vec<QPoly> {
    let mut out = vec![QPoly::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = &acc * p;
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out
}

/// `(d) ⊆ V` for a divisor `d` of `g`: the ideal `(d)/(g)` is spanned by
/// `d, dt, …, dt^{D − deg d − 1}`.
pub fn ideal_contained(v: &CofiniteSubspace, d: &QPoly) -> bool {
    let dim = v.quotient_dim();
    let deg = d.degree().unwrap_or(0);
    (0..dim.saturating_sub(deg)).all(|j| v.contains(&d.shift_up(j)))
}

/// Monic generator of the largest ideal inside `V`: the gcd of every monic
/// divisor `d` of `g` with `(d) ⊆ V`.
pub fn largest_ideal(v: &CofiniteSubspace) -> QPoly {
    monic_divisors(v.factors())
        .iter()
        .filter(|d| ideal_contained(v, d))
        .fold(QPoly::zero(), |acc, d| gcd(&acc, d))
}

/// Monic generator of `𝔯(I_V)`.
pub fn radical_of_largest_ideal(v: &CofiniteSubspace) -> QPoly {
    squarefree_part(&largest_ideal(v)).expect("largest ideal contains g ≠ 0")
}
