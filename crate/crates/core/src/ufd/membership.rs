//! Membership in the image of `D = ∂ₜ − a` on `A[t]` for `A = ℚ[x]`, and the
//! criteria built from the factorial map `tⁿ ↦ n!`.

use serde::Serialize;

use super::context::UfdContext;
use crate::algebra::rational::factorial;
use crate::algebra::{
    exact_divide, gcd_elements, squarefree_element, Coefficient, Poly, RingElement,
};
use crate::certificate::Valuation;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UfdMembership {
    pub member: bool,
    /// `h` with `D(h) = f`.
    pub witness: Option<Poly<RingElement>>,
}

/// `D(h) = h' − a·h`.
pub fn apply_d(ctx: &UfdContext, h: &Poly<RingElement>) -> Result<Poly<RingElement>> {
    h.derivative().checked_sub(&h.scale_by(ctx.a()))
}

fn check_ring(ctx: &UfdContext, f: &Poly<RingElement>) -> Result<()> {
    if f.ring() != ctx.ring() {
        return Err(Error::RingMismatch(f.ring(), ctx.ring()));
    }
    Ok(())
}

/// Decides `f ∈ Im D`. In a domain the leading coefficient of `D(h)` is
/// `−a·lc(h)`, so a witness has the degree of `f` and its coefficients come
/// out of `(i+1)h_{i+1} − a·hᵢ = fᵢ` solved from the top down.
pub fn member_ufd(ctx: &UfdContext, f: &Poly<RingElement>) -> Result<UfdMembership> {
    check_ring(ctx, f)?;
    let ring = ctx.ring();
    let Some(n) = f.degree() else {
        return Ok(UfdMembership {
            member: true,
            witness: Some(Poly::zero_in(ring)),
        });
    };
    let mut h = vec![RingElement::zero_in(ring); n + 2];
    for i in (0..=n).rev() {
        let above = h[i + 1].scaled(&crate::algebra::int(i as i64 + 1));
        let Some(hi) = exact_divide(&(&above - &f.coeff(i)), ctx.a())? else {
            return Ok(UfdMembership {
                member: false,
                witness: None,
            });
        };
        h[i] = hi;
    }
    let witness = Poly::from_coeffs(ring, h);
    debug_assert_eq!(apply_d(ctx, &witness).ok().as_ref(), Some(f));
    Ok(UfdMembership {
        member: true,
        witness: Some(witness),
    })
}

/// `𝓛(p) = Σ pₙ·n!`.
pub fn factorial_map(p: &Poly<RingElement>) -> RingElement {
    p.coeffs()
        .iter()
        .enumerate()
        .fold(RingElement::zero_in(p.ring()), |acc, (n, c)| {
            &acc + &c.scaled(&factorial(n as u64))
        })
}

/// `p(a·t) = Σ pₙ aⁿ tⁿ`.
pub fn substitute_at(ctx: &UfdContext, p: &Poly<RingElement>) -> Result<Poly<RingElement>> {
    check_ring(ctx, p)?;
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c * &ctx.a().pow(n as u64))
        .collect();
    Ok(Poly::from_coeffs(ctx.ring(), coeffs))
}

/// `p(a·t) ∈ Im D` exactly when `𝓛(p) ∈ aA`.
pub fn lemma72_member(ctx: &UfdContext, p: &Poly<RingElement>) -> Result<bool> {
    check_ring(ctx, p)?;
    Ok(exact_divide(&factorial_map(p), ctx.a())?.is_some())
}

/// `p(a·t) ∈ 𝔯(Im D)` exactly when every coefficient of `p` lies in `𝔯(aA)`,
/// the multiples of the squarefree part of `a`.
pub fn lemma72_radical(ctx: &UfdContext, p: &Poly<RingElement>) -> Result<bool> {
    check_ring(ctx, p)?;
    let r = squarefree_element(ctx.a())?;
    for c in p.coeffs() {
        if exact_divide(c, &r)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cor73Report {
    /// Smallest `N ≥ 1` with every coefficient of `pᴺ` in `aA`.
    pub n: u64,
    pub d: usize,
    /// `N(d+1)`: `g·fᵐ ∈ Im D` for every `m` from here on.
    pub bound: u64,
    /// `member_ufd(g·fᵐ)` for `m = bound` and `m = bound + 1`.
    pub validated: [bool; 2],
}

fn all_in_a(ctx: &UfdContext, p: &Poly<RingElement>) -> Result<bool> {
    for c in p.coeffs() {
        if exact_divide(c, ctx.a())?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `N` with all coefficients of `pᴺ` in `aA`, for `p` with
/// coefficients in `𝔯(aA)`.
pub fn minimal_power(ctx: &UfdContext, p: &Poly<RingElement>) -> Result<u64> {
    if !lemma72_radical(ctx, p)? {
        return Err(Error::NotInRadical(format!(
            "some coefficient of p is not divisible by the squarefree part of {}",
            ctx.a()
        )));
    }
    let mut power = p.clone();
    let mut n = 1;
    while !all_in_a(ctx, &power)? {
        power = power.checked_mul(p)?;
        n += 1;
    }
    Ok(n)
}

pub fn cor73_bound(
    ctx: &UfdContext,
    p: &Poly<RingElement>,
    g: &Poly<RingElement>,
) -> Result<Cor73Report> {
    check_ring(ctx, g)?;
    if g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let n = minimal_power(ctx, p)?;
    let d = g.degree().unwrap_or(0);
    let bound = n * (d as u64 + 1);
    let f = substitute_at(ctx, p)?;
    let mut validated = [false; 2];
    for (slot, m) in validated.iter_mut().zip([bound, bound + 1]) {
        *slot = member_ufd(ctx, &g.checked_mul(&f.pow(m))?)?.member;
    }
    Ok(Cor73Report {
        n,
        d,
        bound,
        validated,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    /// `gcd(a, d₁, …, dₙ)`.
    pub b: RingElement,
    pub u: RingElement,
    pub d_tilde: Vec<RingElement>,
    /// An index `i` with `d̃ᵢ ∉ 𝔯(aA)`.
    pub outside_radical: usize,
}

/// Given `dᵢ ∈ 𝔯(aA)`, not all in `aA`, finds `u` and `d̃ᵢ` with
/// `u·dᵢ = d̃ᵢ·a` and some `d̃ᵢ ∉ 𝔯(aA)`.
pub fn lemma74_lift(a: &RingElement, d: &[RingElement]) -> Result<Lift> {
    if a.is_zero() || a.is_unit() {
        return Err(Error::BadInput("a must be a nonzero non-unit".into()));
    }
    let r = squarefree_element(a)?;
    let mut some_outside = false;
    for di in d {
        if di.ring() != a.ring() {
            return Err(Error::RingMismatch(di.ring(), a.ring()));
        }
        if exact_divide(di, &r)?.is_none() {
            return Err(Error::BadInput(format!(
                "{di} is not in the radical of ({a})"
            )));
        }
        some_outside |= exact_divide(di, a)?.is_none();
    }
    if !some_outside {
        return Err(Error::BadInput(format!("every element lies in ({a})")));
    }
    let b = d
        .iter()
        .try_fold(a.clone(), |acc, di| gcd_elements(&acc, di))?;
    let quotient =
        |x: &RingElement| exact_divide(x, &b).map(|q| q.expect("b divides a and every dᵢ"));
    let u = quotient(a)?;
    let d_tilde = d.iter().map(quotient).collect::<Result<Vec<_>>>()?;
    for (di, ti) in d.iter().zip(&d_tilde) {
        assert_eq!(&u * di, ti * a, "u·dᵢ = d̃ᵢ·a");
    }
    let mut outside_radical = None;
    for (i, ti) in d_tilde.iter().enumerate() {
        if exact_divide(ti, &r)?.is_none() {
            outside_radical = Some(i);
            break;
        }
    }
    Ok(Lift {
        b,
        u,
        d_tilde,
        outside_radical: outside_radical.expect("the minimal valuation index leaves the radical"),
    })
}

/// `v_a(c)`: the largest `n` with `c ∈ aⁿA`, infinite for `c = 0`.
pub fn va(ctx: &UfdContext, c: &RingElement) -> Result<Valuation> {
    if c.ring() != ctx.ring() {
        return Err(Error::RingMismatch(c.ring(), ctx.ring()));
    }
    if c.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let mut rest = c.clone();
    let mut n = 0;
    while let Some(q) = exact_divide(&rest, ctx.a())? {
        rest = q;
        n += 1;
    }
    Ok(Valuation::Finite(n))
}

/// `v_a(c·tⁱ) = v_a(c) − i`.
pub fn va_valuation(ctx: &UfdContext, c: &RingElement, i: usize) -> Result<Valuation> {
    Ok(match va(ctx, c)? {
        Valuation::Finite(n) => Valuation::Finite(n - i as i64),
        Valuation::Infinite => Valuation::Infinite,
    })
}

/// `s(f)`: the least `v_a` over the terms of `f`.
pub fn s_of(ctx: &UfdContext, f: &Poly<RingElement>) -> Result<Valuation> {
    check_ring(ctx, f)?;
    let mut least = Valuation::Infinite;
    for (i, c) in f.coeffs().iter().enumerate() {
        least = least.min(va_valuation(ctx, c, i)?);
    }
    Ok(least)
}
