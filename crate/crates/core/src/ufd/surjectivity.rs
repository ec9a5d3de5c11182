//! Deciding `1 ∈ Im D` for `D = c∂ₜ − a(t)` on `A[t]`, `A = ℚ[x]/(x^k)`,
//! and probing `tⁿ ∈ Im D` once it is.
//!
//! `A[t]` is a ℚ-vector space with basis `xʲtⁱ`, so `D(h) = f` with
//! `deg h ≤ n` is a finite linear system over ℚ. Unknowns are ordered from
//! the top `t`-degree down, and free unknowns are set to zero, which makes
//! the reported witness the one supported on the highest possible terms.

use serde::Serialize;

use super::context::TruncContext;
use crate::algebra::linalg::solve;
use crate::algebra::{Coefficient, Poly, QPoly, Rational, RingElement};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum T77Status {
    Found,
    UndecidedOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Probe {
    pub n: usize,
    pub witness: Option<Poly<RingElement>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T77Report {
    pub status: T77Status,
    /// `h` with `D(h) = 1`.
    pub one_witness: Option<Poly<RingElement>>,
    /// Extra witness degree searched above `deg f`: `k·(deg a + 1)`.
    pub degree_slack: usize,
    /// `tⁿ` for `n ≤ deg_bound`, filled only when `1 ∈ Im D` was found.
    pub probes: Vec<Probe>,
    /// Probed `n` with no witness found; never expected to be nonempty.
    pub counterexamples: Vec<usize>,
    pub note: Option<String>,
}

/// `D(h) = c·h' − a(t)·h`.
pub fn apply_trunc(ctx: &TruncContext, h: &Poly<RingElement>) -> Result<Poly<RingElement>> {
    h.derivative()
        .scale_by(ctx.c())
        .checked_sub(&ctx.a().checked_mul(h)?)
}

pub fn degree_slack(ctx: &TruncContext) -> usize {
    ctx.k() * (ctx.a().degree().unwrap_or(0) + 1)
}

fn flatten(p: &Poly<RingElement>, k: usize, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::from_integer(0.into()); len];
    for (i, c) in p.coeffs().iter().enumerate() {
        for (j, q) in c.value().coeffs().iter().enumerate() {
            out[i * k + j] = q.clone();
        }
    }
    out
}

/// Solves `D(h) = f` with `deg h ≤ n` exactly, if possible.
fn solve_with_degree(
    ctx: &TruncContext,
    f: &Poly<RingElement>,
    n: usize,
) -> Result<Option<Poly<RingElement>>> {
    let ring = ctx.ring();
    let k = ctx.k();
    let rows = (n + ctx.a().degree().unwrap_or(0) + 1) * k;
    if f.degree().is_some_and(|d| (d + 1) * k > rows) {
        return Ok(None);
    }
    let unknowns: Vec<(usize, usize)> = (0..=n)
        .rev()
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .collect();
    let mut matrix = vec![Vec::with_capacity(unknowns.len()); rows];
    for &(i, j) in &unknowns {
        let basis = Poly::monomial_in(ring, RingElement::x_pow(ring, j)?, i);
        let column = flatten(&apply_trunc(ctx, &basis)?, k, rows);
        for (row, value) in matrix.iter_mut().zip(column) {
            row.push(value);
        }
    }
    let Some(x) = solve(&matrix, &flatten(f, k, rows), unknowns.len()) else {
        return Ok(None);
    };
    let mut coeffs = vec![QPoly::zero(); n + 1];
    for (&(i, j), value) in unknowns.iter().zip(x) {
        coeffs[i] = &coeffs[i] + &QPoly::monomial(value, j);
    }
    let h = Poly::from_coeffs(
        ring,
        coeffs
            .into_iter()
            .map(|c| RingElement::new(ring, c))
            .collect::<Result<Vec<_>>>()?,
    );
    assert_eq!(&apply_trunc(ctx, &h)?, f, "solution satisfies D(h) = f");
    Ok(Some(h))
}

/// A witness `h` with `D(h) = f`, searching `deg h` from `deg f` up to
/// `deg f + k·(deg a + 1)`.
pub fn trunc_member(
    ctx: &TruncContext,
    f: &Poly<RingElement>,
) -> Result<Option<Poly<RingElement>>> {
    if f.ring() != ctx.ring() {
        return Err(Error::RingMismatch(f.ring(), ctx.ring()));
    }
    let low = f.degree().unwrap_or(0);
    for n in low..=low + degree_slack(ctx) {
        if let Some(h) = solve_with_degree(ctx, f, n)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

pub fn theorem77_check(ctx: &TruncContext, deg_bound: usize) -> Result<T77Report> {
    let ring = ctx.ring();
    let one = Poly::one_in(ring);
    let slack = degree_slack(ctx);
    let Some(one_witness) = trunc_member(ctx, &one)? else {
        let nilpotent = |c: &RingElement| c.value().coeff(0) == Rational::from_integer(0.into());
        let note = if nilpotent(ctx.c()) && ctx.a().coeffs().iter().all(nilpotent) {
            "c and every coefficient of a lie in xA, so Im D lies in xA[t] and 1 is not an image"
                .to_string()
        } else {
            format!("no witness h with deg h ≤ {slack}")
        };
        return Ok(T77Report {
            status: T77Status::UndecidedOne,
            one_witness: None,
            degree_slack: slack,
            probes: Vec::new(),
            counterexamples: Vec::new(),
            note: Some(note),
        });
    };
    let mut probes = Vec::with_capacity(deg_bound + 1);
    for n in 0..=deg_bound {
        let target = Poly::monomial_in(ring, RingElement::one_in(ring), n);
        probes.push(Probe {
            n,
            witness: trunc_member(ctx, &target)?,
        });
    }
    let counterexamples = probes
        .iter()
        .filter(|p| p.witness.is_none())
        .map(|p| p.n)
        .collect();
    Ok(T77Report {
        status: T77Status::Found,
        one_witness: Some(one_witness),
        degree_slack: slack,
        probes,
        counterexamples,
        note: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, RingDescriptor};

    fn ctx(text: &str) -> TruncContext {
        text.parse().unwrap()
    }

    #[test]
    fn nilpotent_shift_is_surjective() {
        let c = ctx("trunc:k=2,c=1,a=x");
        let report = theorem77_check(&c, 10).unwrap();
        assert_eq!(report.status, T77Status::Found);
        let expected = parse_poly("1/2*x*t^2 + t", RingDescriptor::QqPolyTrunc(2)).unwrap();
        assert_eq!(report.one_witness, Some(expected));
        assert_eq!(report.probes.len(), 11);
        assert!(report.counterexamples.is_empty());
    }

    #[test]
    fn invertible_over_q() {
        let c = ctx("trunc:k=1,c=1,a=1");
        let report = theorem77_check(&c, 6).unwrap();
        assert_eq!(report.status, T77Status::Found);
        // D⁻¹ = −Σ ∂ⁱ, so D⁻¹(t³) = −(t³ + 3t² + 6t + 6).
        let t3 = &report.probes[3].witness;
        let expected = parse_poly("-t^3 - 3t^2 - 6t - 6", RingDescriptor::QqPolyTrunc(1)).unwrap();
        assert_eq!(t3.as_ref(), Some(&expected));
    }

    #[test]
    fn zero_derivative_part_is_undecided() {
        let report = theorem77_check(&ctx("trunc:k=2,c=0,a=x"), 10).unwrap();
        assert_eq!(report.status, T77Status::UndecidedOne);
        assert!(report.note.unwrap().contains("xA[t]"));
    }
}
