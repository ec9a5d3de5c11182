//! Bracket factorials and the products `bᵢ` relating consecutive ones.

use num_traits::One;

use crate::algebra::Rational;
use crate::error::{Error, Result};

fn r(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

/// `[qn, n]_α! = ((q−1)n+1+α)((q−2)n+1+α)⋯(1+α)`, and `1` when `q = 0`.
pub fn bracket_factorial(q: u64, n: u64, alpha: &Rational) -> Rational {
    (0..q).fold(Rational::one(), |acc, j| acc * (r(j * n + 1) + alpha))
}

/// The constant term of the normal form of `t^{q(d+1)+i}` under
/// `∂ + α/t − tᵈ`, for `0 ≤ i ≤ d`.
pub fn lzero_monomial(q: u64, i: u64, d: u64, alpha: &Rational) -> Result<Rational> {
    if i > d {
        return Err(Error::BadInput(format!("offset {i} exceeds d = {d}")));
    }
    Ok(if i > 0 {
        Rational::from_integer(0.into())
    } else {
        bracket_factorial(q, d + 1, alpha)
    })
}

/// `b₁, …, b_{i_max}` with `bᵢ = ∏_{j<i} ((sm+j)(d+1)+1+α)`, so that
/// `[(sm+i)(d+1), d+1]_α! = [sm(d+1), d+1]_α! · bᵢ`.
pub fn b_products(s: u64, m: u64, d: u64, alpha: &Rational, i_max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(i_max);
    let mut acc = Rational::one();
    for j in 0..i_max as u64 {
        acc *= r((s * m + j) * (d + 1) + 1) + alpha;
        out.push(acc.clone());
    }
    out
}
