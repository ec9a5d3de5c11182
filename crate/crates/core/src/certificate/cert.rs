//! Non-membership certificates for powers of a polynomial in the image of
//! `D = ∂ + α/t − tᵈ`.
//!
//! Write `f = tˢ + (higher terms)` with `s ≥ 1` and `α = r/q`. Only the
//! degrees divisible by `d+1` survive the constant-term functional, so
//!
//! ```text
//! 𝓛₀(f^{m(d+1)}) = [sm(d+1), d+1]_α! · (1 + Σᵢ bᵢ φ_{(sm+i)(d+1)})
//! ```
//!
//! where `φₖ` are the coefficients of `f^{m(d+1)}`. Every `bᵢ` has the
//! factor `sm(d+1)+1+α = s₀((s_* q)m + h)/q`, so once `p = (s_* q)m + h`
//! is prime and no `φ` has `p` in its denominator, the bracketed sum is
//! `1` modulo `p` and cannot vanish. A nonzero `𝓛₀` value rules out
//! membership of `f^{m(d+1)}`.

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::bracket::{b_products, bracket_factorial};
use super::primes::{dirichlet_prime, is_prime, vp, Valuation};
use crate::algebra::parse::serde_qpoly;
use crate::algebra::rational::{gcd_i64, serde_text, serde_text_vec};
use crate::algebra::{QPoly, Rational};
use crate::error::{Error, Result};
use crate::operator::{lzero, OperatorSpec};

/// Default number of exponents `m` tried by [`certificate_nonmembership`].
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(with = "serde_qpoly")]
    pub f: QPoly,
    pub d: u64,
    #[serde(with = "serde_text")]
    pub alpha: Rational,
    pub s: u64,
    pub m: u64,
    pub prime: u64,
    pub s0: i64,
    pub s_star: i64,
    pub h: i64,
    pub q: i64,
    pub r: i64,
    /// `b₁, …, b_I` where `I(d+1)` is the top degree past `sm(d+1)`.
    #[serde(with = "serde_text_vec")]
    pub b_values: Vec<Rational>,
    pub bi_valuations: Vec<Valuation>,
    /// `φ_{(sm+i)(d+1)}` for `i = 1, …, I`.
    #[serde(with = "serde_text_vec")]
    pub phi_values: Vec<Rational>,
    pub phi_valuations: Vec<Valuation>,
    /// `[sm(d+1), d+1]_α!`
    #[serde(with = "serde_text")]
    pub bracket: Rational,
    /// `1 + Σ bᵢ φ_{(sm+i)(d+1)}`
    #[serde(with = "serde_text")]
    pub bracket_sum: Rational,
    /// `𝓛₀(f^{m(d+1)})`, computed by reduction.
    #[serde(with = "serde_text")]
    pub lzero: Rational,
    pub conclusion_exponent: u64,
}

/// Returns `s` for `f = tˢ + …` with `s ≥ 1`.
fn normalized_order(f: &QPoly) -> Result<u64> {
    let s = f
        .lowest_degree()
        .ok_or_else(|| Error::NotNormalized("f is zero".into()))?;
    if s == 0 {
        return Err(Error::NotNormalized(format!(
            "{f} has a nonzero constant term"
        )));
    }
    if !f.coeff(s).is_one() {
        return Err(Error::NotNormalized(format!(
            "lowest coefficient of {f} is not 1"
        )));
    }
    Ok(s as u64)
}

/// Coefficients `φₖ`, `k > sm(d+1)`, of `f^{m(d+1)} = t^{sm(d+1)} + Σ φₖ tᵏ`
/// (nonzero ones only).
pub fn phi_expansion(f: &QPoly, m: u64, d: u64) -> Result<Vec<(usize, Rational)>> {
    let s = normalized_order(f)?;
    let power = f.pow(m * (d + 1));
    let base = (s * m * (d + 1)) as usize;
    debug_assert!(power.coeff(base).is_one());
    Ok(power
        .coeffs()
        .iter()
        .enumerate()
        .skip(base + 1)
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect())
}

fn check_parameters(d: u64, alpha: &Rational) -> Result<()> {
    if d == 0 && alpha.is_zero() {
        return Err(Error::BadInput(
            "(d, alpha) = (0, 0) makes 1 an image".into(),
        ));
    }
    let shifted = -(alpha + Rational::one());
    let step = Rational::from_integer((d + 1).into());
    if !shifted.is_negative() && (&shifted / &step).is_integer() {
        return Err(Error::BadInput(format!(
            "alpha = {alpha} lies in -(1 + {}N)",
            d + 1
        )));
    }
    Ok(())
}

/// `(q, r, s₀, s_*, h)` with `α = r/q`, `s₀ = gcd(s(d+1), q+r)`,
/// `s(d+1) = s₀s_*` and `q+r = s₀h`.
fn decompose(s: u64, d: u64, alpha: &Rational) -> Result<(i64, i64, i64, i64, i64)> {
    let too_big = || Error::BadInput("parameters exceed 64-bit range".into());
    let q = alpha.denom().to_i64().ok_or_else(too_big)?;
    let r = alpha.numer().to_i64().ok_or_else(too_big)?;
    let sd = i64::try_from(s * (d + 1)).map_err(|_| too_big())?;
    let qr = q.checked_add(r).ok_or_else(too_big)?;
    let s0 = gcd_i64(sd, qr);
    Ok((q, r, s0, sd / s0, qr / s0))
}

fn assemble(f: &QPoly, d: u64, alpha: &Rational, m: u64, prime: u64) -> Result<Certificate> {
    let s = normalized_order(f)?;
    let (q, r, s0, s_star, h) = decompose(s, d, alpha)?;
    let step = (d + 1) as usize;
    let exponent = m * (d + 1);
    let power = f.pow(exponent);
    let base = (s * m) as usize;
    let top = power.degree().unwrap_or(0) / step;
    let i_max = top.saturating_sub(base);
    let b_values = b_products(s, m, d, alpha, i_max);
    let phi_values: Vec<Rational> = (1..=i_max)
        .map(|i| power.coeff((base + i) * step))
        .collect();
    let bi_valuations = b_values
        .iter()
        .map(|b| vp(b, prime))
        .collect::<Result<Vec<_>>>()?;
    let phi_valuations = phi_values
        .iter()
        .map(|c| vp(c, prime))
        .collect::<Result<Vec<_>>>()?;
    let bracket = bracket_factorial(s * m, d + 1, alpha);
    let bracket_sum = b_values
        .iter()
        .zip(&phi_values)
        .fold(Rational::one(), |acc, (b, phi)| acc + b * phi);
    let lzero = lzero(&OperatorSpec::standard(alpha.clone(), d as usize), &power)?;
    Ok(Certificate {
        f: f.clone(),
        d,
        alpha: alpha.clone(),
        s,
        m,
        prime,
        s0,
        s_star,
        h,
        q,
        r,
        b_values,
        bi_valuations,
        phi_values,
        phi_valuations,
        bracket,
        bracket_sum,
        lzero,
        conclusion_exponent: exponent,
    })
}

fn denominators_avoid(f: &QPoly, p: u64) -> bool {
    f.coeffs().iter().all(|c| !(c.denom() % p).is_zero())
}

/// Searches for `m` and a prime `p = (s_* q)m + h` proving
/// `f^{m(d+1)} ∉ Im′D`. `budget` bounds the number of exponents tried.
pub fn certificate_nonmembership(
    f: &QPoly,
    d: u64,
    alpha: &Rational,
    budget: u64,
) -> Result<Certificate> {
    check_parameters(d, alpha)?;
    let s = normalized_order(f)?;
    let (q, _, _, s_star, h) = decompose(s, d, alpha)?;
    let a = s_star
        .checked_mul(q)
        .ok_or_else(|| Error::BadInput("parameters exceed 64-bit range".into()))?;
    let mut next = 1;
    let mut remaining = budget;
    while remaining > 0 {
        let Some((m, p)) = dirichlet_prime(a, h, next, remaining)? else {
            break;
        };
        remaining -= m - next + 1;
        next = m + 1;
        if !denominators_avoid(f, p) {
            continue;
        }
        let cert = assemble(f, d, alpha, m, p)?;
        if cert.bi_valuations.iter().all(|v| v.is_positive())
            && cert.phi_valuations.iter().all(|v| v.is_nonnegative())
        {
            return Ok(cert);
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no admissible prime among {budget} exponents"
    )))
}

/// Recomputes every field of `cert` and checks the chain of implications.
pub fn verify_certificate(cert: &Certificate) -> bool {
    let Ok(()) = check_parameters(cert.d, &cert.alpha) else {
        return false;
    };
    if cert.m == 0 || !is_prime(cert.prime) {
        return false;
    }
    let Ok(rebuilt) = assemble(&cert.f, cert.d, &cert.alpha, cert.m, cert.prime) else {
        return false;
    };
    let expected_prime =
        (rebuilt.s_star as i128) * (rebuilt.q as i128) * (cert.m as i128) + rebuilt.h as i128;
    rebuilt == *cert
        && expected_prime == cert.prime as i128
        && cert.bi_valuations.iter().all(|v| v.is_positive())
        && cert.phi_valuations.iter().all(|v| v.is_nonnegative())
        && vp(&cert.bracket_sum, cert.prime) == Ok(Valuation::Finite(0))
        && !cert.bracket.is_zero()
        && cert.lzero == &cert.bracket * &cert.bracket_sum
}
