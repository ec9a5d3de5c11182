use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{euclid_divmod, format_rational, parse_rational, QPoly, Rational};
use crate::error::{Error, Result};

/// A first-order differential operator on ℚ[t].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorSpec {
    /// `D = c∂ + α/t − λtᵈ`.
    Monomial {
        c: Rational,
        alpha: Rational,
        lambda: Rational,
        d: usize,
    },
    /// `D = ∂ − α/(1−t) + β/(1+t)`.
    Jacobi { alpha: Rational, beta: Rational },
}

impl OperatorSpec {
    pub fn monomial(c: Rational, alpha: Rational, lambda: Rational, d: usize) -> Self {
        OperatorSpec::Monomial {
            c,
            alpha,
            lambda,
            d,
        }
    }

    /// `∂ + α/t − tᵈ`.
    pub fn standard(alpha: Rational, d: usize) -> Self {
        Self::monomial(Rational::one(), alpha, Rational::one(), d)
    }

    /// The Hermite operator `∂ − 2t`.
    pub fn hermite() -> Self {
        Self::monomial(
            Rational::one(),
            Rational::zero(),
            Rational::from_integer(2.into()),
            1,
        )
    }

    /// The Laguerre operator `∂ + α/t − 1`.
    pub fn laguerre(alpha: Rational) -> Self {
        Self::standard(alpha, 0)
    }

    pub fn jacobi(alpha: Rational, beta: Rational) -> Self {
        OperatorSpec::Jacobi { alpha, beta }
    }

    /// Whether `D(h)` is a polynomial, i.e. `h` lies in the domain of `D`.
    pub fn admits(&self, h: &QPoly) -> bool {
        match self {
            OperatorSpec::Monomial { alpha, .. } => alpha.is_zero() || h.coeff(0).is_zero(),
            OperatorSpec::Jacobi { alpha, beta } => {
                (alpha.is_zero() || h.eval(&Rational::one()).is_zero())
                    && (beta.is_zero() || h.eval(&-Rational::one()).is_zero())
            }
        }
    }

    /// Applies `D` to `h`. Fails with `BadInput` when `D(h)` is not a
    /// polynomial.
    pub fn apply(&self, h: &QPoly) -> Result<QPoly> {
        if !self.admits(h) {
            return Err(Error::BadInput(format!("{self} maps {h} outside ℚ[t]")));
        }
        match self {
            OperatorSpec::Monomial {
                c,
                alpha,
                lambda,
                d,
            } => {
                let mut out = h.derivative().scale(c);
                if !alpha.is_zero() {
                    out = &out + &h.shift_down(1).scale(alpha);
                }
                Ok(&out - &h.shift_up(*d).scale(lambda))
            }
            OperatorSpec::Jacobi { alpha, beta } => {
                let one_minus_t = QPoly::from_ints(&[1, -1]);
                let one_plus_t = QPoly::from_ints(&[1, 1]);
                let mut out = h.derivative();
                if !alpha.is_zero() {
                    let (q, _) = euclid_divmod(h, &one_minus_t)?;
                    out = &out - &q.scale(alpha);
                }
                if !beta.is_zero() {
                    let (q, _) = euclid_divmod(h, &one_plus_t)?;
                    out = &out + &q.scale(beta);
                }
                Ok(out)
            }
        }
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorSpec::Monomial {
                c,
                alpha,
                lambda,
                d,
            } => write!(
                f,
                "mono:c={},alpha={},lambda={},d={d}",
                format_rational(c),
                format_rational(alpha),
                format_rational(lambda)
            ),
            OperatorSpec::Jacobi { alpha, beta } => write!(
                f,
                "jacobi:alpha={},beta={}",
                format_rational(alpha),
                format_rational(beta)
            ),
        }
    }
}

/// A key, its value and the byte offset of the value.
pub(crate) type Param<'a> = (&'a str, &'a str, usize);

/// Splits `"kind:key=value,key=value"` into the kind and its parameters,
/// keeping the byte offset of every value for error reporting.
pub(crate) fn split_params(text: &str, separator: char) -> Result<(&str, Vec<Param<'_>>)> {
    let (kind, rest, rest_at) = match text.find(':') {
        Some(i) => (&text[..i], &text[i + 1..], i + 1),
        None => (text, "", text.len()),
    };
    let mut params = Vec::new();
    let mut at = rest_at;
    for piece in rest.split(separator) {
        let here = at;
        at += piece.len() + 1;
        if piece.trim().is_empty() {
            continue;
        }
        let Some(eq) = piece.find('=') else {
            return Err(Error::parse(
                here,
                format!("expected key=value, got '{piece}'"),
            ));
        };
        params.push((piece[..eq].trim(), &piece[eq + 1..], here + eq + 1));
    }
    Ok((kind.trim(), params))
}

pub(crate) fn param_rational(value: &str, at: usize) -> Result<Rational> {
    parse_rational(value).map_err(|_| Error::parse(at, format!("bad rational '{value}'")))
}

impl FromStr for OperatorSpec {
    type Err = Error;

    /// Reads `"mono:c=1,alpha=1/2,lambda=1,d=2"` or `"jacobi:alpha=1,beta=2"`.
    /// Omitted parameters default to `c = λ = 1`, `α = β = 0`, `d = 0`.
    fn from_str(text: &str) -> Result<Self> {
        let (kind, params) = split_params(text, ',')?;
        match kind {
            "mono" => {
                let (mut c, mut alpha, mut lambda, mut d) =
                    (Rational::one(), Rational::zero(), Rational::one(), 0usize);
                for (key, value, at) in params {
                    match key {
                        "c" => c = param_rational(value, at)?,
                        "alpha" => alpha = param_rational(value, at)?,
                        "lambda" => lambda = param_rational(value, at)?,
                        "d" => {
                            d = value
                                .trim()
                                .parse()
                                .map_err(|_| Error::parse(at, format!("bad degree '{value}'")))?
                        }
                        _ => return Err(Error::parse(at, format!("unknown parameter '{key}'"))),
                    }
                }
                Ok(OperatorSpec::Monomial {
                    c,
                    alpha,
                    lambda,
                    d,
                })
            }
            "jacobi" => {
                let (mut alpha, mut beta) = (Rational::zero(), Rational::zero());
                for (key, value, at) in params {
                    match key {
                        "alpha" => alpha = param_rational(value, at)?,
                        "beta" => beta = param_rational(value, at)?,
                        _ => return Err(Error::parse(at, format!("unknown parameter '{key}'"))),
                    }
                }
                Ok(OperatorSpec::Jacobi { alpha, beta })
            }
            other => Err(Error::parse(0, format!("unknown operator kind '{other}'"))),
        }
    }
}
