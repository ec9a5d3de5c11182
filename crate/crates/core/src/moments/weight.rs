use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{format_rational, Rational};
use crate::error::{Error, Result};
use crate::operator::{param_rational, split_params};

/// A positive measure on ℝ with rational moment ratios.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSpec {
    /// `e^{−t²}` on ℝ.
    Hermite,
    /// `t^α e^{−t}` on `(0, ∞)`.
    Laguerre { alpha: Rational },
    /// `(1−t)^α (1+t)^β` on `(−1, 1)`.
    Jacobi { alpha: Rational, beta: Rational },
    /// Point masses `weights[i]` at `points[i]`.
    Atomic {
        points: Vec<Rational>,
        weights: Vec<Rational>,
    },
}

impl WeightSpec {
    pub fn laguerre(alpha: Rational) -> Result<Self> {
        let w = WeightSpec::Laguerre { alpha };
        w.validate()?;
        Ok(w)
    }

    pub fn jacobi(alpha: Rational, beta: Rational) -> Result<Self> {
        let w = WeightSpec::Jacobi { alpha, beta };
        w.validate()?;
        Ok(w)
    }

    pub fn atomic(points: Vec<Rational>, weights: Vec<Rational>) -> Result<Self> {
        let w = WeightSpec::Atomic { points, weights };
        w.validate()?;
        Ok(w)
    }

    /// Checks the parameter ranges that make the measure finite and positive.
    pub fn validate(&self) -> Result<()> {
        let above_minus_one = |name: &str, x: &Rational| {
            if *x > -Rational::one() {
                Ok(())
            } else {
                Err(Error::BadWeight(format!("{name} = {x} must exceed -1")))
            }
        };
        match self {
            WeightSpec::Hermite => Ok(()),
            WeightSpec::Laguerre { alpha } => above_minus_one("alpha", alpha),
            WeightSpec::Jacobi { alpha, beta } => {
                above_minus_one("alpha", alpha)?;
                above_minus_one("beta", beta)
            }
            WeightSpec::Atomic { points, weights } => {
                if points.is_empty() {
                    return Err(Error::BadWeight("atomic measure needs a point".into()));
                }
                if points.len() != weights.len() {
                    return Err(Error::BadWeight(format!(
                        "{} points but {} weights",
                        points.len(),
                        weights.len()
                    )));
                }
                if let Some(w) = weights.iter().find(|w| **w <= Rational::zero()) {
                    return Err(Error::BadWeight(format!("weight {w} is not positive")));
                }
                for (i, p) in points.iter().enumerate() {
                    if points[..i].contains(p) {
                        return Err(Error::BadWeight(format!("point {p} repeated")));
                    }
                }
                Ok(())
            }
        }
    }
}

fn join(values: &[Rational]) -> String {
    values
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSpec::Hermite => f.write_str("hermite"),
            WeightSpec::Laguerre { alpha } => {
                write!(f, "laguerre:alpha={}", format_rational(alpha))
            }
            WeightSpec::Jacobi { alpha, beta } => write!(
                f,
                "jacobi:alpha={},beta={}",
                format_rational(alpha),
                format_rational(beta)
            ),
            WeightSpec::Atomic { points, weights } => {
                write!(
                    f,
                    "atomic:points={};weights={}",
                    join(points),
                    join(weights)
                )
            }
        }
    }
}

fn rational_list(value: &str, at: usize) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    let mut offset = at;
    for piece in value.split(',') {
        out.push(param_rational(piece, offset)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for WeightSpec {
    type Err = Error;

    /// Reads `"hermite"`, `"laguerre:alpha=1/2"`, `"jacobi:alpha=0,beta=0"`
    /// or `"atomic:points=0,1;weights=1,1"`.
    fn from_str(text: &str) -> Result<Self> {
        let kind = text.split(':').next().unwrap_or("").trim();
        let separator = if kind == "atomic" { ';' } else { ',' };
        let (kind, params) = split_params(text, separator)?;
        let unknown = |key: &str, at: usize| Error::parse(at, format!("unknown parameter '{key}'"));
        let weight = match kind {
            "hermite" => {
                if let Some((key, _, at)) = params.first() {
                    return Err(unknown(key, *at));
                }
                WeightSpec::Hermite
            }
            "laguerre" => {
                let mut alpha = Rational::zero();
                for (key, value, at) in params {
                    match key {
                        "alpha" => alpha = param_rational(value, at)?,
                        _ => return Err(unknown(key, at)),
                    }
                }
                WeightSpec::Laguerre { alpha }
            }
            "jacobi" => {
                let (mut alpha, mut beta) = (Rational::zero(), Rational::zero());
                for (key, value, at) in params {
                    match key {
                        "alpha" => alpha = param_rational(value, at)?,
                        "beta" => beta = param_rational(value, at)?,
                        _ => return Err(unknown(key, at)),
                    }
                }
                WeightSpec::Jacobi { alpha, beta }
            }
            "atomic" => {
                let (mut points, mut weights) = (None, None);
                for (key, value, at) in params {
                    match key {
                        "points" => points = Some(rational_list(value, at)?),
                        "weights" => weights = Some(rational_list(value, at)?),
                        _ => return Err(unknown(key, at)),
                    }
                }
                let points = points.ok_or_else(|| Error::parse(text.len(), "missing points"))?;
                let weights = weights.unwrap_or_else(|| vec![Rational::one(); points.len()]);
                WeightSpec::Atomic { points, weights }
            }
            other => return Err(Error::parse(0, format!("unknown weight '{other}'"))),
        };
        weight.validate()?;
        Ok(weight)
    }
}
