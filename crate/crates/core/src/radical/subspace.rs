//! Subspaces of ℚ[t] that contain a nonzero ideal `(g)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::linalg::{independent, Span};
use crate::algebra::{
    euclid_divmod, format_qpoly, gcd, parse_qpoly, parse_rational, QPoly, Rational,
};
use crate::error::{Error, Result};

/// `V = {f : f mod g ∈ V̄}` for a modulus `g = ∏ pᵢ^{eᵢ}` and a subspace
/// `V̄` of `ℚ[t]/(g)`, written in the basis `1, t, …, t^{D−1}`.
#[derive(Debug, Clone)]
pub struct CofiniteSubspace {
    factors: Vec<(QPoly, usize)>,
    modulus: QPoly,
    basis: Vec<Vec<Rational>>,
    span: Span,
    unverified: Vec<QPoly>,
}

/// Rational written either as a JSON integer or as text such as `"3/4"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum JsonRational {
    Int(i64),
    Text(String),
}

impl JsonRational {
    fn to_rational(&self) -> Result<Rational> {
        match self {
            JsonRational::Int(n) => Ok(Rational::from_integer((*n).into())),
            JsonRational::Text(t) => parse_rational(t),
        }
    }

    fn from_rational(r: &Rational) -> Self {
        match (r.is_integer(), r.to_integer().to_i64()) {
            (true, Some(n)) => JsonRational::Int(n),
            _ => JsonRational::Text(crate::algebra::format_rational(r)),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct SubspaceJson {
    modulus: Vec<(String, usize)>,
    vbar_basis: Vec<Vec<JsonRational>>,
}

/// Every integer `d > 0` dividing `n`, by trial division. `None` when `n` is
/// too large for that to be cheap.
fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&n| n <= 1_000_000_000_000)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Rational roots of `p` by the rational root test, or `None` when the
/// coefficients are too large to enumerate divisors.
pub fn rational_roots(p: &QPoly) -> Option<Vec<Rational>> {
    let Some(low) = p.lowest_degree() else {
        return Some(Vec::new());
    };
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let p = p.shift_down(low);
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let constant = ints.first()?;
    let leading = ints.last()?;
    for num in positive_divisors(constant)? {
        for den in positive_divisors(leading)? {
            for sign in [1, -1] {
                let candidate = Rational::new(&num * sign, den.clone());
                if p.eval(&candidate).is_zero() && !roots.contains(&candidate) {
                    roots.push(candidate);
                }
            }
        }
    }
    Some(roots)
}

/// `Some(true/false)` for factors of degree at most 3, `None` when the
/// check is not performed.
fn irreducible_low_degree(p: &QPoly) -> Option<bool> {
    match p.degree()? {
        0 => Some(false),
        1 => Some(true),
        2 | 3 => rational_roots(p).map(|roots| roots.is_empty()),
        _ => None,
    }
}

impl CofiniteSubspace {
    /// Builds `V` from factored modulus and a basis of `V̄`. Factors are made
    /// monic; factors of degree at most 3 are checked for irreducibility and
    /// higher-degree factors are accepted as given.
    pub fn new(factors: Vec<(QPoly, usize)>, basis: Vec<Vec<Rational>>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::BadInput("modulus needs at least one factor".into()));
        }
        let mut monic_factors: Vec<(QPoly, usize)> = Vec::new();
        let mut unverified = Vec::new();
        for (p, e) in factors {
            if e == 0 {
                return Err(Error::BadInput(format!("factor {p} has multiplicity 0")));
            }
            let p = p.monic();
            match irreducible_low_degree(&p) {
                Some(true) => {}
                Some(false) => {
                    return Err(Error::BadInput(format!("factor {p} is not irreducible")))
                }
                None => unverified.push(p.clone()),
            }
            if monic_factors
                .iter()
                .any(|(q, _)| gcd(q, &p).degree() != Some(0))
            {
                return Err(Error::BadInput(format!("factor {p} is listed twice")));
            }
            monic_factors.push((p, e));
        }
        let modulus = monic_factors
            .iter()
            .fold(QPoly::one(), |acc, (p, e)| &acc * &p.pow(*e as u64));
        let dim = modulus.degree().expect("nonconstant modulus");
        if let Some(v) = basis.iter().find(|v| v.len() != dim) {
            return Err(Error::BadInput(format!(
                "basis vector of length {} in a quotient of dimension {dim}",
                v.len()
            )));
        }
        if !independent(&basis, dim) {
            return Err(Error::BadInput(
                "basis vectors are linearly dependent".into(),
            ));
        }
        let span = Span::new(&basis, dim);
        Ok(CofiniteSubspace {
            factors: monic_factors,
            modulus,
            basis,
            span,
            unverified,
        })
    }

    /// Reads `{"modulus": [["t",1],["t - 1",1]], "vbar_basis": [[1,0]]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SubspaceJson = serde_json::from_str(text)
            .map_err(|e| Error::BadInput(format!("subspace JSON: {e}")))?;
        let factors = raw
            .modulus
            .iter()
            .map(|(p, e)| Ok((parse_qpoly(p)?, *e)))
            .collect::<Result<Vec<_>>>()?;
        let basis = raw
            .vbar_basis
            .iter()
            .map(|v| {
                v.iter()
                    .map(JsonRational::to_rational)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors, basis)
    }

    pub fn to_json(&self) -> String {
        let raw = SubspaceJson {
            modulus: self
                .factors
                .iter()
                .map(|(p, e)| (format_qpoly(p), *e))
                .collect(),
            vbar_basis: self
                .basis
                .iter()
                .map(|v| v.iter().map(JsonRational::from_rational).collect())
                .collect(),
        };
        serde_json::to_string(&raw).expect("plain data serializes")
    }

    /// The ideal `(g)` is the subspace itself.
    pub fn ideal(factors: Vec<(QPoly, usize)>) -> Result<Self> {
        Self::new(factors, Vec::new())
    }

    pub fn factors(&self) -> &[(QPoly, usize)] {
        &self.factors
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    /// `D = deg g`, the dimension of `ℚ[t]/(g)`.
    pub fn quotient_dim(&self) -> usize {
        self.span.ambient_dim()
    }

    pub fn vbar_basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn vbar_dim(&self) -> usize {
        self.span.dim()
    }

    /// Factors of degree above 3, accepted without an irreducibility check.
    pub fn unverified_factors(&self) -> &[QPoly] {
        &self.unverified
    }

    /// Coordinates of `f mod g` in `1, t, …, t^{D−1}`.
    pub fn residue(&self, f: &QPoly) -> Vec<Rational> {
        let (_, r) = euclid_divmod(f, &self.modulus).expect("modulus is nonzero");
        let mut v = r.into_coeffs();
        v.resize(self.quotient_dim(), Rational::zero());
        v
    }

    pub fn from_residue(v: &[Rational]) -> QPoly {
        QPoly::from_rationals(v.to_vec())
    }

    /// `f mod g`.
    pub fn reduce(&self, f: &QPoly) -> QPoly {
        euclid_divmod(f, &self.modulus)
            .expect("modulus is nonzero")
            .1
    }

    pub fn residue_in_vbar(&self, v: &[Rational]) -> bool {
        self.span.contains(v)
    }

    pub fn contains(&self, f: &QPoly) -> bool {
        self.span.contains(&self.residue(f))
    }

    /// Product in `ℚ[t]/(g)`.
    pub fn mul_mod(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.reduce(&(a * b))
    }
}
