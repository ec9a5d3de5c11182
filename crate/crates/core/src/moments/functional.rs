//! Normalized moments `νₙ = μₙ/μ₀` and the bilinear form they induce.
//!
//! Only ratios are kept: `μ₀` involves `√π`, `Γ(α+1)` or Beta values, and
//! every question asked here (vanishing integrals, orthogonality) is
//! invariant under a positive rescaling of the measure.

use num_traits::{One, Zero};

use super::weight::WeightSpec;
use crate::algebra::{QPoly, Rational};
use crate::error::{Error, Result};

fn r(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// A weight together with a growing table of its normalized moments.
#[derive(Debug, Clone)]
pub struct MomentFunctional {
    weight: WeightSpec,
    cache: Vec<Rational>,
}

impl MomentFunctional {
    pub fn new(weight: WeightSpec) -> Result<Self> {
        weight.validate()?;
        Ok(MomentFunctional {
            weight,
            cache: vec![Rational::one()],
        })
    }

    pub fn weight(&self) -> &WeightSpec {
        &self.weight
    }

    /// `ν₀, …, νₙ`.
    pub fn moments(&mut self, n: usize) -> &[Rational] {
        while self.cache.len() <= n {
            let k = self.cache.len();
            let next = self.compute(k);
            self.cache.push(next);
        }
        &self.cache[..=n]
    }

    pub fn moment(&mut self, n: usize) -> Rational {
        self.moments(n)[n].clone()
    }

    /// `νₖ` given `ν₀, …, νₖ₋₁` in the cache.
    fn compute(&self, k: usize) -> Rational {
        match &self.weight {
            WeightSpec::Hermite => {
                if k % 2 == 1 {
                    Rational::zero()
                } else {
                    &self.cache[k - 2] * r(k - 1) / r(2)
                }
            }
            WeightSpec::Laguerre { alpha } => &self.cache[k - 1] * (r(k) + alpha),
            WeightSpec::Jacobi { alpha, beta } => jacobi_moment(alpha, beta, k),
            WeightSpec::Atomic { points, weights } => {
                let total: Rational = weights.iter().sum();
                let mass: Rational = points
                    .iter()
                    .zip(weights)
                    .map(|(p, w)| w * num_traits::pow(p.clone(), k))
                    .sum();
                mass / total
            }
        }
    }

    /// `∫ f dσ / ∫ dσ`.
    pub fn integral(&mut self, f: &QPoly) -> Rational {
        let Some(deg) = f.degree() else {
            return Rational::zero();
        };
        let nu = self.moments(deg);
        f.coeffs().iter().zip(nu).map(|(c, m)| c * m).sum()
    }

    /// `⟨f, g⟩ = ∫ f g dσ / ∫ dσ`.
    pub fn inner_product(&mut self, f: &QPoly, g: &QPoly) -> Rational {
        self.integral(&(f * g))
    }

    /// Whether `∫ f dσ = 0`.
    pub fn vb_member(&mut self, f: &QPoly) -> bool {
        self.integral(f).is_zero()
    }

    /// The monic degree-`n` orthogonal polynomial, by Gram–Schmidt on
    /// `1, t, t², …`.
    pub fn orthopoly(&mut self, n: usize) -> Result<QPoly> {
        let mut basis: Vec<(QPoly, Rational)> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut p = QPoly::t_pow(k);
            let tk = p.clone();
            for (q, norm) in &basis {
                let coeff = self.inner_product(&tk, q) / norm;
                p = &p - &q.scale(&coeff);
            }
            let norm = self.inner_product(&p, &p);
            if norm.is_zero() {
                return Err(Error::Degenerate(format!(
                    "degree {k} orthogonal polynomial has zero norm"
                )));
            }
            basis.push((p, norm));
        }
        Ok(basis.pop().expect("n + 1 entries").0)
    }
}

/// Under `t = 1 − 2u` the Jacobi weight becomes a Beta density in `u`, with
/// `E[uᵏ] = ∏_{j=1..k} (α+j)/(α+β+1+j)`.
fn jacobi_moment(alpha: &Rational, beta: &Rational, n: usize) -> Rational {
    let mut total = Rational::zero();
    let mut binom = Rational::one();
    let mut beta_moment = Rational::one();
    let mut sign_pow = Rational::one();
    for k in 0..=n {
        if k > 0 {
            binom = binom * r(n - k + 1) / r(k);
            beta_moment = beta_moment * (alpha + r(k)) / (alpha + beta + r(1 + k));
            sign_pow *= Rational::from_integer((-2).into());
        }
        total += &binom * &sign_pow * &beta_moment;
    }
    total
}

pub fn normalized_moment(w: &WeightSpec, n: usize) -> Result<Rational> {
    Ok(MomentFunctional::new(w.clone())?.moment(n))
}

pub fn vb_member(w: &WeightSpec, f: &QPoly) -> Result<bool> {
    Ok(MomentFunctional::new(w.clone())?.vb_member(f))
}

pub fn inner_product(w: &WeightSpec, f: &QPoly, g: &QPoly) -> Result<Rational> {
    Ok(MomentFunctional::new(w.clone())?.inner_product(f, g))
}

pub fn orthopoly(w: &WeightSpec, n: usize) -> Result<QPoly> {
    MomentFunctional::new(w.clone())?.orthopoly(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_qpoly, rat};

    fn w(s: &str) -> WeightSpec {
        s.parse().unwrap()
    }

    fn p(s: &str) -> QPoly {
        parse_qpoly(s).unwrap()
    }

    #[test]
    fn moment_examples() {
        assert_eq!(
            normalized_moment(&WeightSpec::Hermite, 4).unwrap(),
            rat(3, 4)
        );
        assert_eq!(normalized_moment(&WeightSpec::Hermite, 3).unwrap(), int(0));
        assert_eq!(
            normalized_moment(&w("laguerre:alpha=1"), 3).unwrap(),
            int(24)
        );
        assert_eq!(
            normalized_moment(&w("jacobi:alpha=0,beta=0"), 2).unwrap(),
            rat(1, 3)
        );
        assert_eq!(
            normalized_moment(&w("atomic:points=0,1;weights=1,3"), 5).unwrap(),
            rat(3, 4)
        );
    }

    #[test]
    fn jacobi_first_moment() {
        // μ₁/μ₀ = (β−α)/(α+β+2)
        let nu1 = normalized_moment(&w("jacobi:alpha=1/2,beta=2"), 1).unwrap();
        assert_eq!(nu1, (int(2) - rat(1, 2)) / (rat(1, 2) + int(4)));
    }

    #[test]
    fn membership_examples() {
        assert!(vb_member(&w("jacobi:alpha=0,beta=0"), &p("3t^2 - 1")).unwrap());
        assert!(vb_member(&w("atomic:points=0,1;weights=1,1"), &p("2t - 1")).unwrap());
        assert!(!vb_member(&WeightSpec::Hermite, &QPoly::one()).unwrap());
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(
            inner_product(&w("jacobi:alpha=0,beta=0"), &p("t"), &p("t")).unwrap(),
            rat(1, 3)
        );
        assert_eq!(
            inner_product(&w("laguerre:alpha=2"), &p("1"), &p("1")).unwrap(),
            int(1)
        );
        assert_eq!(
            inner_product(&WeightSpec::Hermite, &p("t"), &p("1")).unwrap(),
            int(0)
        );
    }

    #[test]
    fn orthopoly_examples() {
        let legendre = w("jacobi:alpha=0,beta=0");
        assert_eq!(orthopoly(&legendre, 2).unwrap(), p("t^2 - 1/3"));
        assert_eq!(orthopoly(&WeightSpec::Hermite, 0).unwrap(), QPoly::one());
        assert_eq!(orthopoly(&WeightSpec::Hermite, 1).unwrap(), QPoly::t());
        assert_eq!(orthopoly(&WeightSpec::Hermite, 2).unwrap(), p("t^2 - 1/2"));
    }

    #[test]
    fn atomic_orthopoly_degenerates_past_support() {
        let a = w("atomic:points=0,1;weights=1,1");
        assert_eq!(orthopoly(&a, 1).unwrap(), p("t - 1/2"));
        assert!(matches!(orthopoly(&a, 2), Err(Error::Degenerate(_))));
        assert!(matches!(orthopoly(&a, 3), Err(Error::Degenerate(_))));
    }
}
