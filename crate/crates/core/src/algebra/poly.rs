//! Dense univariate polynomials in `t`.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: trailing zeros are stripped, so the zero polynomial is the
//! empty vector and `degree()` returns `None` for it.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use super::ring::{Coefficient, RingDescriptor};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<C> {
    ring: RingDescriptor,
    coeffs: Vec<C>,
}

/// Polynomials over ℚ.
pub type QPoly = Poly<Rational>;

impl<C: Coefficient> Poly<C> {
    pub fn zero_in(ring: RingDescriptor) -> Self {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one_in(ring: RingDescriptor) -> Self {
        Self::from_coeffs(ring, vec![C::one_in(ring)])
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing
    /// zeros.
    pub fn from_coeffs(ring: RingDescriptor, coeffs: Vec<C>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.ring() == ring));
        let mut p = Poly { ring, coeffs };
        p.normalize();
        p
    }

    /// `c·t^n`.
    pub fn monomial_in(ring: RingDescriptor, c: C, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero_in(ring);
        }
        let mut coeffs = vec![C::zero_in(ring); n + 1];
        coeffs[n] = c;
        Poly { ring, coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Degree in `t`; `None` is the sentinel for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| C::zero_in(self.ring))
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Smallest `s` with a nonzero coefficient of `t^s`.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self.zip_with(other, |a, b| a.plus(b)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self.zip_with(other, |a, b| a.minus(b)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self.mul_unchecked(other, None))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&C, &C) -> C) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = C::zero_in(self.ring);
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                op(a, b)
            })
            .collect();
        Self::from_coeffs(self.ring, coeffs)
    }

    fn mul_unchecked(&self, other: &Self, cap: Option<usize>) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero_in(self.ring);
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(cap) = cap {
            len = len.min(cap);
        }
        let mut out = vec![C::zero_in(self.ring); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Self::from_coeffs(self.ring, out)
    }

    /// Product with all terms of degree `≥ k` discarded.
    pub fn mul_truncated(&self, other: &Self, k: usize) -> Self {
        self.mul_unchecked(other, Some(k))
    }

    /// Drops every term of degree `≥ k`.
    pub fn truncate(&self, k: usize) -> Self {
        let coeffs = self.coeffs.iter().take(k).cloned().collect();
        Self::from_coeffs(self.ring, coeffs)
    }

    /// `self · t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero_in(self.ring); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            ring: self.ring,
            coeffs,
        }
    }

    /// `self / t^k`, discarding the terms below `t^k`.
    pub fn shift_down(&self, k: usize) -> Self {
        let coeffs = self.coeffs.iter().skip(k).cloned().collect();
        Self::from_coeffs(self.ring, coeffs)
    }

    /// Power by repeated squaring.
    pub fn pow(&self, e: u64) -> Self {
        let mut result = Self::one_in(self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base, None);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base, None);
            }
        }
        result
    }

    pub fn scale_by(&self, c: &C) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.times(c)).collect();
        Self::from_coeffs(self.ring, coeffs)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.scaled(r)).collect();
        Self::from_coeffs(self.ring, coeffs)
    }

    /// Formal derivative in `t`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scaled(&int(i as i64)))
            .collect();
        Self::from_coeffs(self.ring, coeffs)
    }

    /// Applies `f` to every coefficient; the result is renormalized.
    pub fn map_coeffs<D: Coefficient>(&self, ring: RingDescriptor, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(ring, self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Rational> {
    pub fn zero() -> Self {
        Self::zero_in(RingDescriptor::Qq)
    }

    pub fn one() -> Self {
        Self::one_in(RingDescriptor::Qq)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(RingDescriptor::Qq, vec![c])
    }

    pub fn monomial(c: Rational, n: usize) -> Self {
        Self::monomial_in(RingDescriptor::Qq, c, n)
    }

    /// `t^n`.
    pub fn t_pow(n: usize) -> Self {
        Self::monomial(Rational::one(), n)
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Self::from_coeffs(RingDescriptor::Qq, coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_rationals(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        euclid_divmod(self, g).map(|(_, r)| r)
    }
}

/// Euclidean division over ℚ: `f = q·g + r` with `deg r < deg g`.
pub fn euclid_divmod(f: &QPoly, g: &QPoly) -> Result<(QPoly, QPoly)> {
    let dg = g.degree().ok_or(Error::DivisionByZero)?;
    let inv_lead = g.coeffs[dg].recip();
    let mut r = f.coeffs.clone();
    let Some(df) = f.degree().filter(|&df| df >= dg) else {
        return Ok((QPoly::zero(), f.clone()));
    };
    let mut q = vec![Rational::zero(); df - dg + 1];
    for k in (dg..=df).rev() {
        if num_traits::Zero::is_zero(&r[k]) {
            continue;
        }
        let c = &r[k] * &inv_lead;
        for (j, gj) in g.coeffs.iter().enumerate() {
            if !num_traits::Zero::is_zero(gj) {
                r[k - dg + j] -= &c * gj;
            }
        }
        q[k - dg] = c;
    }
    r.truncate(dg);
    Ok((QPoly::from_rationals(q), QPoly::from_rationals(r)))
}

/// Monic greatest common divisor over ℚ; `gcd(0, 0) = 0`.
pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = euclid_divmod(&a, &b).expect("divisor is nonzero").1;
        a = b;
        b = r;
    }
    a.monic()
}

/// `f / gcd(f, f')`, made monic. Over ℚ this is the product of the distinct
/// irreducible factors of `f`.
pub fn squarefree_part(f: &QPoly) -> Result<QPoly> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let g = gcd(f, &f.derivative());
    let (q, _) = euclid_divmod(f, &g)?;
    Ok(q.monic())
}

/// `true` when `g` divides `f` in ℚ[t].
pub fn divides(g: &QPoly, f: &QPoly) -> Result<bool> {
    Ok(euclid_divmod(f, g)?.1.is_zero())
}

macro_rules! poly_ops {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Coefficient> $trait<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl<C: Coefficient> $trait<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

poly_ops!(Add, add, checked_add);
poly_ops!(Sub, sub, checked_sub);
poly_ops!(Mul, mul, checked_mul);

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        let coeffs = self.coeffs.iter().map(|c| c.negated()).collect();
        Poly {
            ring: self.ring,
            coeffs,
        }
    }
}

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}
