//! Coefficient rings: ℚ, ℚ[x] and the truncated rings ℚ[x]/(x^k).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Poly, QPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Which coefficient ring a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    /// The field ℚ.
    Qq,
    /// The UFD ℚ[x].
    QqPoly,
    /// ℚ[x]/(x^k), k ≥ 1. Has nilpotents as soon as k ≥ 2.
    QqPolyTrunc(usize),
}

impl RingDescriptor {
    pub fn truncated(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadInput(
                "truncation order must be at least 1".into(),
            ));
        }
        Ok(RingDescriptor::QqPolyTrunc(k))
    }

    pub fn is_field(self) -> bool {
        matches!(self, RingDescriptor::Qq | RingDescriptor::QqPolyTrunc(1))
    }

    pub fn is_domain(self) -> bool {
        matches!(
            self,
            RingDescriptor::Qq | RingDescriptor::QqPoly | RingDescriptor::QqPolyTrunc(1)
        )
    }

    /// Whether the variable `x` may appear in elements of this ring.
    pub fn has_x(self) -> bool {
        !matches!(self, RingDescriptor::Qq)
    }

    pub(crate) fn check_same(self, other: RingDescriptor) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self, other))
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Qq => write!(f, "QQ"),
            RingDescriptor::QqPoly => write!(f, "QQ[x]"),
            RingDescriptor::QqPolyTrunc(k) => write!(f, "QQ[x]/(x^{k})"),
        }
    }
}

/// Arithmetic every polynomial coefficient type supports.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn ring(&self) -> RingDescriptor;
    fn zero_in(ring: RingDescriptor) -> Self;
    fn from_rational_in(r: Rational, ring: RingDescriptor) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, r: &Rational) -> Self;

    fn one_in(ring: RingDescriptor) -> Self {
        Self::from_rational_in(Rational::one(), ring)
    }
}

impl Coefficient for Rational {
    fn ring(&self) -> RingDescriptor {
        RingDescriptor::Qq
    }

    fn zero_in(_: RingDescriptor) -> Self {
        Rational::zero()
    }

    fn from_rational_in(r: Rational, _: RingDescriptor) -> Self {
        r
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negated(&self) -> Self {
        -self
    }

    fn scaled(&self, r: &Rational) -> Self {
        self * r
    }
}

/// An element of one of the coefficient rings. The value is stored as a
/// polynomial in `x`; for ℚ it is a constant and for ℚ[x]/(x^k) it has
/// degree below `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: RingDescriptor,
    value: QPoly,
}

impl RingElement {
    pub fn new(ring: RingDescriptor, value: QPoly) -> Result<Self> {
        if ring == RingDescriptor::Qq && value.degree().is_some_and(|d| d > 0) {
            return Err(Error::BadInput(format!(
                "element of degree {} in x does not live in QQ",
                value.degree().unwrap_or(0)
            )));
        }
        Ok(Self::reduced(ring, value))
    }

    fn reduced(ring: RingDescriptor, value: QPoly) -> Self {
        let value = match ring {
            RingDescriptor::QqPolyTrunc(k) => value.truncate(k),
            _ => value,
        };
        RingElement { ring, value }
    }

    pub fn from_rational(ring: RingDescriptor, r: Rational) -> Self {
        RingElement {
            ring,
            value: QPoly::constant(r),
        }
    }

    pub fn from_int(ring: RingDescriptor, n: i64) -> Self {
        Self::from_rational(ring, super::rational::int(n))
    }

    /// `x^e` in `ring`.
    pub fn x_pow(ring: RingDescriptor, e: usize) -> Result<Self> {
        if !ring.has_x() && e > 0 {
            return Err(Error::BadInput("x is not an element of QQ".into()));
        }
        Ok(Self::reduced(ring, QPoly::monomial(Rational::one(), e)))
    }

    /// Element of ℚ[x] from ascending integer coefficients.
    pub fn poly_from_ints(coeffs: &[i64]) -> Self {
        RingElement {
            ring: RingDescriptor::QqPoly,
            value: QPoly::from_ints(coeffs),
        }
    }

    pub fn value(&self) -> &QPoly {
        &self.value
    }

    pub fn into_value(self) -> QPoly {
        self.value
    }

    pub fn is_one(&self) -> bool {
        self.value == QPoly::one()
    }

    /// Units of ℚ[x] and ℚ[x]/(x^k) are the elements with a nonzero
    /// constant term (and, for ℚ[x], degree 0).
    pub fn is_unit(&self) -> bool {
        match self.ring {
            RingDescriptor::Qq => !self.value.is_zero(),
            RingDescriptor::QqPoly => self.value.degree() == Some(0),
            RingDescriptor::QqPolyTrunc(_) => !num_traits::Zero::is_zero(&self.value.coeff(0)),
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut result = Self::one_in(self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        result
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self.times(other))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self.plus(other))
    }
}

impl Coefficient for RingElement {
    fn ring(&self) -> RingDescriptor {
        self.ring
    }

    fn zero_in(ring: RingDescriptor) -> Self {
        RingElement {
            ring,
            value: QPoly::zero(),
        }
    }

    fn from_rational_in(r: Rational, ring: RingDescriptor) -> Self {
        Self::from_rational(ring, r)
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        assert_same_ring(self.ring, other.ring);
        RingElement {
            ring: self.ring,
            value: &self.value + &other.value,
        }
    }

    fn minus(&self, other: &Self) -> Self {
        assert_same_ring(self.ring, other.ring);
        RingElement {
            ring: self.ring,
            value: &self.value - &other.value,
        }
    }

    fn times(&self, other: &Self) -> Self {
        assert_same_ring(self.ring, other.ring);
        let value = match self.ring {
            RingDescriptor::QqPolyTrunc(k) => self.value.mul_truncated(&other.value, k),
            _ => &self.value * &other.value,
        };
        RingElement {
            ring: self.ring,
            value,
        }
    }

    fn negated(&self) -> Self {
        RingElement {
            ring: self.ring,
            value: -&self.value,
        }
    }

    fn scaled(&self, r: &Rational) -> Self {
        RingElement {
            ring: self.ring,
            value: self.value.scale(r),
        }
    }
}

fn assert_same_ring(a: RingDescriptor, b: RingDescriptor) {
    assert!(a == b, "ring mismatch: {a} vs {b}");
}

macro_rules! ring_element_ops {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$inner(rhs)
            }
        }
        impl $trait<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                self.$inner(&rhs)
            }
        }
    };
}

ring_element_ops!(Add, add, plus);
ring_element_ops!(Sub, sub, minus);
ring_element_ops!(Mul, mul, times);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.negated()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_in_variable(&self.value, 'x'))
    }
}

/// Outcome of [`exact_divide`] when no ambiguity arises.
pub type Quotient = Option<RingElement>;

/// Solves `b = a·c` for `c` in the common ring of `a` and `b`.
///
/// Returns `Ok(None)` when no solution exists and `Err(Ambiguous)` for
/// `0/0`. In ℚ[x]/(x^k) the solution is only determined modulo
/// `ann(a)`; the unique solution of degree below `k - v(a)` is returned,
/// where `v(a)` is the x-adic order of `a`.
pub fn exact_divide(b: &RingElement, a: &RingElement) -> Result<Quotient> {
    b.ring.check_same(a.ring)?;
    let ring = a.ring;
    if a.is_zero() {
        return if b.is_zero() {
            Err(Error::Ambiguous)
        } else {
            Ok(None)
        };
    }
    match ring {
        RingDescriptor::Qq => {
            let q = b.value.coeff(0) / a.value.coeff(0);
            Ok(Some(RingElement::from_rational(ring, q)))
        }
        RingDescriptor::QqPoly => {
            let (q, r) = super::poly::euclid_divmod(&b.value, &a.value)?;
            Ok(r.is_zero().then_some(RingElement { ring, value: q }))
        }
        RingDescriptor::QqPolyTrunc(k) => {
            let order = a.value.lowest_degree().unwrap_or(0);
            let lower = b.value.coeffs().iter().take(order);
            if lower.clone().any(|c| !Coefficient::is_zero(c)) {
                return Ok(None);
            }
            // Triangular solve of (a / x^v) · c = b / x^v modulo x^(k - v).
            let prec = k - order;
            let a_shift = a.value.shift_down(order);
            let b_shift = b.value.shift_down(order);
            let inv_lead = a_shift.coeff(0).recip();
            let mut c: Vec<Rational> = Vec::with_capacity(prec);
            for i in 0..prec {
                let mut acc = b_shift.coeff(i);
                for (j, cj) in c.iter().enumerate() {
                    acc -= a_shift.coeff(i - j) * cj;
                }
                c.push(acc * &inv_lead);
            }
            Ok(Some(RingElement::reduced(
                ring,
                Poly::from_coeffs(RingDescriptor::Qq, c),
            )))
        }
    }
}

/// Greatest common divisor in ℚ[x], made monic.
pub fn gcd_elements(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.ring.check_same(b.ring)?;
    if a.ring != RingDescriptor::QqPoly {
        return Err(Error::Unsupported(format!("gcd in {}", a.ring)));
    }
    Ok(RingElement {
        ring: a.ring,
        value: super::poly::gcd(&a.value, &b.value),
    })
}

/// Radical generator of the principal ideal `(a)`: `a / gcd(a, a')`, made
/// monic. Membership in the radical of `aA` is divisibility by it.
pub fn squarefree_element(a: &RingElement) -> Result<RingElement> {
    match a.ring {
        RingDescriptor::Qq => {
            if a.is_zero() {
                Err(Error::ZeroInput)
            } else {
                Ok(RingElement::one_in(a.ring))
            }
        }
        RingDescriptor::QqPoly => Ok(RingElement {
            ring: a.ring,
            value: super::poly::squarefree_part(&a.value)?,
        }),
        RingDescriptor::QqPolyTrunc(_) => {
            Err(Error::Unsupported(format!("squarefree part in {}", a.ring)))
        }
    }
}
