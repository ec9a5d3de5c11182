//! Primality, p-adic valuations and primes in arithmetic progressions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::rational::gcd_i64;
use crate::algebra::Rational;
use crate::error::{Error, Result};

/// A divisibility valuation (p-adic on ℚ, a-adic on ℚ[x]); `Infinite` is
/// the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_positive(self) -> bool {
        self > Valuation::Finite(0)
    }

    pub fn is_nonnegative(self) -> bool {
        self >= Valuation::Finite(0)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(n) => write!(f, "{n}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(n) => s.serialize_i64(*n),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Valuation::Finite(n)),
            Raw::Text(t) if t == "inf" => Ok(Valuation::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad valuation '{t}'"))),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the first twelve prime bases are a proof of
/// primality for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// The p-adic valuation of a rational number.
pub fn vp(x: &Rational, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if x.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    Ok(Valuation::Finite(
        int_valuation(x.numer(), &p) - int_valuation(x.denom(), &p),
    ))
}

/// Smallest `m ≥ m_min` with `A·m + B` prime, trying at most `budget`
/// values of `m`. Non-positive values of `A·m + B` are skipped.
pub fn dirichlet_prime(a: i64, b: i64, m_min: u64, budget: u64) -> Result<Option<(u64, u64)>> {
    if a < 1 {
        return Err(Error::BadInput(format!(
            "progression step {a} must be positive"
        )));
    }
    if gcd_i64(a, b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    for m in (m_min..).take(budget as usize) {
        let value = a as i128 * m as i128 + b as i128;
        if value <= 1 {
            continue;
        }
        let Ok(value) = u64::try_from(value) else {
            return Ok(None);
        };
        if is_prime(value) {
            return Ok(Some((m, value)));
        }
    }
    Ok(None)
}
