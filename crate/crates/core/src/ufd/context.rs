//! Text forms of the two coefficient-ring settings: `D = ∂ₜ − a` over ℚ[x]
//! and `D = c∂ₜ − a(t)` over ℚ[x]/(x^k).

use std::fmt;
use std::str::FromStr;

use crate::algebra::{
    format_poly, parse_poly, parse_ring_element, Coefficient, Poly, RingDescriptor, RingElement,
};
use crate::error::{Error, Result};
use crate::operator::split_params;

/// `A = ℚ[x]` with a fixed nonzero non-unit `a`, for `D = ∂ₜ − a` on `A[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UfdContext {
    a: RingElement,
}

impl UfdContext {
    pub fn new(a: RingElement) -> Result<Self> {
        if a.ring() != RingDescriptor::QqPoly {
            return Err(Error::RingMismatch(a.ring(), RingDescriptor::QqPoly));
        }
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        if a.is_unit() {
            return Err(Error::BadInput(format!("a = {a} is a unit")));
        }
        Ok(UfdContext { a })
    }

    pub fn ring(&self) -> RingDescriptor {
        RingDescriptor::QqPoly
    }

    pub fn a(&self) -> &RingElement {
        &self.a
    }
}

impl fmt::Display for UfdContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ufd:a={}", self.a)
    }
}

impl FromStr for UfdContext {
    type Err = Error;

    /// Reads `"ufd:a=x^2"`.
    fn from_str(text: &str) -> Result<Self> {
        let (kind, params) = split_params(text, ',')?;
        if kind != "ufd" {
            return Err(Error::parse(0, format!("expected 'ufd', got '{kind}'")));
        }
        let mut a = None;
        for (key, value, at) in params {
            match key {
                "a" => {
                    a = Some(
                        parse_ring_element(value, RingDescriptor::QqPoly)
                            .map_err(|e| shift(e, at))?,
                    )
                }
                _ => return Err(Error::parse(at, format!("unknown parameter '{key}'"))),
            }
        }
        let a = a.ok_or_else(|| Error::parse(text.len(), "missing parameter 'a'"))?;
        UfdContext::new(a)
    }
}

/// `A = ℚ[x]/(x^k)` with `D = c∂ₜ − a(t)` on `A[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncContext {
    k: usize,
    c: RingElement,
    a: Poly<RingElement>,
}

impl TruncContext {
    pub fn new(k: usize, c: RingElement, a: Poly<RingElement>) -> Result<Self> {
        let ring = RingDescriptor::truncated(k)?;
        if c.ring() != ring {
            return Err(Error::RingMismatch(c.ring(), ring));
        }
        if a.ring() != ring {
            return Err(Error::RingMismatch(a.ring(), ring));
        }
        Ok(TruncContext { k, c, a })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ring(&self) -> RingDescriptor {
        RingDescriptor::QqPolyTrunc(self.k)
    }

    pub fn c(&self) -> &RingElement {
        &self.c
    }

    pub fn a(&self) -> &Poly<RingElement> {
        &self.a
    }
}

impl fmt::Display for TruncContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "trunc:k={},c={},a={}",
            self.k,
            self.c,
            format_poly(&self.a)
        )
    }
}

impl FromStr for TruncContext {
    type Err = Error;

    /// Reads `"trunc:k=2,c=1,a=x"`; `c` defaults to 1 and `a` may involve `t`.
    fn from_str(text: &str) -> Result<Self> {
        let (kind, params) = split_params(text, ',')?;
        if kind != "trunc" {
            return Err(Error::parse(0, format!("expected 'trunc', got '{kind}'")));
        }
        let mut k = None;
        let (mut c_text, mut a_text) = (None, None);
        for (key, value, at) in params {
            match key {
                "k" => {
                    k =
                        Some(value.trim().parse::<usize>().map_err(|_| {
                            Error::parse(at, format!("bad truncation order '{value}'"))
                        })?)
                }
                "c" => c_text = Some((value, at)),
                "a" => a_text = Some((value, at)),
                _ => return Err(Error::parse(at, format!("unknown parameter '{key}'"))),
            }
        }
        let k = k.ok_or_else(|| Error::parse(text.len(), "missing parameter 'k'"))?;
        let ring = RingDescriptor::truncated(k)?;
        let c = match c_text {
            Some((value, at)) => parse_ring_element(value, ring).map_err(|e| shift(e, at))?,
            None => RingElement::one_in(ring),
        };
        let (value, at) =
            a_text.ok_or_else(|| Error::parse(text.len(), "missing parameter 'a'"))?;
        let a = parse_poly(value, ring).map_err(|e| shift(e, at))?;
        TruncContext::new(k, c, a)
    }
}

/// Moves a parse position inside a parameter value to the full text.
fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + offset,
            message,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_contexts() {
        let ctx: UfdContext = "ufd:a=x^2".parse().unwrap();
        assert_eq!(
            ctx.a(),
            &RingElement::x_pow(RingDescriptor::QqPoly, 2).unwrap()
        );
        assert_eq!(ctx.to_string(), "ufd:a=x^2");
        let trunc: TruncContext = "trunc:k=2,c=1,a=x".parse().unwrap();
        assert_eq!(trunc.k(), 2);
        assert_eq!(trunc.to_string(), "trunc:k=2,c=1,a=x");
        let again: TruncContext = trunc.to_string().parse().unwrap();
        assert_eq!(again, trunc);
    }

    #[test]
    fn rejects_units_and_bad_text() {
        assert!(matches!(
            "ufd:a=3".parse::<UfdContext>(),
            Err(Error::BadInput(_))
        ));
        assert!(matches!(
            "ufd:a=0".parse::<UfdContext>(),
            Err(Error::ZeroInput)
        ));
        assert!(matches!(
            "ufd:b=x".parse::<UfdContext>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "trunc:c=1,a=x".parse::<TruncContext>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "trunc:k=0,a=x".parse::<TruncContext>(),
            Err(Error::BadInput(_))
        ));
        match "ufd:a=x^^2".parse::<UfdContext>() {
            Err(Error::Parse { position, .. }) => assert!(position >= 6),
            other => panic!("unexpected {other:?}"),
        }
    }
}
