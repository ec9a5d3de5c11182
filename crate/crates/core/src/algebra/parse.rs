//! Text syntax for polynomials.
//!
//! ```text
//! poly  := ['+'|'-'] term (('+'|'-') term)*
//! term  := coeff ('*'? mono)? | mono
//! mono  := 't' ('^' uint)? | 'x' ('^' uint)? ('*' 't' ('^' uint)?)?
//! coeff := uint ('/' uint)?
//! ```
//!
//! Whitespace is ignored. Printing uses descending powers of `t` (and of
//! `x` inside a coefficient), lowest-terms coefficients and no unary `+`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{Poly, QPoly};
use super::rational::{format_rational, Rational};
use super::ring::{Coefficient, RingDescriptor, RingElement};
use crate::error::{Error, Result};

/// One parsed summand `coeff · x^x_exp · t^t_exp`.
#[derive(Debug, Clone)]
struct Term {
    coeff: Rational,
    x_exp: usize,
    t_exp: usize,
    position: usize,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser {
            chars,
            pos: 0,
            text,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            self.pos = start;
            return Err(Error::parse(self.offset(), "expected digits"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<usize> {
        if !self.eat('^') {
            return Ok(1);
        }
        let at = self.offset();
        let e = self.uint()?;
        usize::try_from(e).map_err(|_| Error::parse(at, "exponent too large"))
    }

    fn terms(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let mut term = self.term()?;
            if negative {
                term.coeff = -term.coeff;
            }
            terms.push(term);
            match self.peek() {
                None => return Ok(terms),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(c) => {
                    return Err(Error::parse(self.offset(), format!("unexpected '{c}'")));
                }
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term> {
        let position = self.offset();
        let mut coeff = Rational::one();
        let has_coeff = self.peek().is_some_and(|c| c.is_ascii_digit());
        if has_coeff {
            let num = self.uint()?;
            let den = if self.eat('/') {
                let at = self.offset();
                let d = self.uint()?;
                if d.is_zero() {
                    return Err(Error::parse(at, "zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = Rational::new(num, den);
            let star = self.eat('*');
            if !matches!(self.peek(), Some('t' | 'x')) {
                if star {
                    return Err(Error::parse(self.offset(), "expected 't' or 'x' after '*'"));
                }
                return Ok(Term {
                    coeff,
                    x_exp: 0,
                    t_exp: 0,
                    position,
                });
            }
        }
        let (x_exp, t_exp) = self.mono()?;
        Ok(Term {
            coeff,
            x_exp,
            t_exp,
            position,
        })
    }

    fn mono(&mut self) -> Result<(usize, usize)> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                Ok((0, self.exponent()?))
            }
            Some('x') => {
                self.pos += 1;
                let x_exp = self.exponent()?;
                if self.peek() == Some('*')
                    && self.chars.get(self.pos + 1).map(|&(_, c)| c) == Some('t')
                {
                    self.pos += 2;
                    Ok((x_exp, self.exponent()?))
                } else {
                    Ok((x_exp, 0))
                }
            }
            Some(c) => Err(Error::parse(self.offset(), format!("unexpected '{c}'"))),
            None => Err(Error::parse(self.offset(), "unexpected end of input")),
        }
    }
}

fn parse_terms(text: &str) -> Result<Vec<Term>> {
    let mut parser = Parser::new(text);
    if parser.peek().is_none() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    parser.terms()
}

/// Parses a polynomial in `t` whose coefficients live in `ring`.
pub fn parse_poly(text: &str, ring: RingDescriptor) -> Result<Poly<RingElement>> {
    let terms = parse_terms(text)?;
    let mut coeffs: Vec<QPoly> = Vec::new();
    for term in terms {
        if term.x_exp > 0 && !ring.has_x() {
            return Err(Error::parse(
                term.position,
                "coefficient variable x is not allowed over QQ",
            ));
        }
        if coeffs.len() <= term.t_exp {
            coeffs.resize(term.t_exp + 1, QPoly::zero());
        }
        let summand = QPoly::monomial(term.coeff, term.x_exp);
        coeffs[term.t_exp] = &coeffs[term.t_exp] + &summand;
    }
    let elements = coeffs
        .into_iter()
        .map(|c| RingElement::new(ring, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(ring, elements))
}

/// Parses a polynomial in `t` over ℚ.
pub fn parse_qpoly(text: &str) -> Result<QPoly> {
    let p = parse_poly(text, RingDescriptor::Qq)?;
    Ok(p.map_coeffs(RingDescriptor::Qq, |c| c.value().coeff(0)))
}

/// Parses an element of `ring` written in `x` (no `t` allowed).
pub fn parse_ring_element(text: &str, ring: RingDescriptor) -> Result<RingElement> {
    let terms = parse_terms(text)?;
    if let Some(term) = terms.iter().find(|t| t.t_exp > 0) {
        return Err(Error::parse(
            term.position,
            "ring elements may not contain t",
        ));
    }
    let p = parse_poly(text, ring)?;
    Ok(p.coeff(0))
}

fn power(var: char, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

fn join_terms(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&format_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&mag));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Prints a ℚ-polynomial in the given variable name.
pub fn format_in_variable(p: &QPoly, var: char) -> String {
    join_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !Coefficient::is_zero(*c))
            .map(|(i, c)| (c.clone(), power(var, i))),
    )
}

pub fn format_qpoly(p: &QPoly) -> String {
    format_in_variable(p, 't')
}

/// Prints a polynomial over a coefficient ring, expanding every coefficient
/// into `c*x^a*t^b` terms.
pub fn format_poly(p: &Poly<RingElement>) -> String {
    let mut terms = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        for (j, r) in c.value().coeffs().iter().enumerate().rev() {
            if Coefficient::is_zero(r) {
                continue;
            }
            let mono = match (j, i) {
                (0, _) => power('t', i),
                (_, 0) => power('x', j),
                _ => format!("{}*{}", power('x', j), power('t', i)),
            };
            terms.push((r.clone(), mono));
        }
    }
    join_terms(terms.into_iter())
}

impl std::fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_qpoly(self))
    }
}

impl std::fmt::Display for Poly<RingElement> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_poly(self))
    }
}

/// Serde adapter writing ℚ-polynomials as text.
pub mod serde_qpoly {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_qpoly, parse_qpoly, QPoly};

    pub fn serialize<S: Serializer>(p: &QPoly, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_qpoly(p))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<QPoly, D::Error> {
        let text = String::deserialize(d)?;
        parse_qpoly(&text).map_err(serde::de::Error::custom)
    }
}
