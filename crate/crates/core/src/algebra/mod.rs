//! Exact arithmetic: rationals, coefficient rings, dense polynomials,
//! linear algebra and the text syntax.

pub mod linalg;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod ring;

pub use parse::{
    format_in_variable, format_poly, format_qpoly, parse_poly, parse_qpoly, parse_ring_element,
};
pub use poly::{divides, euclid_divmod, gcd, squarefree_part, Poly, QPoly};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use ring::{
    exact_divide, gcd_elements, squarefree_element, Coefficient, Quotient, RingDescriptor,
    RingElement,
};
