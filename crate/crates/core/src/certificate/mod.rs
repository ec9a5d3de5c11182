//! Number-theoretic certificates that powers of a polynomial escape the
//! image of `∂ + α/t − tᵈ`.

mod bracket;
mod cert;
mod primes;

pub use bracket::{b_products, bracket_factorial, lzero_monomial};
pub use cert::{
    certificate_nonmembership, phi_expansion, verify_certificate, Certificate, DEFAULT_BUDGET,
};
pub use primes::{dirichlet_prime, is_prime, vp, Valuation};
