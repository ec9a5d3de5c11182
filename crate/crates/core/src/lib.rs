//! Exact computations with Mathieu subspaces of univariate polynomial
//! algebras: images of first-order differential operators, radicals of
//! cofinite subspaces, moment functionals, p-adic non-membership
//! certificates and membership over coefficient rings.

pub mod algebra;
pub mod certificate;
pub mod error;
pub mod moments;
pub mod operator;
pub mod radical;
pub mod ufd;

pub use error::{Error, Result};
