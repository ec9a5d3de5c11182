//! Moment functionals of classical weights and atomic measures.

mod equivalence;
mod functional;
mod weight;

pub use equivalence::{
    equivalence_check, matched_operator, vb_escape_exponent, Disagreement, EquivalenceReport,
};
pub use functional::{inner_product, normalized_moment, orthopoly, vb_member, MomentFunctional};
pub use weight::WeightSpec;
