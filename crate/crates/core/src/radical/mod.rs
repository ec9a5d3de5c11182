//! Radicals of subspaces of ℚ[t] and the Mathieu property.

mod mathieu;
mod ops;
mod subspace;

pub use mathieu::{mathieu_check, BudgetUsed, MathieuStatus, MathieuVerdict, SearchConfig};
pub use ops::{
    definition_witness, escape_exponent, eventually_in, ideal_contained, largest_ideal,
    radical_member_cofinite, radical_of_largest_ideal, radical_probe,
};
pub use subspace::{rational_roots, CofiniteSubspace};
