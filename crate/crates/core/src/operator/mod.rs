//! First-order differential operators on ℚ[t] and their polynomial images.

mod image;
mod spec;

pub use image::{
    im_structure, lzero, member, reduce, ImStructure, Membership, ReductionResult, SCapIm,
};
pub use spec::OperatorSpec;
pub(crate) use spec::{param_rational, split_params};
