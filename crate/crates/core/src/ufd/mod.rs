//! Images of `∂ₜ − a` over coefficient rings with non-units: ℚ[x], where
//! membership reduces to divisibility by `a`, and ℚ[x]/(x^k), where it is a
//! finite linear system.

mod context;
mod membership;
mod surjectivity;

pub use context::{TruncContext, UfdContext};
pub use membership::{
    apply_d, cor73_bound, factorial_map, lemma72_member, lemma72_radical, lemma74_lift, member_ufd,
    minimal_power, s_of, substitute_at, va, va_valuation, Cor73Report, Lift, UfdMembership,
};
pub use surjectivity::{
    apply_trunc, degree_slack, theorem77_check, trunc_member, Probe, T77Report, T77Status,
};
