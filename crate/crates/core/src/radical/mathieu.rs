//! Mathieu verdicts for cofinite subspaces.
//!
//! `V` is Mathieu exactly when `𝔯(V) = 𝔯(I_V)`. The inclusion `⊇` always
//! holds, so a verdict is either a refutation (some `a ∈ 𝔯(V)` outside
//! `𝔯(I_V)`, together with a `b` for which `aᵐ b ∉ V` infinitely often),
//! a structural proof, or a report that a bounded search found nothing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::ops::{eventually_in, largest_ideal, radical_member_cofinite};
use super::subspace::CofiniteSubspace;
use crate::algebra::{divides, euclid_divmod, squarefree_part, QPoly, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MathieuStatus {
    NotMathieu,
    MathieuExact,
    ConsistentUpToBudget,
}

/// Where the search for a refuting `a` looks.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Coefficient bound for combinations of the `V̄` basis.
    pub height: i64,
    /// Cap on the number of such combinations.
    pub max_enumerated: usize,
    /// Number of seeded random residues tried after the enumeration.
    pub samples: usize,
    pub seed: u64,
    /// Extra candidates tried right after the idempotents.
    pub candidates: Vec<QPoly>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            height: 2,
            max_enumerated: 20_000,
            samples: 200,
            seed: 0,
            candidates: Vec::new(),
            jobs: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BudgetUsed {
    pub idempotents: usize,
    pub user_candidates: usize,
    pub enumerated: usize,
    pub samples: usize,
    pub seed: u64,
    /// Candidates examined up to and including the witness, if any.
    pub candidates_tried: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MathieuVerdict {
    pub status: MathieuStatus,
    /// `(a, b)` with `a ∈ 𝔯(V) ∖ 𝔯(I_V)` and `aᵐ b ∉ V` for infinitely many `m`.
    pub witness: Option<(QPoly, QPoly)>,
    pub i_v_generator: QPoly,
    pub radical_iv_generator: QPoly,
    pub reason: String,
    pub budget_used: BudgetUsed,
}

/// `a⁻¹ mod m`, for coprime `a` and `m`.
fn inverse_mod(a: &QPoly, m: &QPoly) -> Option<QPoly> {
    let (mut r0, mut r1) = (m.clone(), euclid_divmod(a, m).ok()?.1);
    let (mut s0, mut s1) = (QPoly::zero(), QPoly::one());
    while !r1.is_zero() {
        let (q, r) = euclid_divmod(&r0, &r1).ok()?;
        let s = &s0 - &(&q * &s1);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
    }
    if r0.degree() != Some(0) {
        return None;
    }
    let inv = s0.scale(&r0.coeff(0).recip());
    Some(euclid_divmod(&inv, m).ok()?.1)
}

/// CRT idempotents of `ℚ[t]/(g)`, one per nonempty set of primary
/// components, starting with `1` and then by increasing set size.
fn crt_idempotents(v: &CofiniteSubspace) -> Vec<QPoly> {
    let g = v.modulus();
    let components: Vec<QPoly> = v.factors().iter().map(|(p, e)| p.pow(*e as u64)).collect();
    let k = components.len().min(12);
    let units: Vec<QPoly> = components
        .iter()
        .map(|q| {
            let cofactor = euclid_divmod(g, q).expect("component divides g").0;
            let inv = inverse_mod(&cofactor, q).expect("components are coprime");
            v.reduce(&(&cofactor * &inv))
        })
        .collect();
    let full = (1usize << k) - 1;
    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|&m| (m != full, m.count_ones(), m));
    masks
        .into_iter()
        .map(|mask| {
            (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .fold(QPoly::zero(), |acc, i| &acc + &units[i])
        })
        .collect()
}

fn height_combinations(v: &CofiniteSubspace, height: i64, cap: usize) -> Vec<QPoly> {
    let basis = v.vbar_basis();
    let k = basis.len();
    let mut out = Vec::new();
    if k == 0 || height < 1 {
        return out;
    }
    let mut coeffs = vec![-height; k];
    loop {
        if coeffs.iter().any(|&c| c != 0) {
            let mut acc = vec![Rational::from_integer(0.into()); v.quotient_dim()];
            for (c, b) in coeffs.iter().zip(basis) {
                let c = Rational::from_integer((*c).into());
                for (x, y) in acc.iter_mut().zip(b) {
                    *x += &c * y;
                }
            }
            out.push(CofiniteSubspace::from_residue(&acc));
            if out.len() >= cap {
                return out;
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            if coeffs[i] < height {
                coeffs[i] += 1;
                break;
            }
            coeffs[i] = -height;
            i += 1;
        }
    }
}

fn random_residues(v: &CofiniteSubspace, count: usize, seed: u64) -> Vec<QPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let coeffs: Vec<Rational> = (0..v.quotient_dim())
                .map(|_| Rational::from_integer(rng.gen_range(-5i64..=5).into()))
                .collect();
            QPoly::from_rationals(coeffs)
        })
        .collect()
}

/// For `a ∈ 𝔯(V)`, the first `tʲ` (`j < D`) with `aᵐ tʲ ∉ V` for
/// infinitely many `m`. One exists whenever `a ∉ 𝔯(I_V)`: otherwise
/// `aᴺ tʲ ∈ V` for all `j` and large `N`, so `aᴺ ∈ I_V`.
fn violating_monomial(v: &CofiniteSubspace, a: &QPoly) -> Option<QPoly> {
    (0..v.quotient_dim())
        .map(QPoly::t_pow)
        .find(|b| !eventually_in(v, a, b))
}

/// First candidate (in list order) that refutes the Mathieu property,
/// with its index.
fn first_refutation(
    v: &CofiniteSubspace,
    radical: &QPoly,
    candidates: &[QPoly],
) -> Option<(usize, QPoly, QPoly)> {
    candidates.par_iter().enumerate().find_map_first(|(i, a)| {
        let a = v.reduce(a);
        if divides(radical, &a).unwrap_or(true) || !radical_member_cofinite(v, &a) {
            return None;
        }
        violating_monomial(v, &a).map(|b| (i, a, b))
    })
}

/// Whether `h` is a product of distinct linear factors.
fn split_squarefree(v: &CofiniteSubspace, h: &QPoly) -> bool {
    let Ok(r) = squarefree_part(h) else {
        return false;
    };
    r == *h
        && v.factors()
            .iter()
            .all(|(p, _)| p.degree() == Some(1) || !divides(p, h).unwrap_or(true))
}

pub fn mathieu_check(v: &CofiniteSubspace, config: &SearchConfig) -> Result<MathieuVerdict> {
    match config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::BadInput(format!("thread pool: {e}")))?
            .install(|| check(v, config)),
        None => check(v, config),
    }
}

fn check(v: &CofiniteSubspace, config: &SearchConfig) -> Result<MathieuVerdict> {
    let h = largest_ideal(v);
    let r = squarefree_part(&h)?;
    assert!(
        radical_member_cofinite(v, &r),
        "the radical of I_V lies in the radical of V"
    );
    let mut budget = BudgetUsed {
        idempotents: 0,
        user_candidates: 0,
        enumerated: 0,
        samples: 0,
        seed: config.seed,
        candidates_tried: 0,
    };
    let verdict = |status, witness, reason: &str, budget: BudgetUsed| MathieuVerdict {
        status,
        witness,
        i_v_generator: h.clone(),
        radical_iv_generator: r.clone(),
        reason: reason.to_string(),
        budget_used: budget,
    };

    let ideal_dim = v.quotient_dim() - h.degree().unwrap_or(0);
    if v.vbar_dim() == ideal_dim {
        return Ok(verdict(
            MathieuStatus::MathieuExact,
            None,
            "V is an ideal",
            budget,
        ));
    }

    let phases: [(&str, Vec<QPoly>); 4] = [
        ("idempotents", crt_idempotents(v)),
        ("user", config.candidates.clone()),
        (
            "enumerated",
            height_combinations(v, config.height, config.max_enumerated),
        ),
        ("samples", random_residues(v, config.samples, config.seed)),
    ];
    for (phase, candidates) in phases {
        let found = first_refutation(v, &r, &candidates);
        let tried = found.as_ref().map_or(candidates.len(), |(i, _, _)| i + 1);
        budget.candidates_tried += tried;
        match phase {
            "idempotents" => budget.idempotents = tried,
            "user" => budget.user_candidates = tried,
            "enumerated" => budget.enumerated = tried,
            _ => budget.samples = tried,
        }
        if let Some((_, a, b)) = found {
            return Ok(verdict(
                MathieuStatus::NotMathieu,
                Some((a, b)),
                "a lies in the radical of V but not in the radical of I_V",
                budget,
            ));
        }
        // With I_V = (∏ (t − rᵢ)) for distinct rᵢ, evaluation identifies
        // ℚ[t]/I_V with ℚᵏ. If f ∈ 𝔯(V) ∖ I_V, group the coordinates of
        // x = ev(f) by value: xᵐ = Σ_v vᵐ 1_{S_v}. Since vᵐ for distinct
        // nonzero v are linearly independent sequences, each 1_{S_v} lies
        // in ev(V), so some idempotent of ℚ[t]/(g) refutes V. None did.
        if phase == "idempotents" && split_squarefree(v, &h) {
            return Ok(verdict(
                MathieuStatus::MathieuExact,
                None,
                "I_V is a product of distinct linear factors and no idempotent lies in V",
                budget,
            ));
        }
    }
    Ok(verdict(
        MathieuStatus::ConsistentUpToBudget,
        None,
        "no element of the radical of V outside the radical of I_V was found",
        budget,
    ))
}
