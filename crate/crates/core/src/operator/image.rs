//! Normal forms modulo the polynomial image of an operator.
//!
//! Every supported operator has a basis `gₙ` of its polynomial domain whose
//! images `D(gₙ)` are triangular: each has a distinct top degree with a
//! nonzero coefficient. Reducing a polynomial is then top-down elimination,
//! and whatever survives below the lowest top degree is the normal form.

use num_traits::{One, Zero};
use serde::Serialize;

use super::spec::OperatorSpec;
use crate::algebra::{QPoly, Rational};
use crate::error::{Error, Result};

/// `f = normal_form + D(witness)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub normal_form: QPoly,
    pub witness: QPoly,
    /// Whether `witness` lies in the polynomial domain of `D`.
    pub admissible: bool,
}

/// Outcome of a membership test in the polynomial image of `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// Some `h` with `D(h) = f`, present exactly when `member` holds.
    pub witness: Option<QPoly>,
}

/// Intersection of the residue space with the image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SCapIm {
    Zero,
    SpanTd,
    All,
    /// `λ = 0`: no reduction to a residue space takes place.
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ImStructure {
    pub s_cap_im: SCapIm,
    pub one_in_image: bool,
}

/// Image of one basis element: its index `n` and the terms of `D(gₙ)`,
/// top degree first.
type BasisImage = (usize, Vec<(usize, Rational)>);

/// Eliminates every degree `≥ lowest` from `f`, returning the remainder and
/// the coefficients of the combination of basis elements used.
fn eliminate(
    f: &QPoly,
    lowest: usize,
    basis: impl Fn(usize) -> BasisImage,
) -> Result<(QPoly, Vec<Rational>)> {
    let mut r = f.coeffs().to_vec();
    let mut g: Vec<Rational> = Vec::new();
    let Some(top) = f.degree() else {
        return Ok((QPoly::zero(), g));
    };
    for k in (lowest..=top).rev() {
        if r[k].is_zero() {
            continue;
        }
        let (n, terms) = basis(k);
        let (pivot_degree, diag) = &terms[0];
        debug_assert_eq!(*pivot_degree, k);
        if diag.is_zero() {
            return Err(Error::DegenerateDiagonal { degree: n });
        }
        let x = &r[k] / diag;
        for (deg, coeff) in &terms {
            r[*deg] -= &x * coeff;
        }
        if g.len() <= n {
            g.resize(n + 1, Rational::zero());
        }
        g[n] += x;
    }
    Ok((QPoly::from_rationals(r), g))
}

fn usize_rat(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// Smallest `n ≥ 0` with `n + offset = 0`, if any.
fn vanishing_index(offset: &Rational) -> Option<usize> {
    let neg = -offset;
    if neg.is_integer() && neg >= Rational::zero() {
        neg.to_integer().try_into().ok()
    } else {
        None
    }
}

/// Checks that every diagonal entry of the Jacobi triangular system is
/// nonzero; when one vanishes the image has extra low-degree elements that
/// top-down elimination would miss.
fn check_jacobi(alpha: &Rational, beta: &Rational) -> Result<()> {
    let offset = match (alpha.is_zero(), beta.is_zero()) {
        (false, false) => alpha + beta + Rational::from_integer(2.into()),
        (false, true) => alpha + Rational::one(),
        (true, false) => beta + Rational::one(),
        (true, true) => return Ok(()),
    };
    match vanishing_index(&offset) {
        Some(degree) => Err(Error::DegenerateDiagonal { degree }),
        None => Ok(()),
    }
}

/// `(1−t)^{εα}(1+t)^{εβ}`, the factor every element of the Jacobi domain
/// carries.
fn jacobi_factor(alpha: &Rational, beta: &Rational) -> QPoly {
    let mut factor = QPoly::one();
    if !alpha.is_zero() {
        factor = &factor * &QPoly::from_ints(&[1, -1]);
    }
    if !beta.is_zero() {
        factor = &factor * &QPoly::from_ints(&[1, 1]);
    }
    factor
}

fn reduce_jacobi(alpha: &Rational, beta: &Rational, f: &QPoly) -> Result<(QPoly, QPoly)> {
    check_jacobi(alpha, beta)?;
    let (remainder, g) = match (alpha.is_zero(), beta.is_zero()) {
        // g = tⁿ ↦ n tⁿ⁻¹ + (β−α) tⁿ − (n+2+α+β) tⁿ⁺¹
        (false, false) => eliminate(f, 1, |k| {
            let n = k - 1;
            let mut terms = vec![(k, -(usize_rat(n + 2) + alpha + beta)), (n, beta - alpha)];
            if n >= 1 {
                terms.push((n - 1, usize_rat(n)));
            }
            (n, terms)
        })?,
        // g = tⁿ ↦ n tⁿ⁻¹ − (n+1+α) tⁿ
        (false, true) => eliminate(f, 0, |n| {
            let mut terms = vec![(n, -(usize_rat(n + 1) + alpha))];
            if n >= 1 {
                terms.push((n - 1, usize_rat(n)));
            }
            (n, terms)
        })?,
        // g = tⁿ ↦ n tⁿ⁻¹ + (n+1+β) tⁿ
        (true, false) => eliminate(f, 0, |n| {
            let mut terms = vec![(n, usize_rat(n + 1) + beta)];
            if n >= 1 {
                terms.push((n - 1, usize_rat(n)));
            }
            (n, terms)
        })?,
        // g = tⁿ⁺¹ ↦ (n+1) tⁿ
        (true, true) => eliminate(f, 0, |k| (k + 1, vec![(k, usize_rat(k + 1))]))?,
    };
    let witness = &jacobi_factor(alpha, beta) * &QPoly::from_rationals(g);
    Ok((remainder, witness))
}

/// Reduces `f` modulo the image of `D`.
///
/// For `D = c∂ + α/t − λtᵈ` the basis is `tⁿ` (with `n ≥ 1` when `α ≠ 0`),
/// `D(tⁿ) = (cn+α)tⁿ⁻¹ − λtⁿ⁺ᵈ`, so `tⁿ⁺ᵈ ≡ λ⁻¹(cn+α)tⁿ⁻¹`. Degrees above
/// `d` are eliminated, leaving a normal form of degree at most `d`.
pub fn reduce(op: &OperatorSpec, f: &QPoly) -> Result<ReductionResult> {
    let (normal_form, witness) = match op {
        OperatorSpec::Monomial {
            c,
            alpha,
            lambda,
            d,
        } => {
            if lambda.is_zero() {
                return Err(Error::UnsupportedReduction(
                    "lambda = 0 has no residue space; use membership instead".into(),
                ));
            }
            let d = *d;
            let (nf, h) = eliminate(f, d + 1, |k| {
                let n = k - d;
                (
                    n,
                    vec![(k, -lambda.clone()), (n - 1, c * usize_rat(n) + alpha)],
                )
            })?;
            (nf, QPoly::from_rationals(h))
        }
        OperatorSpec::Jacobi { alpha, beta } => reduce_jacobi(alpha, beta, f)?,
    };
    let admissible = op.admits(&witness);
    Ok(ReductionResult {
        normal_form,
        witness,
        admissible,
    })
}

/// Decides `f ∈ ℚ[t] ∩ D(ℚ[t])` and returns a preimage when it exists.
pub fn member(op: &OperatorSpec, f: &QPoly) -> Result<Membership> {
    if let OperatorSpec::Monomial {
        c, alpha, lambda, ..
    } = op
    {
        if lambda.is_zero() {
            return Ok(member_first_order(c, alpha, f));
        }
    }
    let ReductionResult {
        mut normal_form,
        mut witness,
        ..
    } = reduce(op, f)?;
    if let OperatorSpec::Monomial {
        alpha, lambda, d, ..
    } = op
    {
        // With α = 0 the constant 1 is in the domain and D(1) = −λtᵈ.
        if alpha.is_zero() {
            let b = normal_form.coeff(*d);
            if !b.is_zero() {
                let shift = QPoly::constant(-&b / lambda);
                normal_form = &normal_form - &QPoly::monomial(b, *d);
                witness = &witness + &shift;
            }
        }
    }
    Ok(if normal_form.is_zero() {
        Membership {
            member: true,
            witness: Some(witness),
        }
    } else {
        Membership {
            member: false,
            witness: None,
        }
    })
}

/// `D = c∂ + α/t` maps `tʲ⁺¹` to `(c(j+1)+α)tʲ`, so membership is decided
/// one degree at a time.
fn member_first_order(c: &Rational, alpha: &Rational, f: &QPoly) -> Membership {
    let mut h = vec![Rational::zero(); f.coeffs().len() + 1];
    for (j, fj) in f.coeffs().iter().enumerate() {
        if fj.is_zero() {
            continue;
        }
        let factor = c * usize_rat(j + 1) + alpha;
        if factor.is_zero() {
            return Membership {
                member: false,
                witness: None,
            };
        }
        h[j + 1] = fj / factor;
    }
    Membership {
        member: true,
        witness: Some(QPoly::from_rationals(h)),
    }
}

/// Constant term of the normal form of `f` under a monomial operator.
pub fn lzero(op: &OperatorSpec, f: &QPoly) -> Result<Rational> {
    if !matches!(op, OperatorSpec::Monomial { .. }) {
        return Err(Error::Unsupported(
            "the constant-term functional needs a monomial operator".into(),
        ));
    }
    Ok(reduce(op, f)?.normal_form.coeff(0))
}

pub fn im_structure(op: &OperatorSpec) -> Result<ImStructure> {
    let s_cap_im = match op {
        OperatorSpec::Monomial {
            alpha, lambda, d, ..
        } => {
            if lambda.is_zero() {
                SCapIm::NotApplicable
            } else if !alpha.is_zero() {
                SCapIm::Zero
            } else if *d >= 1 {
                SCapIm::SpanTd
            } else {
                SCapIm::All
            }
        }
        OperatorSpec::Jacobi { alpha, beta } => {
            check_jacobi(alpha, beta)?;
            if alpha.is_zero() || beta.is_zero() {
                SCapIm::All
            } else {
                SCapIm::Zero
            }
        }
    };
    let one_in_image = member(op, &QPoly::one())?.member;
    Ok(ImStructure {
        s_cap_im,
        one_in_image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_qpoly, rat};

    fn p(s: &str) -> QPoly {
        parse_qpoly(s).unwrap()
    }

    #[test]
    fn reduces_cube() {
        let op = OperatorSpec::standard(int(0), 1);
        let r = reduce(&op, &p("t^3")).unwrap();
        assert_eq!(r.normal_form, p("2t"));
        assert_eq!(r.witness, p("-t^2"));
        assert!(r.admissible);
    }

    #[test]
    fn hermite_second_moment() {
        let r = reduce(&OperatorSpec::hermite(), &p("t^2")).unwrap();
        assert_eq!(r.normal_form, QPoly::constant(rat(1, 2)));
    }

    #[test]
    fn low_degree_is_already_reduced() {
        let op = OperatorSpec::standard(int(1), 2);
        for j in 0..=2 {
            let r = reduce(&op, &QPoly::t_pow(j)).unwrap();
            assert_eq!(r.normal_form, QPoly::t_pow(j));
            assert!(r.witness.is_zero());
        }
    }

    #[test]
    fn zero_lambda_is_unsupported_for_reduce() {
        let op = OperatorSpec::monomial(int(1), int(0), int(0), 1);
        assert!(matches!(
            reduce(&op, &p("t")),
            Err(Error::UnsupportedReduction(_))
        ));
    }

    #[test]
    fn membership_examples() {
        let lag = OperatorSpec::laguerre(int(1));
        let m = member(&lag, &p("t - 2")).unwrap();
        assert!(m.member);
        assert_eq!(m.witness, Some(p("-t")));

        let op = OperatorSpec::standard(rat(1, 2), 1);
        assert_eq!(member(&op, &QPoly::one()).unwrap().witness, None);

        let degenerate = OperatorSpec::standard(int(-1), 1);
        let m = member(&degenerate, &p("t^2")).unwrap();
        assert_eq!(m.witness, Some(p("-t")));
    }

    #[test]
    fn td_is_an_image_when_alpha_vanishes() {
        let op = OperatorSpec::standard(int(0), 1);
        let m = member(&op, &QPoly::t()).unwrap();
        assert_eq!(m.witness, Some(QPoly::constant(int(-1))));
        assert!(!member(&op, &QPoly::one()).unwrap().member);
    }

    #[test]
    fn zero_lambda_membership() {
        // D = ∂ − 2/t kills degree 1 in the target: D(t²) = 0.
        let op = OperatorSpec::monomial(int(1), int(-2), int(0), 3);
        assert!(!member(&op, &p("t")).unwrap().member);
        let m = member(&op, &p("t^2 + 1")).unwrap();
        assert!(m.member);
        assert_eq!(op.apply(&m.witness.unwrap()).unwrap(), p("t^2 + 1"));
        // D = 0
        let zero = OperatorSpec::monomial(int(0), int(0), int(0), 0);
        assert!(!member(&zero, &QPoly::one()).unwrap().member);
        assert!(member(&zero, &QPoly::zero()).unwrap().member);
    }

    #[test]
    fn lzero_examples() {
        assert_eq!(
            lzero(&OperatorSpec::standard(int(0), 1), &p("t^4")).unwrap(),
            int(3)
        );
        assert_eq!(
            lzero(&OperatorSpec::laguerre(int(1)), &p("t^3")).unwrap(),
            int(24)
        );
        assert_eq!(
            lzero(&OperatorSpec::standard(rat(7, 3), 4), &QPoly::one()).unwrap(),
            int(1)
        );
        assert!(lzero(&OperatorSpec::jacobi(int(1), int(1)), &QPoly::one()).is_err());
    }

    #[test]
    fn structure_examples() {
        let s = im_structure(&OperatorSpec::laguerre(int(1))).unwrap();
        assert_eq!(
            s,
            ImStructure {
                s_cap_im: SCapIm::Zero,
                one_in_image: false
            }
        );
        let s = im_structure(&OperatorSpec::standard(int(0), 1)).unwrap();
        assert_eq!(s.s_cap_im, SCapIm::SpanTd);
        let j = OperatorSpec::jacobi(int(1), int(0));
        assert!(im_structure(&j).unwrap().one_in_image);
        let m = member(&j, &QPoly::one()).unwrap();
        assert_eq!(m.witness, Some(p("1/2*t - 1/2")));
        assert_eq!(j.apply(&p("t - 1")).unwrap(), QPoly::constant(int(2)));
    }

    #[test]
    fn jacobi_both_nonzero_has_constant_residue() {
        let j = OperatorSpec::jacobi(int(1), int(2));
        let r = reduce(&j, &p("t^5 - 3t + 2")).unwrap();
        assert!(r.normal_form.degree().unwrap_or(0) == 0);
        assert!(r.admissible);
        let back = &r.normal_form + &j.apply(&r.witness).unwrap();
        assert_eq!(back, p("t^5 - 3t + 2"));
        assert!(!im_structure(&j).unwrap().one_in_image);
    }

    #[test]
    fn jacobi_degenerate_diagonal() {
        let j = OperatorSpec::jacobi(int(-3), int(0));
        assert_eq!(
            reduce(&j, &QPoly::one()),
            Err(Error::DegenerateDiagonal { degree: 2 })
        );
        let both = OperatorSpec::jacobi(int(-2), int(-1));
        assert_eq!(
            im_structure(&both),
            Err(Error::DegenerateDiagonal { degree: 1 })
        );
    }
}
