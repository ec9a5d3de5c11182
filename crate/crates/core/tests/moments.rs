use mathieu_core::algebra::{int, rat, QPoly, Rational};
use mathieu_core::moments::{
    equivalence_check, inner_product, matched_operator, normalized_moment, orthopoly, vb_member,
    WeightSpec,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Moments from integration by parts against each weight, kept apart from
/// the closed forms used by the library.
fn recursive_moments(w: &WeightSpec, n: usize) -> Vec<Rational> {
    let mut mu = vec![Rational::one()];
    for k in 1..=n {
        let kr = Rational::from_integer((k as i64).into());
        let next = match w {
            WeightSpec::Hermite => {
                if k == 1 {
                    Rational::zero()
                } else {
                    (kr - Rational::one()) / int(2) * &mu[k - 2]
                }
            }
            WeightSpec::Laguerre { alpha } => (kr + alpha) * &mu[k - 1],
            WeightSpec::Jacobi { alpha, beta } => {
                // (k + 1 + α + β) μ_k = (β − α) μ_{k−1} + (k − 1) μ_{k−2}
                let prev2 = if k >= 2 {
                    mu[k - 2].clone()
                } else {
                    Rational::zero()
                };
                ((beta - alpha) * &mu[k - 1] + (kr.clone() - Rational::one()) * prev2)
                    / (kr + Rational::one() + alpha + beta)
            }
            WeightSpec::Atomic { points, weights } => {
                let total: Rational = weights.iter().sum();
                points
                    .iter()
                    .zip(weights)
                    .map(|(p, w)| w * num_traits::pow::pow(p.clone(), k))
                    .sum::<Rational>()
                    / total
            }
        };
        mu.push(next);
    }
    mu
}

fn weights() -> Vec<WeightSpec> {
    vec![
        WeightSpec::Hermite,
        WeightSpec::laguerre(int(0)).unwrap(),
        WeightSpec::laguerre(rat(1, 2)).unwrap(),
        WeightSpec::jacobi(int(0), int(0)).unwrap(),
        WeightSpec::jacobi(int(1), int(2)).unwrap(),
        WeightSpec::jacobi(rat(1, 2), rat(-1, 2)).unwrap(),
        WeightSpec::atomic(
            vec![int(0), int(1), int(3)],
            vec![int(1), int(2), rat(1, 2)],
        )
        .unwrap(),
    ]
}

#[test]
fn moments_follow_recursions() {
    for w in weights() {
        let expected = recursive_moments(&w, 16);
        for (n, mu) in expected.iter().enumerate() {
            assert_eq!(&normalized_moment(&w, n).unwrap(), mu, "{w}, n = {n}");
        }
    }
}

#[test]
fn orthogonal_polynomials_are_orthogonal() {
    for w in weights() {
        let max = if matches!(w, WeightSpec::Atomic { .. }) {
            2
        } else {
            6
        };
        let ps: Vec<QPoly> = (0..=max).map(|n| orthopoly(&w, n).unwrap()).collect();
        for (i, p) in ps.iter().enumerate() {
            assert_eq!(p.degree(), Some(i));
            assert!(p.leading().unwrap().is_one());
            for q in &ps[..i] {
                assert!(
                    inner_product(&w, p, q).unwrap().is_zero(),
                    "{w}: degrees {i}"
                );
            }
        }
    }
}

#[test]
fn atomic_measures_run_out_of_orthogonal_polynomials() {
    let w = WeightSpec::atomic(vec![int(0), int(1)], vec![int(1), int(1)]).unwrap();
    assert!(orthopoly(&w, 2).is_err());
}

#[test]
fn classical_pairs_have_no_disagreements() {
    for w in weights()
        .into_iter()
        .filter(|w| !matches!(w, WeightSpec::Atomic { .. }))
    {
        let op = matched_operator(&w).unwrap();
        let report = equivalence_check(&w, &op, 10).unwrap();
        assert!(
            report.disagreements.is_empty(),
            "{w}: {:?}",
            report.disagreements
        );
    }
}

proptest! {
    #[test]
    fn vanishing_integral_is_linear(c in prop::collection::vec(-5i64..=5, 1..=6), k in -3i64..=3) {
        let w = WeightSpec::jacobi(int(1), int(2)).unwrap();
        let f = QPoly::from_ints(&c);
        let mut moments = recursive_moments(&w, c.len());
        moments.truncate(c.len());
        let integral: Rational = f.coeffs().iter().zip(&moments).map(|(a, m)| a * m).sum();
        prop_assert_eq!(vb_member(&w, &f).unwrap(), integral.is_zero());
        let shifted = &f - &QPoly::constant(integral);
        prop_assert!(vb_member(&w, &shifted).unwrap());
        prop_assert!(vb_member(&w, &shifted.scale(&int(k))).unwrap());
    }
}
