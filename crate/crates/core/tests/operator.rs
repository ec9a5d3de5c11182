use mathieu_core::algebra::{int, rat, QPoly, Rational};
use mathieu_core::operator::{im_structure, lzero, member, reduce, OperatorSpec, SCapIm};
use proptest::prelude::*;

fn monomial_op() -> impl Strategy<Value = OperatorSpec> {
    (
        prop::sample::select(vec![int(1), int(2), rat(1, 2)]),
        prop::sample::select(vec![rat(-1, 2), int(0), int(1), rat(3, 2)]),
        prop::sample::select(vec![int(1), int(2), int(-1)]),
        0usize..=2,
    )
        .prop_map(|(c, alpha, lambda, d)| OperatorSpec::monomial(c, alpha, lambda, d))
}

fn jacobi_op() -> impl Strategy<Value = OperatorSpec> {
    let param = || prop::sample::select(vec![int(0), rat(1, 2), int(1), int(2)]);
    (param(), param()).prop_map(|(a, b)| OperatorSpec::jacobi(a, b))
}

fn poly(max_len: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 0..=max_len).prop_map(|c| QPoly::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn images_are_members(op in prop_oneof![monomial_op(), jacobi_op()], h in poly(6)) {
        prop_assume!(op.admits(&h));
        let f = op.apply(&h).unwrap();
        let m = member(&op, &f).unwrap();
        prop_assert!(m.member);
        let w = m.witness.expect("members carry a witness");
        prop_assert_eq!(op.apply(&w).unwrap(), f);
    }

    #[test]
    fn reduction_splits_off_an_image(op in monomial_op(), f in poly(8)) {
        let r = reduce(&op, &f).unwrap();
        let OperatorSpec::Monomial { d, .. } = &op else { unreachable!() };
        prop_assert!(r.normal_form.degree().is_none_or(|n| n <= *d));
        prop_assert!(r.admissible);
        prop_assert_eq!(&op.apply(&r.witness).unwrap() + &r.normal_form, f);
    }

    #[test]
    fn lzero_vanishes_on_images(op in monomial_op(), h in poly(6)) {
        let OperatorSpec::Monomial { d, alpha, .. } = &op else { unreachable!() };
        prop_assume!(!(*d == 0 && alpha == &Rational::from_integer(0.into())));
        prop_assume!(op.admits(&h));
        let f = op.apply(&h).unwrap();
        prop_assert_eq!(lzero(&op, &f).unwrap(), int(0));
    }

    #[test]
    fn membership_is_linear(op in prop_oneof![monomial_op(), jacobi_op()], f in poly(6), g in poly(6)) {
        let (mf, mg) = (member(&op, &f).unwrap(), member(&op, &g).unwrap());
        if mf.member && mg.member {
            prop_assert!(member(&op, &(&f + &g)).unwrap().member);
        }
        if mf.member && !mg.member {
            prop_assert!(!member(&op, &(&f + &g)).unwrap().member);
        }
    }
}

#[test]
fn jacobi_one_in_image_grid() {
    let values = [rat(-1, 2), int(0), rat(1, 2), int(1), int(2)];
    for a in &values {
        for b in &values {
            let s = im_structure(&OperatorSpec::jacobi(a.clone(), b.clone())).unwrap();
            let zero = int(0);
            assert_eq!(
                s.one_in_image,
                *a == zero || *b == zero,
                "alpha = {a}, beta = {b}"
            );
        }
    }
}

#[test]
fn structure_of_monomial_images() {
    let s = im_structure(&OperatorSpec::standard(int(0), 0)).unwrap();
    assert!(s.one_in_image);
    let s = im_structure(&OperatorSpec::standard(int(1), 1)).unwrap();
    assert!(!s.one_in_image);
    assert_ne!(s.s_cap_im, SCapIm::All);
}
