//! Property tests over randomly parametrized constructions.

mod common;

use common::Naive;
use proptest::prelude::*;
use whopf::constructors::*;
use whopf::document::WhaDocument;
use whopf::integrals::{dual_pair, is_semisimple};
use whopf::linalg::Matrix;
use whopf::scalar::{FieldSpec, Scalar};
use whopf::semisimplicity::trace_s2;
use whopf::twisting::{deform_q, regularize, twist, Twist};
use whopf::validate::validate;
use whopf::wha::WeakHopfAlgebra;

fn cyclotomic(order: u32, coeffs: &[(i64, i64)]) -> Scalar {
    let z = Scalar::zeta(order);
    coeffs
        .iter()
        .enumerate()
        .fold(Scalar::zero(), |acc, (k, &(p, q))| acc + Scalar::ratio(p, q) * z.pow(k as i64))
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=5), 1..6)
}

fn groupoid(orders: &[usize], pairs: usize) -> Groupoid {
    let mut g = Groupoid::pair(pairs);
    for &n in orders {
        g = Groupoid::disjoint_union(&g, &Groupoid::from_group(&FiniteGroup::cyclic(n)));
    }
    g
}

fn minimal_diag(a: i64, b: i64) -> WeakHopfAlgebra {
    let g = Matrix::diagonal(&[Scalar::int(a), Scalar::int(b)]);
    minimal_wha(&SemisimplePresentation::trivial(vec![2]).with_g(vec![g]))
        .unwrap()
        .algebra
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cyclotomic_field_laws(n in prop::sample::select(vec![3u32, 4, 5, 8, 12]),
                             a in coeffs(), b in coeffs(), c in coeffs()) {
        let (a, b, c) = (cyclotomic(n, &a), cyclotomic(n, &b), cyclotomic(n, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        let field = FieldSpec::cyclotomic(n).unwrap();
        prop_assert_eq!(Scalar::parse(&a.to_string(), field).unwrap(), a);
    }

    #[test]
    fn groupoid_algebras_are_valid(orders in prop::collection::vec(1usize..4, 0..3), pairs in 1usize..3) {
        let g = groupoid(&orders, pairs);
        let h = groupoid_algebra(&g, FieldSpec::Rational);
        prop_assert!(validate(&h).passed());
        prop_assert!(validate(&h.dualize()).passed());
        prop_assert_eq!(h.dualize().dualize(), h.clone());
        prop_assert_eq!(function_algebra(&g, FieldSpec::Rational), h.dualize());
    }

    #[test]
    fn documents_round_trip(orders in prop::collection::vec(1usize..4, 0..3), pairs in 1usize..3, dual: bool) {
        let mut h = groupoid_algebra(&groupoid(&orders, pairs), FieldSpec::Rational);
        if dual {
            h = h.dualize();
        }
        let text = WhaDocument::from_algebra(&h, "g").to_json();
        let back = WhaDocument::parse(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back.to_algebra().unwrap(), h);
    }

    // S² = id on groupoid algebras, so the formula must return the dimension
    #[test]
    fn trace_of_s2_is_dim_for_groupoids(orders in prop::collection::vec(1usize..4, 0..3), pairs in 1usize..3) {
        let h = groupoid_algebra(&groupoid(&orders, pairs), FieldSpec::Rational);
        let pair = dual_pair(&h).unwrap();
        let t = trace_s2(&h, &pair).unwrap();
        prop_assert_eq!(&t.formula, &Scalar::int(h.dim() as i64));
        prop_assert_eq!(t.direct, t.formula);
    }

    #[test]
    fn maschke_matches_trace_form(orders in prop::collection::vec(1usize..4, 1..3), dual: bool) {
        let mut h = groupoid_algebra(&groupoid(&orders, 1), FieldSpec::Rational);
        if dual {
            h = h.dualize();
        }
        let oracle = Naive::new(&h).trace_form_rank() == h.dim();
        prop_assert_eq!(is_semisimple(&h), oracle);
    }

    // the trace of g on the block must equal its size
    #[test]
    fn regularize_is_idempotent_and_invertible(a in prop::sample::select(vec![-3i64, -1, 1, 3, 4, 5])) {
        let h = minimal_diag(a, 2 - a);
        let reg = regularize(&h).unwrap();
        prop_assert!(reg.algebra.is_regular().unwrap());
        prop_assert!(validate(&reg.algebra).passed());
        let again = regularize(&reg.algebra).unwrap();
        prop_assert_eq!(&again.algebra, &reg.algebra);
        let q_inv = reg.algebra.invert_element(&reg.q).unwrap();
        prop_assert_eq!(deform_q(&reg.algebra, &q_inv).unwrap(), h);
    }

    #[test]
    fn trivial_twist_is_identity(n in 1usize..5) {
        let h = group_algebra(&FiniteGroup::cyclic(n), FieldSpec::Rational);
        prop_assert_eq!(twist(&h, &Twist::trivial(&h)).unwrap(), h.clone());
        let m = matrix_wha(n.min(3));
        prop_assert_eq!(twist(&m, &Twist::trivial(&m)).unwrap(), m);
    }
}

#[test]
fn oracle_rejects_sweedler_semisimplicity() {
    let h = sweedler();
    assert!(Naive::new(&h).axioms().is_ok());
    assert!(Naive::new(&h).trace_form_rank() < h.dim());
    assert!(!is_semisimple(&h));
}

#[test]
fn oracle_catches_a_corrupted_counit() {
    let h = whopf::zoo::corrupt_counit(&matrix_wha(2));
    assert!(Naive::new(&h).axioms().is_err());
    assert!(!validate(&h).passed());
}
