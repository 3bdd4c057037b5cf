//! Specific algebras with known invariants.

mod common;

use common::Naive;
use whopf::constructors::*;
use whopf::document::DynamicalDocument;
use whopf::error::Error;
use whopf::grouplikes::*;
use whopf::integrals::*;
use whopf::scalar::Scalar;
use whopf::semisimplicity::*;
use whopf::twisting::*;
use whopf::zoo;

#[test]
fn cyclic_three_dynamical_twist() {
    let d = zoo::cyclic_dynamical_data(3).unwrap();
    let r = dynamical_cosemisimplicity_check(&d).unwrap();
    assert!(r.passed(), "{:?}", r);
    assert_eq!(r.dim, 27);
    assert_eq!((r.source_base_dim, r.target_base_dim), (3, 3));
    assert!(r.blocks.iter().all(|b| b.degree == 3));
    let dt = dynamical_theta(&d).unwrap();
    let h = twist(&dt.host, &dt.twist).unwrap();
    assert_eq!(Naive::new(&h).trace_s2(), Scalar::int(27));
}

#[test]
fn dynamical_documents_round_trip() {
    let d = zoo::sign_bicharacter_data();
    let doc = DynamicalDocument::from_data(&d);
    let back = DynamicalDocument::parse(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(back.to_data(&d.u).unwrap(), d);
}

#[test]
fn broken_dynamical_equation_is_reported() {
    let mut d = zoo::cyclic_dynamical_data(2).unwrap();
    let u = d.u.clone();
    // normalized and invertible, but not a solution
    let half = Scalar::ratio(1, 2);
    let p1 = vec![half.clone(), -half];
    let pp = u.tensor(&p1, &p1);
    d.j[1] = d.j[1]
        .iter()
        .zip(&pp)
        .map(|(a, b)| a - &(&Scalar::int(3) * b))
        .collect();
    let r = check_dynamical_data(&d);
    assert!(matches!(r, Err(Error::DynamicalEquationViolated { .. })), "{:?}", r);
}

#[test]
fn pair_groupoid_is_connected_not_biconnected() {
    let h = matrix_wha(2);
    let c = connectedness(&h);
    assert!(c.connected && !c.biconnected);
    assert!(!connectedness(&h.dualize()).connected);
    let r = semisimplicity_report(&h).unwrap();
    assert!(r.semisimple && r.cosemisimple && r.passed());
}

#[test]
fn sweedler_is_frobenius_but_not_semisimple() {
    let h = sweedler();
    let pair = dual_pair(&h).unwrap();
    let t = trace_s2(&h, &pair).unwrap();
    assert_eq!(t.direct, Naive::new(&h).trace_s2());
    assert_eq!(t.formula, Scalar::zero());
    assert!(!is_semisimple(&h) && !is_semisimple(&h.dualize()));
    let dp = distinguished_pair(&h, &pair).unwrap();
    assert!(radford_check(&h, &dp).unwrap().passed);
}

#[test]
fn monoid_has_no_nondegenerate_integral() {
    let h = idempotent_monoid_bialgebra();
    assert!(matches!(find_nondegenerate_integral(&h), Err(Error::NotFrobenius(_))));
}

#[test]
fn minimal_with_g_has_fractional_trace() {
    let h = zoo::min_m2_g();
    assert!(!h.is_regular().unwrap());
    let pair = dual_pair(&h).unwrap();
    let t = trace_s2(&h, &pair).unwrap();
    assert_eq!(t.formula, Scalar::ratio(16, 9));
    assert_eq!(t.direct, Naive::new(&h).trace_s2());
    assert!(matches!(distinguished_pair(&h, &pair), Err(Error::RegularityViolated)));
}

#[test]
fn swap_grouplike_is_not_inner_by_a_trivial_one() {
    let h = matrix_wha(2);
    let mut swap = h.zero();
    swap[h.index_of("m12").unwrap()] = Scalar::one();
    swap[h.index_of("m21").unwrap()] = Scalar::one();
    assert!(is_grouplike(&h, &swap));
    assert!(check_grouplike_counitals(&h, &swap).unwrap());
    assert_eq!(is_trivial_grouplike(&h, &swap).unwrap(), None);
    assert!(!coset_equal(&h, &swap, h.unit()).unwrap());
    assert!(coset_equal(&h, &swap, &swap).unwrap());
}

#[test]
fn coinciding_bases_on_group_and_groupoid_algebras() {
    for h in [zoo::group_s3(), matrix_wha(3), zoo::groupoid_z2_z2()] {
        assert!(coinciding_bases_theorem_check(&h).unwrap().passed());
    }
    assert!(matches!(
        coinciding_bases_theorem_check(&sweedler()),
        Err(Error::PreconditionUnmet(_))
    ));
}

#[test]
fn primitive_idempotents_of_a_commutative_base() {
    let h = matrix_wha(3);
    let hs = h.source_base();
    let ps = primitive_idempotents(&h, &hs).unwrap();
    assert_eq!(ps.len(), 3);
    let o = Naive::new(&h);
    let mut sum = h.zero();
    for (i, p) in ps.iter().enumerate() {
        assert_eq!(o.mul(p, p), *p);
        for q in &ps[i + 1..] {
            assert!(o.mul(p, q).iter().all(|c| c.is_zero()));
        }
        sum = o.add(&sum, p);
    }
    assert_eq!(sum, *h.unit());
}
