mod common;

use common::{fork, indices, long_fork, subsets};
use doset_hibi::catalog::posets_with_minimum_up_to;
use doset_hibi::gorenstein::{
    canonical_members_in_box, canonical_minimal_elements, gorenstein_criterion, gorenstein_oracle,
    nu0, witness_from_cases, Failure, PTilde, WitnessCase,
};
use doset_hibi::{ExponentVector, Poset};

#[test]
fn fork_with_three_q_points_is_gorenstein() {
    let p = fork();
    let q = indices(&p, &["x0", "x2", "x4"]);
    let tilde = PTilde::new(&p, &q).unwrap();
    assert_eq!(tilde.midpoints().len(), 2);
    assert!(tilde.extended().is_pure().unwrap());
    assert_eq!(tilde.extended().rank().unwrap(), 4);
    let report = gorenstein_criterion(&p, &q).unwrap();
    assert!(report.gorenstein);
    assert!(report.witness.is_none());
    assert!(gorenstein_oracle(&p, &q).unwrap());
}

#[test]
fn fork_with_two_q_points_is_impure() {
    let p = fork();
    let q = indices(&p, &["x0", "x2"]);
    let tilde = PTilde::new(&p, &q).unwrap();
    assert!(tilde.midpoints().is_empty());
    assert!(!tilde.extended().is_pure().unwrap());
    let report = gorenstein_criterion(&p, &q).unwrap();
    assert!(!report.gorenstein);
    assert!(matches!(report.failure, Some(Failure::Impure { .. })));
    // ν₀ worked out by hand: x3=1, x2=2, x1=3, x4=1, x0=4
    assert_eq!(report.nu0, ExponentVector::new(vec![4, 3, 2, 1, 1]));
    assert_eq!(
        report.case,
        Some(WitnessCase::Case3 { x: 0, x_prime: 4 })
    );
    assert!(!gorenstein_oracle(&p, &q).unwrap());
    let minimal = canonical_minimal_elements(&p, &q, 6).unwrap();
    assert!(minimal.len() >= 2);
    assert!(minimal.contains(&report.nu0));
    assert!(minimal.contains(report.witness.as_ref().unwrap()));
}

#[test]
fn long_fork_has_an_odd_interval() {
    let p = long_fork();
    let q = indices(&p, &["x0", "a3", "b1", "b2"]);
    let tilde = PTilde::new(&p, &q).unwrap();
    assert_eq!(tilde.midpoints().len(), 3);
    let ext = tilde.extended();
    assert!(ext.is_pure().unwrap());
    let (x0, a3) = (ext.index_of("x0").unwrap(), ext.index_of("a3").unwrap());
    assert_eq!(ext.interval_rank(x0, a3).unwrap(), 3);
    let report = gorenstein_criterion(&p, &q).unwrap();
    assert!(!report.gorenstein);
    assert!(matches!(report.failure, Some(Failure::OddInterval { rank: 3, .. })));
    assert!(!gorenstein_oracle(&p, &q).unwrap());
}

#[test]
fn nu0_hand_computation_on_three_chain() {
    let p = Poset::chain(3, "x");
    assert_eq!(nu0(&p, &[0, 2]).unwrap(), ExponentVector::new(vec![4, 3, 2]));
    let minimal = canonical_minimal_elements(&p, &[0, 2], 8).unwrap();
    assert!(minimal.contains(&ExponentVector::new(vec![4, 3, 2])));
    assert_eq!(minimal.len() == 1, gorenstein_criterion(&p, &[0, 2]).unwrap().gorenstein);
}

#[test]
fn chain_without_q_is_gorenstein() {
    let p = Poset::chain(3, "x");
    assert!(gorenstein_criterion(&p, &[]).unwrap().gorenstein);
    assert!(gorenstein_oracle(&p, &[]).unwrap());
}

#[test]
fn case1_instance() {
    // y ⋖ y' and a chain of length 5 from y, Q = {y, y'}
    let p = Poset::new(
        &["y", "y'", "a", "b", "c", "d", "e"],
        &[("y", "y'"), ("y", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
    )
    .unwrap();
    let q = indices(&p, &["y", "y'"]);
    let n0 = nu0(&p, &q).unwrap();
    assert_eq!((n0[0], n0[1]), (6, 2));
    let case = WitnessCase::Case1 { y: 0, y_prime: 1 };
    let nu = witness_from_cases(&p, &q, case).unwrap();
    assert_eq!(nu[1], n0[1] + 2);
    assert_eq!(nu[0], n0[0]);
    assert_eq!(gorenstein_criterion(&p, &q).unwrap().case, Some(case));
}

#[test]
fn case2_instance() {
    // x ⋖ x' and a chain of length 3 from x, Q = ∅
    let p = Poset::new(
        &["x0", "x", "x'", "a", "b", "c"],
        &[("x0", "x"), ("x", "x'"), ("x", "a"), ("a", "b"), ("b", "c")],
    )
    .unwrap();
    let case = WitnessCase::Case2 { x: 1, x_prime: 2 };
    let nu = witness_from_cases(&p, &[], case).unwrap();
    let n0 = nu0(&p, &[]).unwrap();
    assert_eq!(nu[1], n0[1] + 1);
    assert_eq!(nu[2], n0[2] + 2);
    assert_eq!(gorenstein_criterion(&p, &[]).unwrap().case, Some(case));
}

#[test]
fn case3_instance() {
    let p = fork();
    let q = indices(&p, &["x0", "x2"]);
    let nu = witness_from_cases(&p, &q, WitnessCase::Case3 { x: 0, x_prime: 4 }).unwrap();
    assert_eq!(nu, ExponentVector::new(vec![4, 3, 2, 1, 2]));
}

#[test]
fn every_member_dominates_nu0() {
    for p in posets_with_minimum_up_to(4) {
        for q in subsets(p.len()) {
            let n0 = nu0(&p, &q).unwrap();
            let members = canonical_members_in_box(&p, &q, n0.max_value() + 2).unwrap();
            assert!(members.contains(&n0));
            assert!(members.iter().all(|nu| n0.dominated_by(nu)));
        }
    }
}

#[test]
fn criterion_agrees_with_oracle_up_to_five_elements() {
    let mut cases = 0;
    for p in posets_with_minimum_up_to(5) {
        for q in subsets(p.len()) {
            let report = gorenstein_criterion(&p, &q).unwrap();
            assert_eq!(report.gorenstein, gorenstein_oracle(&p, &q).unwrap());
            cases += 1;
        }
    }
    assert!(cases > 100);
}
