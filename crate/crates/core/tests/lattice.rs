mod common;

use common::{meet_failure_pair, surjective_homs};
use doset_hibi::catalog::{distributive_lattices_up_to, posets_with_minimum_up_to};
use doset_hibi::{DistributiveLattice, Error, LatticeHom, Poset};

#[test]
fn lattice_laws_on_the_corpus() {
    for h in distributive_lattices_up_to(8) {
        let n = h.len();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(h.join(a, h.meet(a, b)), a);
                assert_eq!(h.meet(a, h.join(a, b)), a);
                assert_eq!(h.le(a, b), h.join(a, b) == b);
                for c in 0..n {
                    assert_eq!(h.meet(a, h.join(b, c)), h.join(h.meet(a, b), h.meet(a, c)));
                }
            }
        }
        assert_eq!(h.join_irreducibles_by_definition(), h.join_irreducibles());
    }
}

#[test]
fn ideal_lattice_sizes() {
    // J(P) ∖ {∅} for a root below an antichain of k elements has 2^k elements
    for k in 0..5 {
        let labels: Vec<String> = std::iter::once("r".to_string())
            .chain((0..k).map(|i| format!("a{i}")))
            .collect();
        let rels: Vec<(String, String)> = (0..k).map(|i| ("r".into(), format!("a{i}"))).collect();
        let p = Poset::new(&labels, &rels).unwrap();
        assert_eq!(DistributiveLattice::from_ideals(&p).unwrap().len(), 1 << k);
    }
}

#[test]
fn join_irreducibles_recover_the_poset() {
    for p in posets_with_minimum_up_to(5) {
        let h = DistributiveLattice::from_ideals(&p).unwrap();
        let irr = h.irreducible_poset();
        for x in p.labels() {
            for y in p.labels() {
                assert_eq!(p.leq(x, y).unwrap(), irr.leq(x, y).unwrap());
            }
        }
    }
}

#[test]
fn non_rooted_posets_do_not_give_lattices() {
    let p = Poset::antichain(2, "a");
    assert!(DistributiveLattice::from_ideals(&p).is_err());
}

#[test]
fn json_round_trip() {
    let (h, _) = meet_failure_pair();
    let back = DistributiveLattice::from_json(&h.to_json()).unwrap();
    assert_eq!(back.len(), h.len());
    assert_eq!(back.join_irreducibles(), h.join_irreducibles());
}

#[test]
fn phi_star_does_not_preserve_meets() {
    let (h, l) = meet_failure_pair();
    let map = vec![0, 0, 1, 2, 3];
    let phi = LatticeHom::new(&h, &l, map).unwrap();
    let (b2, b3) = (l.index_of("b2").unwrap(), l.index_of("b3").unwrap());
    assert_eq!(h.label(phi.phi_star(l.meet(b2, b3))), "-inf");
    assert_eq!(h.label(h.meet(phi.phi_star(b2), phi.phi_star(b3))), "a1");
    // φ* still preserves joins
    assert_eq!(phi.phi_star(l.join(b2, b3)), h.join(phi.phi_star(b2), phi.phi_star(b3)));
}

#[test]
fn adjoint_laws_on_small_homs() {
    let corpus = distributive_lattices_up_to(6);
    let mut count = 0;
    for h in &corpus {
        for l in &corpus {
            for map in surjective_homs(h, l) {
                let phi = LatticeHom::new(h, l, map).unwrap();
                assert_eq!(phi.check_adjoint_laws(), Ok(()));
                let q = phi.restrict_to_q().unwrap();
                let x0 = h.irreducible_poset().unique_minimal().unwrap();
                assert!(q.contains(&x0));
                count += 1;
            }
        }
    }
    assert!(count > 50);
}

#[test]
fn one_point_and_identity_homs() {
    let (h, _) = meet_failure_pair();
    let one = DistributiveLattice::new(Poset::chain(1, "pt")).unwrap();
    let phi = LatticeHom::new(&h, &one, vec![0; h.len()]).unwrap();
    let x0 = h.irreducible_poset().unique_minimal().unwrap();
    assert_eq!(phi.restrict_to_q().unwrap(), vec![x0]);
    let id = LatticeHom::identity(&h);
    assert_eq!(id.restrict_to_q().unwrap().len(), h.irreducible_poset().len());
}

#[test]
fn hom_validation() {
    let (h, l) = meet_failure_pair();
    assert!(matches!(LatticeHom::new(&h, &l, vec![0; 4]), Err(Error::InvalidHom(_))));
    assert!(matches!(LatticeHom::new(&h, &l, vec![0, 0, 1, 2, 9]), Err(Error::IndexOutOfRange(9))));
}

#[test]
fn birkhoff_rejects_non_ideals() {
    let (h, _) = meet_failure_pair();
    assert_eq!(h.psi(&[]), Err(Error::NotAnIdeal));
    let a2 = h.irreducible_poset().index_of("a2").unwrap();
    assert_eq!(h.psi(&[a2]), Err(Error::NotAnIdeal));
}
