use std::collections::BTreeMap;

use doset_hibi::determinantal::{all_gammas, GammaTuple, Group, Schubert};

fn schubert(m: usize, n: usize, gamma: &str) -> Schubert {
    Schubert::new(m, n, gamma.parse().unwrap()).unwrap()
}

fn desk_scale() -> impl Iterator<Item = Schubert> {
    (1..=3).flat_map(|m| {
        (m..=6).flat_map(move |n| {
            all_gammas(m, n)
                .into_iter()
                .map(move |g| Schubert::new(m, n, g).unwrap())
        })
    })
}

/// (upper covers, lower covers) → number of elements.
fn degree_profile(p: &doset_hibi::Poset) -> BTreeMap<(usize, usize), usize> {
    let mut profile = BTreeMap::new();
    for x in 0..p.len() {
        *profile
            .entry((p.upper_covers(x).len(), p.lower_covers(x).len()))
            .or_insert(0) += 1;
    }
    profile
}

#[test]
fn lub_and_glb_by_exhaustive_comparison() {
    let s = schubert(2, 4, "1,2");
    let elems = s.elements();
    for a in &elems {
        for b in &elems {
            let upper: Vec<&GammaTuple> = elems.iter().filter(|c| a.leq(c) && b.leq(c)).collect();
            let lub = upper.iter().find(|c| upper.iter().all(|d| c.leq(d))).unwrap();
            assert_eq!(&a.join(b), *lub);
            let lower: Vec<&GammaTuple> = elems.iter().filter(|c| c.leq(a) && c.leq(b)).collect();
            let glb = lower.iter().find(|c| lower.iter().all(|d| d.leq(c))).unwrap();
            assert_eq!(&a.meet(b), *glb);
        }
    }
}

#[test]
fn characterization_matches_lattice_irreducibles() {
    for s in desk_scale() {
        let lattice = s.lattice().unwrap();
        assert_eq!(lattice.label(lattice.bottom()), s.gamma().to_string());
        let mut generic: Vec<String> = lattice
            .join_irreducibles()
            .iter()
            .map(|&a| lattice.label(a).to_string())
            .collect();
        let mut by_shape: Vec<String> = s
            .join_irreducibles()
            .iter()
            .map(|j| j.tuple.to_string())
            .collect();
        generic.sort();
        by_shape.sort();
        assert_eq!(generic, by_shape, "m={} n={} γ={}", s.m(), s.n(), s.gamma());
    }
}

#[test]
fn xi_reverses_the_order() {
    for s in desk_scale() {
        let irr: Vec<_> = s.join_irreducibles().into_iter().filter(|j| j.xi.is_some()).collect();
        for a in &irr {
            for b in &irr {
                if a.tuple.lt(&b.tuple) {
                    let (xa, xb) = (a.xi.unwrap(), b.xi.unwrap());
                    assert!(xa.0 >= xb.0 && xa.1 >= xb.1);
                }
            }
        }
    }
}

#[test]
fn q_sets_are_chains() {
    for s in desk_scale() {
        let p = s.irreducible_poset().unwrap();
        for group in [Group::O, Group::SO] {
            let labels: Vec<String> = s.q(group).iter().map(|t| t.to_string()).collect();
            let q = p.indices_of(&labels).unwrap();
            assert!(q.iter().all(|&a| q.iter().all(|&b| p.comparable(a, b))));
        }
        let q1 = s.q(Group::O);
        assert!(q1.contains(s.gamma()));
        if s.m() > 1 {
            let q2 = s.q(Group::SO);
            let bottom = q2.iter().find(|a| q2.iter().all(|b| a.leq(b))).unwrap();
            assert_eq!(bottom.entries(), &s.gamma().entries()[..s.m() - 1]);
        }
    }
}

#[test]
fn block_verdicts_agree_with_criterion() {
    let mut checked = 0;
    for s in desk_scale() {
        for group in [Group::O, Group::SO] {
            s.cross_check(group).unwrap();
            checked += 1;
        }
        assert_eq!(s.verdict(Group::SO), s.verdict_so_by_blocks());
    }
    assert!(checked > 100);
}

#[test]
fn large_examples_match_the_figures() {
    // element counts, cover counts and (upper, lower) cover degrees read off
    // the two Hasse diagrams of P ∖ {γ}
    let cases = [
        (15, 51, 82, vec![((0, 2), 1), ((1, 0), 1), ((1, 1), 8), ((1, 2), 9), ((2, 0), 3), ((2, 1), 4), ((2, 2), 25)]),
        (14, 44, 69, vec![((0, 2), 1), ((1, 0), 2), ((1, 1), 7), ((1, 2), 8), ((2, 0), 2), ((2, 1), 4), ((2, 2), 20)]),
    ];
    for (n, elements, covers, profile) in cases {
        let s = schubert(7, n, "2,6,7,8,10,13,14");
        let hasse = s.hasse_without_minimum().unwrap();
        assert_eq!(hasse.len(), elements);
        assert_eq!(hasse.covers().len(), covers);
        assert_eq!(degree_profile(&hasse), profile.into_iter().collect());
    }
}

#[test]
fn large_examples_birkhoff_count() {
    for (n, count) in [(15, 3938), (14, 2047)] {
        let s = schubert(7, n, "2,6,7,8,10,13,14");
        assert_eq!(s.elements().len(), count);
        let p = s.irreducible_poset().unwrap();
        let nonempty = p.order_ideals().into_iter().filter(|i| !i.is_empty()).count();
        assert_eq!(nonempty, count);
    }
}

#[test]
fn large_examples_cross_check() {
    let s = schubert(7, 15, "2,6,7,8,10,13,14");
    assert!(s.cross_check(Group::O).unwrap().verdict);
    assert!(s.cross_check(Group::SO).unwrap().verdict);
    let s = schubert(7, 14, "2,6,7,8,10,13,14");
    let o = s.cross_check(Group::O).unwrap();
    assert!(!o.verdict);
    assert!(o.report.witness.is_some());
    assert!(s.cross_check(Group::SO).unwrap().verdict);
}

#[test]
fn degenerate_square_case() {
    for m in 1..=4 {
        let s = schubert(m, m, &(1..=m).map(|i| i.to_string()).collect::<Vec<_>>().join(","));
        assert_eq!(s.elements().len(), (1 << m) - 1);
        s.cross_check(Group::O).unwrap();
        s.cross_check(Group::SO).unwrap();
    }
}
