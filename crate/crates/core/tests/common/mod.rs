#![allow(dead_code)]

use doset_hibi::{DistributiveLattice, Poset};

/// `x0 ⋖ x1 ⋖ x2 ⋖ x3` and `x0 ⋖ x4`.
pub fn fork() -> Poset {
    Poset::new(
        &["x0", "x1", "x2", "x3", "x4"],
        &[("x0", "x1"), ("x1", "x2"), ("x2", "x3"), ("x0", "x4")],
    )
    .unwrap()
}

/// `x0` below a chain `a1 ⋖ … ⋖ a5` and a chain `b1 ⋖ b2`.
pub fn long_fork() -> Poset {
    Poset::new(
        &["x0", "a1", "a2", "a3", "a4", "a5", "b1", "b2"],
        &[
            ("x0", "a1"),
            ("a1", "a2"),
            ("a2", "a3"),
            ("a3", "a4"),
            ("a4", "a5"),
            ("x0", "b1"),
            ("b1", "b2"),
        ],
    )
    .unwrap()
}

pub fn indices(p: &Poset, labels: &[&str]) -> Vec<usize> {
    p.indices_of(labels).unwrap()
}

/// Every surjective lattice homomorphism `source → target`, as index maps.
pub fn surjective_homs(source: &DistributiveLattice, target: &DistributiveLattice) -> Vec<Vec<usize>> {
    fn extend(
        h: &DistributiveLattice,
        l: &DistributiveLattice,
        map: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let a = map.len();
        if a == h.len() {
            let mut hit = vec![false; l.len()];
            map.iter().for_each(|&b| hit[b] = true);
            if hit.iter().all(|&x| x) {
                out.push(map.clone());
            }
            return;
        }
        for b in 0..l.len() {
            map.push(b);
            let consistent = (0..=a).all(|x| {
                (0..=a).all(|y| {
                    let (j, m) = (h.join(x, y), h.meet(x, y));
                    (j > a || map[j] == l.join(map[x], map[y]))
                        && (m > a || map[m] == l.meet(map[x], map[y]))
                })
            });
            if consistent {
                extend(h, l, map, out);
            }
            map.pop();
        }
    }
    let mut out = Vec::new();
    extend(source, target, &mut Vec::new(), &mut out);
    out
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
}

/// `-inf ⋖ a1 ⋖ {a2, a3} ⋖ a4` and the square `b1 ⋖ {b2, b3} ⋖ b4`.
pub fn meet_failure_pair() -> (DistributiveLattice, DistributiveLattice) {
    let h = Poset::new(
        &["-inf", "a1", "a2", "a3", "a4"],
        &[("-inf", "a1"), ("a1", "a2"), ("a1", "a3"), ("a2", "a4"), ("a3", "a4")],
    )
    .unwrap();
    let l = Poset::new(
        &["b1", "b2", "b3", "b4"],
        &[("b1", "b2"), ("b1", "b3"), ("b2", "b4"), ("b3", "b4")],
    )
    .unwrap();
    (
        DistributiveLattice::new(h).unwrap(),
        DistributiveLattice::new(l).unwrap(),
    )
}
