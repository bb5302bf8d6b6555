//! Enumeration of small posets up to isomorphism.
//!
//! Every poset on `n + 1` elements arises from one on `n` elements by adding
//! a new maximal element on top of some order ideal, so the catalog is grown
//! one element at a time and deduplicated by a canonical form.

use std::collections::HashSet;

use crate::lattice::DistributiveLattice;
use crate::poset::Poset;

/// All posets with exactly `n` elements, one per isomorphism class,
/// labelled `x0, x1, …` along a linear extension.
pub fn posets_of_size(n: usize) -> Vec<Poset> {
    let mut level: Vec<Relation> = vec![Relation::new(0)];
    for _ in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for rel in &level {
            for ideal in rel.to_poset().order_ideals() {
                let grown = rel.with_top(&ideal);
                if seen.insert(grown.canonical_form()) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level.iter().map(Relation::to_poset).collect()
}

/// All posets with at most `n` elements (including the empty poset).
pub fn posets_up_to(n: usize) -> Vec<Poset> {
    (0..=n).flat_map(posets_of_size).collect()
}

/// Posets with at most `n` elements that have a unique minimal element.
pub fn posets_with_minimum_up_to(n: usize) -> Vec<Poset> {
    posets_up_to(n)
        .into_iter()
        .filter(|p| p.unique_minimal().is_some())
        .collect()
}

/// Every distributive lattice with at most `size` elements, up to
/// isomorphism, built as the non-empty order ideals of a poset with a unique
/// minimal element.
pub fn distributive_lattices_up_to(size: usize) -> Vec<DistributiveLattice> {
    let mut out = Vec::new();
    if size == 0 {
        return out;
    }
    let mut level = vec![Relation::new(1)];
    while !level.is_empty() {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for rel in &level {
            let poset = rel.to_poset();
            out.push(DistributiveLattice::from_ideals(&poset).expect("rooted poset"));
            let ideals: Vec<Vec<usize>> = poset
                .order_ideals()
                .into_iter()
                .filter(|i| !i.is_empty())
                .collect();
            for ideal in &ideals {
                let grown = rel.with_top(ideal);
                if grown.to_poset().order_ideals().len() - 1 <= size
                    && seen.insert(grown.canonical_form())
                {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    out
}

/// Naturally labelled strict order: `below[j]` is the bitmask of `i < j`.
#[derive(Clone)]
struct Relation {
    below: Vec<u32>,
}

impl Relation {
    fn new(n: usize) -> Self {
        Self { below: vec![0; n] }
    }

    fn with_top(&self, ideal: &[usize]) -> Self {
        let mask = ideal.iter().fold(0u32, |m, &i| m | (1 << i));
        let mut below = self.below.clone();
        below.push(mask);
        Self { below }
    }

    fn to_poset(&self) -> Poset {
        let labels: Vec<String> = (0..self.below.len()).map(|i| format!("x{i}")).collect();
        Poset::from_relation(&labels, |i, j| i == j || self.below[j] & (1 << i) != 0)
            .expect("relation is a strict order by construction")
    }

    /// Smallest relation bitmask over all relabellings.
    fn canonical_form(&self) -> u64 {
        let n = self.below.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        permute(&mut perm, 0, &mut |p| {
            let mut code = 0u64;
            for j in 0..n {
                for i in 0..n {
                    code <<= 1;
                    if self.below[p[j]] & (1 << p[i]) != 0 {
                        code |= 1;
                    }
                }
            }
            best = best.min(code);
        });
        best
    }
}

fn permute(perm: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // unlabeled posets: 1, 1, 2, 5, 16, 63
        let counts: Vec<usize> = (0..=5).map(|n| posets_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn small_distributive_lattices() {
        // distributive lattices on n elements: 1, 1, 1, 2, 3, 5, 8, 15
        let mut counts = [0usize; 9];
        for l in distributive_lattices_up_to(8) {
            counts[l.len()] += 1;
        }
        assert_eq!(counts, [0, 1, 1, 1, 2, 3, 5, 8, 15]);
    }

    #[test]
    fn rooted_posets_are_posets_one_smaller() {
        let rooted = posets_of_size(5)
            .into_iter()
            .filter(|p| p.unique_minimal().is_some())
            .count();
        assert_eq!(rooted, 16);
    }
}
