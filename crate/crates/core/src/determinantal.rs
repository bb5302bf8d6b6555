//! Schubert data: the lattice `Γ'(m×n; γ)`, its join-irreducibles and the
//! Gorenstein verdicts for the rings of `O(m)` and `SO(m)` invariants.
//!
//! `Γ'(m×n)` is the set of strictly increasing tuples `[c₁,…,c_r]` with
//! `1 ≤ r ≤ m` and entries in `1..=n`, ordered by
//! `[c₁,…,c_r] ≤ [d₁,…,d_s] ⟺ r ≥ s and c_i ≤ d_i for i ≤ s`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gorenstein::{gorenstein_criterion, WitnessReport};
use crate::lattice::DistributiveLattice;
use crate::poset::Poset;

/// A strictly increasing tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GammaTuple(Vec<usize>);

impl GammaTuple {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidTuple("empty tuple".into()));
        }
        if entries[0] == 0 {
            return Err(Error::InvalidTuple("entries start at 1".into()));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTuple(format!(
                "{} is not strictly increasing",
                fmt_entries(&entries)
            )));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// `size ≤ m` and entries at most `n`.
    pub fn fits(&self, m: usize, n: usize) -> bool {
        self.size() <= m && self.0.last().is_some_and(|&c| c <= n)
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.size() >= other.size() && other.0.iter().zip(&self.0).all(|(d, c)| c <= d)
    }

    pub fn lt(&self, other: &Self) -> bool {
        self != other && self.leq(other)
    }

    /// Least upper bound: the shorter size, componentwise maximum.
    pub fn join(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// Greatest lower bound: the longer size, componentwise minimum on the
    /// common prefix and the tail of the longer tuple.
    pub fn meet(&self, other: &Self) -> Self {
        let (long, short) = if self.size() >= other.size() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out: Vec<usize> = short.0.iter().zip(&long.0).map(|(&a, &b)| a.min(b)).collect();
        out.extend_from_slice(&long.0[short.size()..]);
        Self(out)
    }

    fn prefix(&self, t: usize) -> Self {
        Self(self.0[..t].to_vec())
    }
}

fn fmt_entries(entries: &[usize]) -> String {
    let parts: Vec<String> = entries.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

impl fmt::Display for GammaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_entries(&self.0))
    }
}

/// Parses `2,6,7` or `[2,6,7]`.
impl FromStr for GammaTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let entries = inner
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidTuple(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

/// All tuples of `Γ'(m×n)` that are `≥ gamma`, by size then lexicographically.
pub fn gamma_prime_elements(m: usize, n: usize, gamma: &GammaTuple) -> Vec<GammaTuple> {
    let mut out = Vec::new();
    for r in 1..=m.min(gamma.size()) {
        let mut current = Vec::with_capacity(r);
        extend_tuples(&mut current, r, n, gamma.entries(), &mut out);
    }
    out
}

fn extend_tuples(
    current: &mut Vec<usize>,
    r: usize,
    n: usize,
    lower: &[usize],
    out: &mut Vec<GammaTuple>,
) {
    let i = current.len();
    if i == r {
        out.push(GammaTuple(current.clone()));
        return;
    }
    let start = lower[i].max(current.last().map_or(1, |&c| c + 1));
    // leave room for the remaining entries
    let end = n + 1 + i - r;
    for c in start..=end {
        current.push(c);
        extend_tuples(current, r, n, lower, out);
        current.pop();
    }
}

/// The orthogonal or special orthogonal group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Group {
    O,
    SO,
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O" | "o" => Ok(Group::O),
            "SO" | "so" => Ok(Group::SO),
            _ => Err(Error::Input(format!("unknown group {s:?}, expected O or SO"))),
        }
    }
}

/// Blocks of consecutive entries of `γ` and the gaps between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// `u(1) < ⋯ < u(k)`: the indices with `b_u + 1 < b_{u+1}`.
    pub u: Vec<usize>,
    /// `B₁, …, B_{k+1}`.
    pub blocks: Vec<Vec<usize>>,
    /// `χ₀, …, χ_k`.
    pub gaps: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn k(&self) -> usize {
        self.u.len()
    }

    /// `|B_i|` with 1-based `i`.
    pub fn block_len(&self, i: usize) -> usize {
        self.blocks[i - 1].len()
    }

    /// `|χ_i|` with 0-based `i`.
    pub fn gap_len(&self, i: usize) -> usize {
        self.gaps[i].len()
    }
}

/// A join-irreducible of `Γ'(m×n; γ)` with its `ξ` value (`None` for `γ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducible {
    pub tuple: GammaTuple,
    pub xi: Option<(i64, i64)>,
}

/// Outcome of comparing a block verdict with the general criterion.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub group: Group,
    pub verdict: bool,
    pub report: WitnessReport,
}

/// `(m, n, γ)` with `γ ∈ Γ(m×n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schubert {
    m: usize,
    n: usize,
    gamma: GammaTuple,
}

impl Schubert {
    pub fn new(m: usize, n: usize, gamma: GammaTuple) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::InvalidTuple(format!("need 1 ≤ m ≤ n, got m={m}, n={n}")));
        }
        if gamma.size() != m || !gamma.fits(m, n) {
            return Err(Error::InvalidTuple(format!("{gamma} is not in Γ({m}×{n})")));
        }
        Ok(Self { m, n, gamma })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gamma(&self) -> &GammaTuple {
        &self.gamma
    }

    fn b(&self, i: usize) -> usize {
        if i == self.m + 1 {
            self.n + 1
        } else {
            self.gamma.0[i - 1]
        }
    }

    /// Elements of `Γ'(m×n; γ)`.
    pub fn elements(&self) -> Vec<GammaTuple> {
        gamma_prime_elements(self.m, self.n, &self.gamma)
    }

    /// `Γ'(m×n; γ)` as a validated distributive lattice. Builds full
    /// join/meet tables, so only suitable for small instances.
    pub fn lattice(&self) -> Result<DistributiveLattice> {
        let elems = self.elements();
        let labels: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
        let poset = Poset::from_relation(&labels, |i, j| elems[i].leq(&elems[j]))?;
        let position = |t: GammaTuple| {
            elems
                .binary_search_by(|e| (e.size(), e).cmp(&(t.size(), &t)))
                .expect("Γ' is closed under ∨ and ∧")
        };
        DistributiveLattice::with_operations(
            poset,
            |i, j| position(elems[i].join(&elems[j])),
            |i, j| position(elems[i].meet(&elems[j])),
        )
    }

    /// Join-irreducibles read off from the shape of each tuple, each with
    /// its `ξ` value.
    pub fn join_irreducibles(&self) -> Vec<Irreducible> {
        self.elements()
            .into_iter()
            .filter_map(|d| {
                if d == self.gamma {
                    return Some(Irreducible { tuple: d, xi: None });
                }
                self.xi(&d).map(|xi| Irreducible {
                    tuple: d,
                    xi: Some(xi),
                })
            })
            .collect()
    }

    /// `ξ(δ)` if `δ ≠ γ` is join-irreducible.
    pub fn xi(&self, d: &GammaTuple) -> Option<(i64, i64)> {
        let (m, n) = (self.m as i64, self.n as i64);
        let t = d.size();
        let e = d.entries();
        if t == self.m {
            let mut found = None;
            for i in 1..=t {
                let prev = if i == 1 { 0 } else { e[i - 2] };
                if e[i - 1] > self.b(i) && e[i - 1] > prev + 1 {
                    if found.is_some() {
                        return None;
                    }
                    found = Some(i);
                }
            }
            let i = found?;
            return Some((n - e[i - 1] as i64 - m + i as i64, i as i64 - 1));
        }
        if *d == self.gamma.prefix(t) {
            return Some((t as i64 - m, t as i64));
        }
        let i = (1..=t).find(|&i| e[i - 1] != self.b(i))?;
        let tail_is_top = (i..=t).all(|j| e[j - 1] == self.n + j - t);
        tail_is_top.then_some((t as i64 - m, i as i64 - 1))
    }

    /// Join-irreducibles by definition: `δ` is irreducible iff it is the
    /// minimum or the join of everything strictly below it is smaller.
    pub fn join_irreducibles_by_joins(&self) -> Vec<GammaTuple> {
        let elems = self.elements();
        elems
            .iter()
            .filter(|d| {
                if **d == self.gamma {
                    return true;
                }
                let below = elems
                    .iter()
                    .filter(|c| c.lt(d))
                    .fold(None::<GammaTuple>, |acc, c| {
                        Some(acc.map_or_else(|| c.clone(), |a| a.join(c)))
                    });
                below.is_some_and(|j| j != **d)
            })
            .cloned()
            .collect()
    }

    /// The poset `P` of join-irreducibles, labelled like `[2,6,7]`.
    pub fn irreducible_poset(&self) -> Result<Poset> {
        tuple_poset(&self.join_irreducibles().into_iter().map(|j| j.tuple).collect::<Vec<_>>())
    }

    /// `P ∖ {γ}`, whose Hasse diagram the `ξ` coordinates organise.
    pub fn hasse_without_minimum(&self) -> Result<Poset> {
        let tuples: Vec<GammaTuple> = self
            .join_irreducibles()
            .into_iter()
            .filter(|j| j.xi.is_some())
            .map(|j| j.tuple)
            .collect();
        tuple_poset(&tuples)
    }

    /// `Q₁ = {[b₁,…,b_i] | i = 1..m}` for `O`, `Q₂` (up to `m − 1`) for `SO`.
    pub fn q(&self, group: Group) -> Vec<GammaTuple> {
        let top = match group {
            Group::O => self.m,
            Group::SO => self.m - 1,
        };
        (1..=top).map(|i| self.gamma.prefix(i)).collect()
    }

    pub fn block_decomposition(&self) -> BlockDecomposition {
        let m = self.m;
        let u: Vec<usize> = (1..=m).filter(|&u| self.b(u) + 1 < self.b(u + 1)).collect();
        let range = |lo: usize, hi: usize| (lo..=hi).collect::<Vec<usize>>();
        let mut gaps = vec![range(1, self.b(1) - 1)];
        let mut blocks = Vec::new();
        let mut start = 1;
        for &ui in &u {
            blocks.push((start..=ui).map(|j| self.b(j)).collect());
            gaps.push(range(self.b(ui) + 1, self.b(ui + 1) - 1));
            start = ui + 1;
        }
        blocks.push((start..=m).map(|j| self.b(j)).collect());
        BlockDecomposition { u, blocks, gaps }
    }

    /// Gorenstein verdict from the block sizes.
    ///
    /// When `k = 0`, i.e. `γ = [n−m+1, …, n]`, the verdict is `true` for
    /// both groups.
    pub fn verdict(&self, group: Group) -> bool {
        let bd = self.block_decomposition();
        let k = bd.k();
        if k == 0 {
            return true;
        }
        let matched = |hi: usize| (2..=hi).all(|i| bd.block_len(i) == bd.gap_len(i - 1));
        let full_column = self.b(self.m) == self.n;
        match (group, full_column) {
            (Group::O, false) => matched(k) && bd.gap_len(k) % 2 == 1,
            (Group::O, true) => matched(k) && bd.block_len(k + 1) + 1 == bd.gap_len(k),
            (Group::SO, false) => matched(k),
            (Group::SO, true) => matched(k + 1),
        }
    }

    /// The `SO` condition for `b_m = n` written as
    /// `|B_i| = |χ_{i−1}|` for `i = 2..k` and `|B_{k+1}| = |χ_k|`.
    pub fn verdict_so_by_blocks(&self) -> bool {
        let bd = self.block_decomposition();
        let k = bd.k();
        if k == 0 {
            return true;
        }
        let matched = (2..=k).all(|i| bd.block_len(i) == bd.gap_len(i - 1));
        if self.b(self.m) == self.n {
            matched && bd.block_len(k + 1) == bd.gap_len(k)
        } else {
            matched
        }
    }

    /// Runs the general criterion on `(P, Q₁)` or `(P, Q₂)` and compares it
    /// with [`Schubert::verdict`].
    pub fn cross_check(&self, group: Group) -> Result<CrossCheck> {
        let p = self.irreducible_poset()?;
        let q_labels: Vec<String> = self.q(group).iter().map(|t| t.to_string()).collect();
        let q = p.indices_of(&q_labels)?;
        let report = gorenstein_criterion(&p, &q)?;
        let verdict = self.verdict(group);
        if report.gorenstein != verdict {
            return Err(Error::Internal(format!(
                "block verdict {verdict} disagrees with criterion {} for m={}, n={}, γ={}, {group:?}",
                report.gorenstein, self.m, self.n, self.gamma
            )));
        }
        Ok(CrossCheck {
            group,
            verdict,
            report,
        })
    }
}

fn tuple_poset(tuples: &[GammaTuple]) -> Result<Poset> {
    let labels: Vec<String> = tuples.iter().map(|t| t.to_string()).collect();
    Poset::from_relation(&labels, |i, j| tuples[i].leq(&tuples[j]))
}

/// All `γ ∈ Γ(m×n)`.
pub fn all_gammas(m: usize, n: usize) -> Vec<GammaTuple> {
    let ones = GammaTuple((1..=m).collect());
    gamma_prime_elements(m, n, &ones)
        .into_iter()
        .filter(|t| t.size() == m)
        .collect()
}

/// A pair `(α, β)` of tuples of equal size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DosetPair {
    pub alpha: GammaTuple,
    pub beta: GammaTuple,
}

impl DosetPair {
    pub fn new(alpha: GammaTuple, beta: GammaTuple) -> Result<Self> {
        if alpha.size() != beta.size() {
            return Err(Error::InvalidTuple(format!(
                "({alpha}, {beta}) has tuples of different sizes"
            )));
        }
        Ok(Self { alpha, beta })
    }

    /// Lexicographic: `α < α'`, or `α = α'` and `β ≤ β'`.
    pub fn leq(&self, other: &Self) -> bool {
        self.alpha.lt(&other.alpha) || (self.alpha == other.alpha && self.beta.leq(&other.beta))
    }
}

/// An element of `D'_{m,n} = D_{m−1,n} ∪ Γ(m×n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DosetElement {
    Pair(DosetPair),
    Minor(GammaTuple),
}

impl DosetElement {
    /// The order of `D'_{m,n}`: pairs lexicographically, maximal minors as in
    /// `Γ'`, and `δ < (α, β)` iff `δ < α`.
    pub fn leq(&self, other: &Self) -> bool {
        match (self, other) {
            (DosetElement::Pair(a), DosetElement::Pair(b)) => a.leq(b),
            (DosetElement::Minor(d), DosetElement::Minor(e)) => d.leq(e),
            (DosetElement::Minor(d), DosetElement::Pair(p)) => d.lt(&p.alpha),
            (DosetElement::Pair(_), DosetElement::Minor(_)) => false,
        }
    }
}

/// The doset sets of pairs used for symmetric and Schubert-type rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Doset {
    /// `D_{m,n}`: equal-size pairs from `Γ'(m×n)`.
    Square { m: usize, n: usize },
    /// `D'_{m,n} = D_{m−1,n} ∪ Γ(m×n)`.
    Prime { m: usize, n: usize },
    /// `D_γ`: pairs of `D_{n,n}` with both tuples `≥ γ`.
    Gamma { n: usize, gamma: GammaTuple },
}

impl Doset {
    pub fn contains(&self, element: &DosetElement) -> bool {
        match (self, element) {
            (Doset::Square { m, n }, DosetElement::Pair(p)) => {
                p.alpha.fits(*m, *n) && p.beta.fits(*m, *n)
            }
            (Doset::Prime { m, n }, DosetElement::Pair(p)) => {
                p.alpha.fits(*m - 1, *n) && p.beta.fits(*m - 1, *n)
            }
            (Doset::Prime { m, n }, DosetElement::Minor(d)) => d.size() == *m && d.fits(*m, *n),
            (Doset::Gamma { n, gamma }, DosetElement::Pair(p)) => {
                p.alpha.fits(*n, *n)
                    && p.beta.fits(*n, *n)
                    && gamma.leq(&p.alpha)
                    && gamma.leq(&p.beta)
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> GammaTuple {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(t("[2,6,7]").to_string(), "[2,6,7]");
        assert_eq!(t("2, 6,7"), t("[2,6,7]"));
        assert!("3,2".parse::<GammaTuple>().is_err());
        assert!("0,2".parse::<GammaTuple>().is_err());
        assert!("".parse::<GammaTuple>().is_err());
        assert!("a".parse::<GammaTuple>().is_err());
    }

    #[test]
    fn order_examples() {
        assert!(t("1,2").leq(&t("1")));
        assert!(!t("2,3").leq(&t("1,4")));
        assert!(!t("1,4").leq(&t("2,3")));
        assert_eq!(t("1,4").join(&t("2,3")), t("2,4"));
        assert_eq!(t("1,4").meet(&t("2,3")), t("1,3"));
        assert_eq!(t("1").meet(&t("1,2")), t("1,2"));
        assert_eq!(t("1").join(&t("1,2")), t("1"));
        let d = t("2,5");
        assert_eq!(d.join(&d), d);
    }

    #[test]
    fn small_gamma_prime() {
        let s = Schubert::new(1, 2, t("1")).unwrap();
        assert_eq!(s.elements(), vec![t("1"), t("2")]);
        let s = Schubert::new(2, 3, t("1,2")).unwrap();
        let mut elems = s.elements();
        elems.sort();
        let mut expected = vec![t("1,2"), t("1,3"), t("2,3"), t("1"), t("2"), t("3")];
        expected.sort();
        assert_eq!(elems, expected);
        let lattice = s.lattice().unwrap();
        assert_eq!(lattice.len(), 6);
        assert_eq!(lattice.label(lattice.bottom()), "[1,2]");
        assert!(Schubert::new(2, 3, t("1")).is_err());
        assert!(Schubert::new(2, 3, t("1,4")).is_err());
        assert!(Schubert::new(3, 2, t("1,2")).is_err());
    }

    #[test]
    fn block_examples() {
        let s = Schubert::new(7, 15, t("2,6,7,8,10,13,14")).unwrap();
        let bd = s.block_decomposition();
        assert_eq!(bd.u, vec![1, 4, 5, 7]);
        assert_eq!(bd.gaps, vec![vec![1], vec![3, 4, 5], vec![9], vec![11, 12], vec![15]]);
        assert_eq!(
            bd.blocks,
            vec![vec![2], vec![6, 7, 8], vec![10], vec![13, 14], vec![]]
        );
        let s = Schubert::new(7, 14, t("2,6,7,8,10,13,14")).unwrap();
        let bd = s.block_decomposition();
        assert_eq!(bd.k(), 3);
        assert_eq!(bd.blocks[3], vec![13, 14]);
        assert_eq!(bd.gaps[3], vec![11, 12]);
        let s = Schubert::new(3, 5, t("1,2,3")).unwrap();
        let bd = s.block_decomposition();
        assert_eq!(bd.u, vec![3]);
        assert_eq!(bd.blocks, vec![vec![1, 2, 3], vec![]]);
        assert_eq!(bd.gaps, vec![vec![], vec![4, 5]]);
    }

    #[test]
    fn verdict_examples() {
        let big = Schubert::new(7, 15, t("2,6,7,8,10,13,14")).unwrap();
        assert!(big.verdict(Group::O));
        assert!(big.verdict(Group::SO));
        let full = Schubert::new(7, 14, t("2,6,7,8,10,13,14")).unwrap();
        assert!(!full.verdict(Group::O));
        assert!(full.verdict(Group::SO));
        assert!(Schubert::new(1, 2, t("1")).unwrap().verdict(Group::O));
        let corner = Schubert::new(1, 4, t("4")).unwrap();
        assert_eq!(corner.block_decomposition().k(), 0);
        assert!(corner.verdict(Group::SO));
    }

    #[test]
    fn minimal_irreducibles() {
        let s = Schubert::new(7, 15, t("2,6,7,8,10,13,14")).unwrap();
        let p = s.hasse_without_minimum().unwrap();
        let mins: Vec<&str> = p.minimal_elements().into_iter().map(|x| p.label(x)).collect();
        assert!(mins.contains(&"[2,6,7,8,10,13,15]"));
        let s = Schubert::new(7, 14, t("2,6,7,8,10,13,14")).unwrap();
        let p = s.hasse_without_minimum().unwrap();
        let mins: Vec<&str> = p.minimal_elements().into_iter().map(|x| p.label(x)).collect();
        assert!(mins.contains(&"[2,6,7,8,10,13]"));
    }

    #[test]
    fn doset_examples() {
        let pair = |a: &str, b: &str| DosetPair::new(t(a), t(b)).unwrap();
        assert!(Doset::Square { m: 1, n: 3 }.contains(&DosetElement::Pair(pair("1", "1"))));
        assert!(pair("1,2", "1,3").leq(&pair("1,2", "2,3")));
        assert!(!pair("1,2", "2,3").leq(&pair("1,2", "1,3")));
        let d_gamma = Doset::Gamma {
            n: 3,
            gamma: t("1,2"),
        };
        assert!(d_gamma.contains(&DosetElement::Pair(pair("1", "2"))));
        assert!(DosetPair::new(t("1"), t("1,2")).is_err());
        let prime = Doset::Prime { m: 2, n: 3 };
        assert!(prime.contains(&DosetElement::Minor(t("1,3"))));
        assert!(!prime.contains(&DosetElement::Pair(pair("1,2", "1,2"))));
        let minor = DosetElement::Minor(t("1,3"));
        assert!(minor.leq(&DosetElement::Pair(pair("2", "3"))));
        assert!(!DosetElement::Minor(t("2,3")).leq(&DosetElement::Pair(pair("1", "3"))));
        assert!(!DosetElement::Pair(pair("2", "3")).leq(&minor));
    }
}
