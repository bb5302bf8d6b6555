//! Finite posets.
//!
//! A [`Poset`] stores opaque string labels together with the full order
//! relation and its cover relation. Elements are addressed by index
//! (`0..len`) in the hot paths; label-based accessors exist for I/O.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::ExponentVector;

/// A finite partially ordered set.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `le[i][j]` iff element `i` ≤ element `j`.
    le: Vec<Vec<bool>>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    /// A linear extension: every element appears after everything below it.
    linear: Vec<usize>,
}

/// JSON form: `{"elements": [...], "covers": [[x, y], ...]}` with `x < y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl Poset {
    /// Builds a poset from labels and a generating set of strict relations
    /// `(x, y)` meaning `x < y`. The relations need not be covers; the cover
    /// relation is the transitive reduction of their closure.
    pub fn new<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = index_labels(&labels)?;
        let n = labels.len();
        let mut above = vec![Vec::new(); n];
        for (x, y) in relations {
            let (x, y) = (x.as_ref(), y.as_ref());
            let i = *index
                .get(x)
                .ok_or_else(|| Error::UnknownElement(x.to_owned()))?;
            let j = *index
                .get(y)
                .ok_or_else(|| Error::UnknownElement(y.to_owned()))?;
            if i == j {
                return Err(Error::Cycle(x.to_owned(), y.to_owned()));
            }
            above[i].push(j);
        }
        let mut le = vec![vec![false; n]; n];
        for (start, row) in le.iter_mut().enumerate() {
            let mut stack = vec![start];
            row[start] = true;
            while let Some(v) = stack.pop() {
                for &w in &above[v] {
                    if !row[w] {
                        row[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if le[i][j] && le[j][i] {
                    return Err(Error::Cycle(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        Ok(Self::from_closure(labels, index, le))
    }

    /// Builds a poset from labels and an order predicate `le(i, j)`.
    ///
    /// The predicate is checked to be a partial order.
    pub fn from_relation<S: AsRef<str>>(
        elements: &[S],
        le: impl Fn(usize, usize) -> bool,
    ) -> Result<Self> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = index_labels(&labels)?;
        let n = labels.len();
        let table: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| le(i, j)).collect()).collect();
        for i in 0..n {
            if !table[i][i] {
                return Err(Error::Precondition(format!(
                    "relation is not reflexive at `{}`",
                    labels[i]
                )));
            }
            for j in 0..n {
                if i != j && table[i][j] && table[j][i] {
                    return Err(Error::Cycle(labels[i].clone(), labels[j].clone()));
                }
                if !table[i][j] {
                    continue;
                }
                for k in 0..n {
                    if table[j][k] && !table[i][k] {
                        return Err(Error::Precondition(format!(
                            "relation is not transitive at `{}` < `{}` < `{}`",
                            labels[i], labels[j], labels[k]
                        )));
                    }
                }
            }
        }
        Ok(Self::from_closure(labels, index, table))
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        Self::new(&json.elements, &json.covers)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels.clone(),
            covers: self
                .covers()
                .into_iter()
                .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
                .collect(),
        }
    }

    /// A chain `0 < 1 < ... < n-1` labelled by `prefix{i}`.
    pub fn chain(n: usize, prefix: &str) -> Self {
        let labels: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Self::from_relation(&labels, |i, j| i <= j).expect("a chain is a poset")
    }

    /// An antichain of `n` elements labelled by `prefix{i}`.
    pub fn antichain(n: usize, prefix: &str) -> Self {
        let labels: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Self::from_relation(&labels, |i, j| i == j).expect("an antichain is a poset")
    }

    fn from_closure(labels: Vec<String>, index: HashMap<String, usize>, le: Vec<Vec<bool>>) -> Self {
        let n = labels.len();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if i == j || !le[i][j] {
                    continue;
                }
                let between = (0..n).any(|k| k != i && k != j && le[i][k] && le[k][j]);
                if !between {
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
        }
        // Kahn's algorithm; ties broken by index so the extension is stable.
        let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut ready: Vec<usize> = (0..n).rev().filter(|&i| indegree[i] == 0).collect();
        let mut linear = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            linear.push(v);
            for &w in upper[v].iter().rev() {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        debug_assert_eq!(linear.len(), n);
        Self {
            labels,
            index,
            le,
            upper,
            lower,
            linear,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_owned()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    /// `x ≤ y`, by label.
    pub fn leq(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.le(self.index_of(x)?, self.index_of(y)?))
    }

    /// `i ≤ j`, by index.
    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.le[i][j] || self.le[j][i]
    }

    /// `i ⋖ j`.
    pub fn covers_pair(&self, i: usize, j: usize) -> bool {
        self.upper[i].contains(&j)
    }

    /// All cover pairs `(i, j)` with `i ⋖ j`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .upper
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| (i, j)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Elements in an order compatible with `≤` (smaller elements first).
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.lower[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.upper[i].is_empty()).collect()
    }

    pub fn unique_minimal(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn unique_maximal(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// Length of the longest chain (number of elements minus one).
    pub fn rank(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyPoset);
        }
        Ok(self
            .chain_lengths_to_top()
            .into_iter()
            .map(|(_, longest)| longest)
            .max()
            .unwrap_or(0))
    }

    /// Whether every maximal chain has length `rank`.
    pub fn is_pure(&self) -> Result<bool> {
        Ok(self.short_maximal_chain()?.is_none())
    }

    /// A maximal chain of length strictly less than the rank, if one exists.
    pub fn short_maximal_chain(&self) -> Result<Option<Vec<usize>>> {
        let rank = self.rank()?;
        let lengths = self.chain_lengths_to_top();
        let start = self
            .minimal_elements()
            .into_iter()
            .find(|&x| lengths[x].0 < rank);
        let Some(mut x) = start else {
            return Ok(None);
        };
        let mut chain = vec![x];
        while let Some(&next) = self.upper[x]
            .iter()
            .find(|&&y| lengths[y].0 + 1 == lengths[x].0)
        {
            chain.push(next);
            x = next;
        }
        Ok(Some(chain))
    }

    /// For every element, the (shortest, longest) length of a cover path up
    /// to a maximal element.
    fn chain_lengths_to_top(&self) -> Vec<(usize, usize)> {
        let mut lengths = vec![(0, 0); self.len()];
        for &x in self.linear.iter().rev() {
            if self.upper[x].is_empty() {
                continue;
            }
            let shortest = self.upper[x].iter().map(|&y| lengths[y].0).min().unwrap();
            let longest = self.upper[x].iter().map(|&y| lengths[y].1).max().unwrap();
            lengths[x] = (shortest + 1, longest + 1);
        }
        lengths
    }

    /// The induced subposet `[x, y] = {z | x ≤ z ≤ y}`.
    pub fn interval(&self, x: usize, y: usize) -> Result<Poset> {
        if !self.le(x, y) {
            return Err(Error::NotBelow(self.labels[x].clone(), self.labels[y].clone()));
        }
        let members: Vec<usize> = (0..self.len())
            .filter(|&z| self.le(x, z) && self.le(z, y))
            .collect();
        Ok(self.induced(&members))
    }

    /// Rank of `[x, y]` without materialising the interval.
    pub fn interval_rank(&self, x: usize, y: usize) -> Result<usize> {
        if !self.le(x, y) {
            return Err(Error::NotBelow(self.labels[x].clone(), self.labels[y].clone()));
        }
        // longest[z] = longest chain from x to z inside the interval
        let mut longest: Vec<Option<usize>> = vec![None; self.len()];
        longest[x] = Some(0);
        for &z in &self.linear {
            let Some(lz) = longest[z] else { continue };
            for &w in &self.upper[z] {
                if self.le(w, y) {
                    longest[w] = Some(longest[w].map_or(lz + 1, |lw| lw.max(lz + 1)));
                }
            }
        }
        Ok(longest[y].expect("y is reachable from x"))
    }

    /// The induced subposet on `members`, keeping their labels and order.
    pub fn induced(&self, members: &[usize]) -> Poset {
        let labels: Vec<String> = members.iter().map(|&i| self.labels[i].clone()).collect();
        let index = labels.iter().cloned().zip(0..).collect();
        let le = members
            .iter()
            .map(|&i| members.iter().map(|&j| self.le(i, j)).collect())
            .collect();
        Self::from_closure(labels, index, le)
    }

    pub fn is_down_closed(&self, subset: &[usize]) -> bool {
        let mut inside = vec![false; self.len()];
        for &i in subset {
            if i >= self.len() {
                return false;
            }
            inside[i] = true;
        }
        subset
            .iter()
            .all(|&i| self.lower[i].iter().all(|&j| inside[j]))
    }

    /// The principal order ideal `{y | y ≤ x}`.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.le(y, x)).collect()
    }

    /// All order ideals, including the empty one. Each ideal is sorted.
    pub fn order_ideals(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut inside = vec![false; self.len()];
        self.ideals_rec(0, &mut inside, &mut out);
        out
    }

    fn ideals_rec(&self, pos: usize, inside: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if pos == self.linear.len() {
            out.push((0..self.len()).filter(|&i| inside[i]).collect());
            return;
        }
        let x = self.linear[pos];
        self.ideals_rec(pos + 1, inside, out);
        if self.lower[x].iter().all(|&y| inside[y]) {
            inside[x] = true;
            self.ideals_rec(pos + 1, inside, out);
            inside[x] = false;
        }
    }

    /// All order-reversing maps `P → {0, …, bound}`.
    pub fn order_reversing_maps(&self, bound: u64) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        MapSearch::new(self, false, bound).visit(|v| out.push(ExponentVector::new(v.to_vec())));
        out
    }

    /// All strictly order-reversing maps `P → {1, …, bound}`.
    pub fn strictly_order_reversing_maps(&self, bound: u64) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        MapSearch::new(self, true, bound).visit(|v| out.push(ExponentVector::new(v.to_vec())));
        out
    }

    /// `x ≤ y ⇒ ν(x) ≥ ν(y)`.
    pub fn is_order_reversing(&self, nu: &ExponentVector) -> bool {
        nu.len() == self.len()
            && self
                .covers()
                .into_iter()
                .all(|(x, y)| nu[x] >= nu[y])
    }

    /// `x < y ⇒ ν(x) > ν(y)` and `ν > 0` everywhere.
    pub fn is_strictly_order_reversing(&self, nu: &ExponentVector) -> bool {
        nu.len() == self.len()
            && nu.values().iter().all(|&v| v > 0)
            && self.covers().into_iter().all(|(x, y)| nu[x] > nu[y])
    }

    /// Graphviz rendering of the Hasse diagram, covers drawn upwards.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", escape(name));
        let _ = writeln!(s, "  rankdir=BT;");
        let _ = writeln!(s, "  node [shape=circle];");
        for (i, label) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", escape(label));
        }
        for (i, j) in self.covers() {
            let _ = writeln!(s, "  n{i} -> n{j};");
        }
        s.push_str("}\n");
        s
    }
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Depth-first enumeration of (strictly) order-reversing maps inside a box,
/// optionally forcing even values on a subset.
pub(crate) struct MapSearch<'a> {
    poset: &'a Poset,
    strict: bool,
    lo: Vec<u64>,
    hi: Vec<u64>,
    even: Vec<bool>,
}

impl<'a> MapSearch<'a> {
    pub(crate) fn new(poset: &'a Poset, strict: bool, bound: u64) -> Self {
        let n = poset.len();
        Self {
            poset,
            strict,
            lo: vec![0; n],
            hi: vec![bound; n],
            even: vec![false; n],
        }
    }

    pub(crate) fn even_on(mut self, mask: &[bool]) -> Self {
        self.even = mask.to_vec();
        self
    }

    pub(crate) fn fix(mut self, x: usize, value: u64) -> Self {
        self.lo[x] = value;
        self.hi[x] = value;
        self
    }

    pub(crate) fn visit(&self, mut f: impl FnMut(&[u64])) {
        let mut values = vec![0u64; self.poset.len()];
        self.rec(self.poset.len(), &mut values, &mut f);
    }

    fn rec(&self, remaining: usize, values: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if remaining == 0 {
            f(values);
            return;
        }
        // maximal elements first
        let x = self.poset.linear[remaining - 1];
        let step = u64::from(self.strict);
        let floor = self.poset.upper[x]
            .iter()
            .map(|&y| values[y] + step)
            .max()
            .unwrap_or(step)
            .max(self.lo[x]);
        let mut v = floor;
        if self.even[x] && v % 2 == 1 {
            v += 1;
        }
        let stride = if self.even[x] { 2 } else { 1 };
        while v <= self.hi[x] {
            values[x] = v;
            self.rec(remaining - 1, values, f);
            v += stride;
        }
    }
}
