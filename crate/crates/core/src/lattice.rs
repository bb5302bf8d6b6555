//! Finite distributive lattices and Birkhoff duality.
//!
//! A lattice `H` is stored as its underlying [`Poset`] plus precomputed
//! join/meet tables. The join-irreducible elements (the minimum included)
//! form the poset `P`, and `Φ(α) = {x ∈ P | x ≤ α}`, `Ψ(I) = ⋁ I` are the
//! mutually inverse isomorphisms `H ≅ J(P) ∖ {∅}`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poset::{Poset, PosetJson};

#[derive(Clone, Debug)]
pub struct DistributiveLattice {
    poset: Poset,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    /// `P` as indices of `H`, in `H`-index order.
    irreducibles: Vec<usize>,
    /// Position of each `H` element inside `P`, if join-irreducible.
    irreducible_pos: Vec<Option<usize>>,
    irreducible_poset: Poset,
}

impl DistributiveLattice {
    /// Checks that `poset` is a distributive lattice and tabulates `∨`, `∧`.
    pub fn new(poset: Poset) -> Result<Self> {
        if poset.is_empty() {
            return Err(Error::EmptyPoset);
        }
        let n = poset.len();
        let join = bound_table(&poset, true)?;
        let meet = bound_table(&poset, false)?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                        return Err(Error::NotDistributive(
                            poset.label(a).to_owned(),
                            poset.label(b).to_owned(),
                            poset.label(c).to_owned(),
                        ));
                    }
                }
            }
        }
        let bottom = poset.unique_minimal().ok_or(Error::NoUniqueMinimum)?;
        let top = poset.unique_maximal().ok_or_else(|| {
            Error::Internal("a finite lattice has a unique maximal element".into())
        })?;
        Ok(Self::assemble(poset, join, meet, bottom, top))
    }

    /// Validates `poset` and checks closed-form join and meet operations
    /// against the tabulated ones.
    pub fn with_operations(
        poset: Poset,
        join: impl Fn(usize, usize) -> usize,
        meet: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let lattice = Self::new(poset)?;
        for a in 0..lattice.len() {
            for b in 0..lattice.len() {
                if join(a, b) != lattice.join(a, b) || meet(a, b) != lattice.meet(a, b) {
                    return Err(Error::Internal(format!(
                        "supplied join/meet disagree with the order at ({}, {})",
                        lattice.label(a),
                        lattice.label(b)
                    )));
                }
            }
        }
        Ok(lattice)
    }

    /// `J(P) ∖ {∅}` ordered by inclusion. Elements are labelled by their
    /// maximal elements, e.g. `{x1,x2}`; the principal ideal of `x` is
    /// labelled `x`, so the join-irreducibles carry the labels of `P`.
    pub fn from_ideals(p: &Poset) -> Result<Self> {
        let ideals: Vec<Vec<usize>> = p
            .order_ideals()
            .into_iter()
            .filter(|i| !i.is_empty())
            .collect();
        let labels: Vec<String> = ideals.iter().map(|i| ideal_label(p, i)).collect();
        let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
        let poset = Poset::from_relation(&labels, |i, j| subset(&ideals[i], &ideals[j]))?;
        Self::new(poset)
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        Self::new(Poset::from_json(json)?)
    }

    fn assemble(
        poset: Poset,
        join: Vec<Vec<usize>>,
        meet: Vec<Vec<usize>>,
        bottom: usize,
        top: usize,
    ) -> Self {
        let n = poset.len();
        let irreducibles: Vec<usize> = (0..n)
            .filter(|&a| a == bottom || poset.lower_covers(a).len() == 1)
            .collect();
        let mut irreducible_pos = vec![None; n];
        for (k, &a) in irreducibles.iter().enumerate() {
            irreducible_pos[a] = Some(k);
        }
        let irreducible_poset = poset.induced(&irreducibles);
        Self {
            poset,
            join,
            meet,
            bottom,
            top,
            irreducibles,
            irreducible_pos,
            irreducible_poset,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn label(&self, a: usize) -> &str {
        self.poset.label(a)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.poset.index_of(label)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.poset.le(a, b)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of a nonempty family.
    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> Option<usize> {
        items.into_iter().reduce(|a, b| self.join(a, b))
    }

    /// Meet of a nonempty family.
    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> Option<usize> {
        items.into_iter().reduce(|a, b| self.meet(a, b))
    }

    /// Join-irreducible elements as `H` indices, the minimum included.
    ///
    /// An element other than the minimum is join-irreducible exactly when
    /// it has a single lower cover.
    pub fn join_irreducibles(&self) -> &[usize] {
        &self.irreducibles
    }

    /// Join-irreducibles straight from the definition
    /// (`α = β ∨ γ ⇒ α ∈ {β, γ}`); used to cross-check the cover test.
    pub fn join_irreducibles_by_definition(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&a| {
                (0..n).all(|b| (0..n).all(|c| self.join(b, c) != a || b == a || c == a))
            })
            .collect()
    }

    /// The poset `P` of join-irreducibles; its index `k` corresponds to
    /// `join_irreducibles()[k]` and labels are inherited from `H`.
    pub fn irreducible_poset(&self) -> &Poset {
        &self.irreducible_poset
    }

    /// Position in `P` of an `H` element, if it is join-irreducible.
    pub fn irreducible_position(&self, a: usize) -> Option<usize> {
        self.irreducible_pos[a]
    }

    /// `Φ(α) = {x ∈ P | x ≤ α}` as sorted `P` indices.
    pub fn phi(&self, a: usize) -> Vec<usize> {
        self.irreducibles
            .iter()
            .enumerate()
            .filter(|&(_, &x)| self.le(x, a))
            .map(|(k, _)| k)
            .collect()
    }

    /// `Ψ(I) = ⋁_{x ∈ I} x` for a nonempty order ideal `I` of `P`.
    pub fn psi(&self, ideal: &[usize]) -> Result<usize> {
        if ideal.is_empty() || !self.irreducible_poset.is_down_closed(ideal) {
            return Err(Error::NotAnIdeal);
        }
        Ok(self
            .join_all(ideal.iter().map(|&k| self.irreducibles[k]))
            .expect("ideal is nonempty"))
    }

    pub fn to_json(&self) -> PosetJson {
        self.poset.to_json()
    }
}

fn ideal_label(p: &Poset, ideal: &[usize]) -> String {
    let tops: Vec<&str> = ideal
        .iter()
        .copied()
        .filter(|&x| !ideal.iter().any(|&y| p.lt(x, y)))
        .map(|x| p.label(x))
        .collect();
    if tops.len() == 1 {
        return tops[0].to_string();
    }
    format!("{{{}}}", tops.join(","))
}

/// Least upper bounds (`upper == true`) or greatest lower bounds for all pairs.
fn bound_table(poset: &Poset, upper: bool) -> Result<Vec<Vec<usize>>> {
    let n = poset.len();
    let above = |a: usize, b: usize| if upper { poset.le(a, b) } else { poset.le(b, a) };
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in a..n {
            let bounds: Vec<usize> = (0..n).filter(|&c| above(a, c) && above(b, c)).collect();
            let best = bounds
                .iter()
                .copied()
                .find(|&c| bounds.iter().all(|&d| above(c, d)))
                .ok_or_else(|| Error::NotALattice {
                    lower: poset.label(a).to_owned(),
                    upper: poset.label(b).to_owned(),
                    kind: if upper { "join" } else { "meet" },
                })?;
            table[a][b] = best;
            table[b][a] = best;
        }
    }
    Ok(table)
}

/// A surjective lattice homomorphism `φ: H → L`.
#[derive(Clone, Debug)]
pub struct LatticeHom<'a> {
    source: &'a DistributiveLattice,
    target: &'a DistributiveLattice,
    map: Vec<usize>,
}

/// Which item of the adjunction lemma for `φ*` failed, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointLawViolation {
    pub item: u8,
    pub detail: String,
}

impl<'a> LatticeHom<'a> {
    /// Validates that `map` (indexed by source element) is a surjective
    /// lattice homomorphism.
    pub fn new(
        source: &'a DistributiveLattice,
        target: &'a DistributiveLattice,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::InvalidHom(format!(
                "map has {} entries, source has {} elements",
                map.len(),
                source.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&b| b >= target.len()) {
            return Err(Error::IndexOutOfRange(bad));
        }
        let mut hit = vec![false; target.len()];
        for &b in &map {
            hit[b] = true;
        }
        if let Some(missed) = hit.iter().position(|&h| !h) {
            return Err(Error::InvalidHom(format!(
                "not surjective: `{}` has no preimage",
                target.label(missed)
            )));
        }
        for a in 0..source.len() {
            for b in 0..source.len() {
                if map[source.join(a, b)] != target.join(map[a], map[b]) {
                    return Err(Error::InvalidHom(format!(
                        "join of `{}` and `{}` is not preserved",
                        source.label(a),
                        source.label(b)
                    )));
                }
                if map[source.meet(a, b)] != target.meet(map[a], map[b]) {
                    return Err(Error::InvalidHom(format!(
                        "meet of `{}` and `{}` is not preserved",
                        source.label(a),
                        source.label(b)
                    )));
                }
            }
        }
        Ok(Self {
            source,
            target,
            map,
        })
    }

    /// Builds the map from `{"source label": "target label"}` pairs.
    pub fn from_labels(
        source: &'a DistributiveLattice,
        target: &'a DistributiveLattice,
        labels: &HashMap<String, String>,
    ) -> Result<Self> {
        let mut map = vec![usize::MAX; source.len()];
        for (a, b) in labels {
            map[source.index_of(a)?] = target.index_of(b)?;
        }
        if let Some(a) = map.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidHom(format!(
                "map is not total: `{}` is unmapped",
                source.label(a)
            )));
        }
        Self::new(source, target, map)
    }

    pub fn identity(lattice: &'a DistributiveLattice) -> Self {
        Self {
            source: lattice,
            target: lattice,
            map: (0..lattice.len()).collect(),
        }
    }

    pub fn source(&self) -> &DistributiveLattice {
        self.source
    }

    pub fn target(&self) -> &DistributiveLattice {
        self.target
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `φ*(β) = ⋀_{α ∈ φ⁻¹(β)} α`.
    pub fn phi_star(&self, b: usize) -> usize {
        self.source
            .meet_all((0..self.source.len()).filter(|&a| self.map[a] == b))
            .expect("φ is surjective")
    }

    /// `Q = φ*(join-irreducibles of L)`, as `H` indices in the order of the
    /// target's join-irreducibles.
    pub fn q_in_source(&self) -> Vec<usize> {
        self.target
            .join_irreducibles()
            .iter()
            .map(|&y| self.phi_star(y))
            .collect()
    }

    /// `Q` as positions in the source's poset of join-irreducibles, after
    /// checking that `Φ_L(φ(α))` corresponds to `Φ_H(α) ∩ Q` for every `α`.
    pub fn restrict_to_q(&self) -> Result<Vec<usize>> {
        let q_h = self.q_in_source();
        let q_p: Vec<usize> = q_h
            .iter()
            .map(|&a| {
                self.source.irreducible_position(a).ok_or_else(|| {
                    Error::Internal(format!(
                        "φ* maps a join-irreducible to `{}`, which is not join-irreducible",
                        self.source.label(a)
                    ))
                })
            })
            .collect::<Result<_>>()?;
        for a in 0..self.source.len() {
            // Φ_L(φ(α)) as positions in L's P, pushed into H's P through φ*
            let mut via_target: Vec<usize> = self
                .target
                .phi(self.map[a])
                .into_iter()
                .map(|k| q_p[k])
                .collect();
            via_target.sort_unstable();
            let mut via_source: Vec<usize> = self
                .source
                .phi(a)
                .into_iter()
                .filter(|k| q_p.contains(k))
                .collect();
            via_source.sort_unstable();
            if via_target != via_source {
                return Err(Error::Internal(format!(
                    "Φ_L(φ({})) differs from Φ_H({}) ∩ Q",
                    self.source.label(a),
                    self.source.label(a)
                )));
            }
        }
        let mut q = q_p;
        q.sort_unstable();
        Ok(q)
    }

    /// Checks the seven basic properties of `φ*` on every element and pair.
    pub fn check_adjoint_laws(&self) -> std::result::Result<(), AdjointLawViolation> {
        let h = self.source;
        let l = self.target;
        let star: Vec<usize> = (0..l.len()).map(|b| self.phi_star(b)).collect();
        let fail = |item: u8, detail: String| Err(AdjointLawViolation { item, detail });
        for a in 0..h.len() {
            if !h.le(star[self.map[a]], a) {
                return fail(1, format!("φ*(φ({})) ≰ {}", h.label(a), h.label(a)));
            }
        }
        for b in 0..l.len() {
            if self.map[star[b]] != b {
                return fail(2, format!("φ(φ*({})) ≠ {}", l.label(b), l.label(b)));
            }
        }
        for b1 in 0..l.len() {
            for b2 in 0..l.len() {
                if l.le(b1, b2) && !h.le(star[b1], star[b2]) {
                    return fail(3, format!("φ* not monotone on {} ≤ {}", l.label(b1), l.label(b2)));
                }
                if star[l.join(b1, b2)] != h.join(star[b1], star[b2]) {
                    return fail(5, format!("φ* does not preserve {} ∨ {}", l.label(b1), l.label(b2)));
                }
            }
        }
        for a in 0..h.len() {
            for b in 0..l.len() {
                if l.le(b, self.map[a]) != h.le(star[b], a) {
                    return fail(4, format!("adjunction fails at ({}, {})", h.label(a), l.label(b)));
                }
            }
        }
        for &y in l.join_irreducibles() {
            if h.irreducible_position(star[y]).is_none() {
                return fail(6, format!("φ*({}) is not join-irreducible", l.label(y)));
            }
        }
        if star[l.bottom()] != h.bottom() {
            return fail(7, "φ* does not send the minimum to the minimum".into());
        }
        Ok(())
    }
}
