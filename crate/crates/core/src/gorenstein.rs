//! The canonical module of `D(H, Q)` and the Gorenstein property.
//!
//! The canonical module is spanned by `T^ν` for `ν ∈ T(P, Q)`, the strictly
//! order-reversing maps `P → ℕ_{>0}` that are even on `Q`. The ring is
//! Gorenstein exactly when `T(P, Q)` has a unique minimal element for the
//! order `ν ≤ ν' ⟺ ν' − ν ∈ T̄(P, Q)`. Combinatorially this happens iff the
//! poset `P̃`, obtained from `P⁺ = P ∪ {∞}` by inserting a midpoint into
//! every cover `y₁ ⋖ y₂` with `y₁, y₂ ∈ Q⁺ = Q ∪ {∞}`, is pure and every
//! interval `[y, y']` with `y < y'` in `Q⁺` has even rank.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{MapSearch, Poset};
use crate::vector::ExponentVector;

/// Label of the adjoined top element.
pub const INFINITY: &str = "∞";

/// What an element of `P̃` is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TildeElement {
    /// An element of `P`, by index.
    Base(usize),
    Infinity,
    /// The midpoint of `y₁ ⋖ y₂` (indices into `P̃`).
    Midpoint(usize, usize),
}

/// `P̃` together with its relation to `P` and `Q`.
#[derive(Clone, Debug)]
pub struct PTilde {
    base: Poset,
    q: Vec<bool>,
    extended: Poset,
    kinds: Vec<TildeElement>,
}

impl PTilde {
    /// `q` lists indices of `base`.
    pub fn new(base: &Poset, q: &[usize]) -> Result<Self> {
        let n = base.len();
        let mut in_q = vec![false; n];
        for &y in q {
            *in_q.get_mut(y).ok_or(Error::IndexOutOfRange(y))? = true;
        }
        if base.index_of(INFINITY).is_ok() {
            return Err(Error::DuplicateLabel(INFINITY.into()));
        }
        let inf = n;
        let mut labels: Vec<String> = base.labels().to_vec();
        labels.push(INFINITY.into());
        let mut kinds: Vec<TildeElement> = (0..n).map(TildeElement::Base).collect();
        kinds.push(TildeElement::Infinity);
        let in_q_plus = |x: usize| x == inf || in_q[x];

        let mut plus_covers = base.covers();
        plus_covers.extend(base.maximal_elements().into_iter().map(|x| (x, inf)));
        plus_covers.sort_unstable();
        let mut relations: Vec<(String, String)> = Vec::new();
        for (a, b) in plus_covers {
            if in_q_plus(a) && in_q_plus(b) {
                let mid = format!("({},{})", labels[a], labels[b]);
                relations.push((labels[a].clone(), mid.clone()));
                relations.push((mid.clone(), labels[b].clone()));
                kinds.push(TildeElement::Midpoint(a, b));
                labels.push(mid);
            } else {
                relations.push((labels[a].clone(), labels[b].clone()));
            }
        }
        let extended = Poset::new(&labels, &relations)?;
        Ok(Self {
            base: base.clone(),
            q: in_q,
            extended,
            kinds,
        })
    }

    pub fn from_labels<S: AsRef<str>>(base: &Poset, q: &[S]) -> Result<Self> {
        Self::new(base, &base.indices_of(q)?)
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn extended(&self) -> &Poset {
        &self.extended
    }

    pub fn infinity(&self) -> usize {
        self.base.len()
    }

    pub fn kind(&self, x: usize) -> TildeElement {
        self.kinds[x]
    }

    pub fn midpoints(&self) -> Vec<usize> {
        (0..self.kinds.len())
            .filter(|&x| matches!(self.kinds[x], TildeElement::Midpoint(..)))
            .collect()
    }

    /// `Q` as sorted indices of `P`.
    pub fn q(&self) -> Vec<usize> {
        (0..self.q.len()).filter(|&y| self.q[y]).collect()
    }

    /// `Q⁺` as indices of `P̃`.
    pub fn q_plus(&self) -> Vec<usize> {
        let mut out = self.q();
        out.push(self.infinity());
        out
    }

    fn in_q(&self, x: usize) -> bool {
        matches!(self.kinds[x], TildeElement::Base(i) if self.q[i])
    }

    /// `ν̃₀` on all of `P̃`: `0` at `∞`, and going down, one more than the
    /// largest value above, rounded up to an even number on `Q`.
    pub fn nu0_tilde(&self) -> Vec<u64> {
        let p = &self.extended;
        let mut nu = vec![0u64; p.len()];
        for &x in p.linear_extension().iter().rev() {
            let Some(above) = p.upper_covers(x).iter().map(|&y| nu[y] + 1).max() else {
                continue;
            };
            nu[x] = if self.in_q(x) { above.div_ceil(2) * 2 } else { above };
        }
        nu
    }

    /// `ν₀ = ν̃₀|_P`.
    pub fn nu0(&self) -> ExponentVector {
        let mut nu = self.nu0_tilde();
        nu.truncate(self.base.len());
        ExponentVector::new(nu)
    }
}

/// `ν₀` for `(P, Q)`; `q` lists indices of `p`.
pub fn nu0(p: &Poset, q: &[usize]) -> Result<ExponentVector> {
    Ok(PTilde::new(p, q)?.nu0())
}

/// The pattern behind a non-Gorenstein verdict, as indices of `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessCase {
    /// `y ⋖ y'` in `P`, both in `Q`, `ν₀(y) ≥ ν₀(y') + 4`.
    Case1 { y: usize, y_prime: usize },
    /// `x ⋖ x'` in `P`, `x ∉ Q`, `ν₀(x) ≥ ν₀(x') + 2`.
    Case2 { x: usize, x_prime: usize },
    /// `x ⋖ x'` in `P`, `x ∈ Q`, `x' ∉ Q`, `ν₀(x) ≥ ν₀(x') + 2`.
    Case3 { x: usize, x_prime: usize },
}

impl WitnessCase {
    pub fn pair(&self) -> (usize, usize) {
        match *self {
            WitnessCase::Case1 { y, y_prime } => (y, y_prime),
            WitnessCase::Case2 { x, x_prime } | WitnessCase::Case3 { x, x_prime } => (x, x_prime),
        }
    }

    pub fn number(&self) -> u8 {
        match self {
            WitnessCase::Case1 { .. } => 1,
            WitnessCase::Case2 { .. } => 2,
            WitnessCase::Case3 { .. } => 3,
        }
    }
}

/// Which condition of the criterion failed. Indices refer to `P̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// `P̃` is not pure; `chain` is a maximal chain shorter than its rank.
    Impure { chain: Vec<usize> },
    /// `rank[y, y']_{P̃}` is odd for `y < y'` in `Q⁺`.
    OddInterval { y: usize, y_prime: usize, rank: usize },
}

#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub gorenstein: bool,
    pub failure: Option<Failure>,
    /// Set when `P̃` is impure and an odd interval exists as well.
    pub both_conditions_fail: bool,
    pub case: Option<WitnessCase>,
    pub nu0: ExponentVector,
    pub witness: Option<ExponentVector>,
}

/// Evaluates the purity and even-rank conditions on `P̃` and, when they
/// fail, builds a second minimal element of `T(P, Q)`.
pub fn gorenstein_criterion(p: &Poset, q: &[usize]) -> Result<WitnessReport> {
    let tilde = PTilde::new(p, q)?;
    let ext = tilde.extended();
    let impure = ext.short_maximal_chain()?;
    let odd = first_odd_interval(&tilde)?;
    let nu0 = tilde.nu0();
    let failure = match (&impure, odd) {
        (Some(chain), _) => Some(Failure::Impure {
            chain: chain.clone(),
        }),
        (None, Some((y, y_prime, rank))) => Some(Failure::OddInterval { y, y_prime, rank }),
        (None, None) => None,
    };
    let both_conditions_fail = impure.is_some() && odd.is_some();
    let Some(failure) = failure else {
        return Ok(WitnessReport {
            gorenstein: true,
            failure: None,
            both_conditions_fail,
            case: None,
            nu0,
            witness: None,
        });
    };
    let case = find_case(&tilde).ok_or_else(|| {
        Error::Internal("criterion fails but no cover of P̃ drops by 2".into())
    })?;
    let witness = witness_from_cases(p, q, case)?;
    Ok(WitnessReport {
        gorenstein: false,
        failure: Some(failure),
        both_conditions_fail,
        case: Some(case),
        nu0,
        witness: Some(witness),
    })
}

/// Convenience wrapper taking labels.
pub fn gorenstein_criterion_by_labels<S: AsRef<str>>(p: &Poset, q: &[S]) -> Result<WitnessReport> {
    gorenstein_criterion(p, &p.indices_of(q)?)
}

fn first_odd_interval(tilde: &PTilde) -> Result<Option<(usize, usize, usize)>> {
    let ext = tilde.extended();
    let mut q_plus = tilde.q_plus();
    q_plus.sort_by(|&a, &b| ext.label(a).cmp(ext.label(b)));
    for &y in &q_plus {
        for &y_prime in &q_plus {
            if ext.lt(y, y_prime) {
                let rank = ext.interval_rank(y, y_prime)?;
                if rank % 2 == 1 {
                    return Ok(Some((y, y_prime, rank)));
                }
            }
        }
    }
    Ok(None)
}

/// Scans the covers `a ⋖ b` of `P̃` with `ν̃₀(a) ≥ ν̃₀(b) + 2` and returns
/// the case for the pair with the smallest labels.
fn find_case(tilde: &PTilde) -> Option<WitnessCase> {
    let ext = tilde.extended();
    let nu = tilde.nu0_tilde();
    let p = tilde.base();
    let mut cases: Vec<WitnessCase> = Vec::new();
    for (a, b) in ext.covers() {
        if nu[a] < nu[b] + 2 {
            continue;
        }
        let TildeElement::Base(x) = tilde.kind(a) else {
            continue;
        };
        let case = match tilde.kind(b) {
            TildeElement::Base(x_prime) if tilde.q[x] => WitnessCase::Case3 { x, x_prime },
            TildeElement::Base(x_prime) => WitnessCase::Case2 { x, x_prime },
            TildeElement::Midpoint(_, y_prime) if y_prime < p.len() => {
                WitnessCase::Case1 { y: x, y_prime }
            }
            _ => continue,
        };
        cases.push(case);
    }
    cases.into_iter().min_by(|c, d| {
        let (c0, c1) = c.pair();
        let (d0, d1) = d.pair();
        (p.label(c0), p.label(c1)).cmp(&(p.label(d0), p.label(d1)))
    })
}

/// The perturbation of `ν₀` for the given case; both `ν ∈ T(P, Q)` and
/// `ν − ν₀ ∉ T̄(P, Q)` are checked before returning.
pub fn witness_from_cases(p: &Poset, q: &[usize], case: WitnessCase) -> Result<ExponentVector> {
    let nu0 = nu0(p, q)?;
    let mut in_q = vec![false; p.len()];
    for &y in q {
        in_q[y] = true;
    }
    let (a, b) = case.pair();
    if a >= p.len() || b >= p.len() || !p.covers_pair(a, b) {
        return Err(Error::Precondition("witness pair is not a cover of P".into()));
    }
    let gap = nu0[a].saturating_sub(nu0[b]);
    let matches = match case {
        WitnessCase::Case1 { .. } => in_q[a] && in_q[b] && gap >= 4,
        WitnessCase::Case2 { .. } => !in_q[a] && gap >= 2,
        WitnessCase::Case3 { .. } => in_q[a] && !in_q[b] && gap >= 2,
    };
    if !matches {
        return Err(Error::Precondition(format!(
            "pair ({}, {}) does not match case {}",
            p.label(a),
            p.label(b),
            case.number()
        )));
    }
    let nu: Vec<u64> = (0..p.len())
        .map(|z| {
            let bump = match case {
                WitnessCase::Case1 { y, y_prime } => {
                    if p.le(z, y_prime) && z != y {
                        2
                    } else {
                        0
                    }
                }
                WitnessCase::Case2 { x, x_prime } => {
                    if z == x {
                        1
                    } else if p.le(z, x_prime) {
                        2
                    } else {
                        0
                    }
                }
                WitnessCase::Case3 { x, x_prime } => {
                    if z == x_prime {
                        1
                    } else if p.lt(z, x_prime) && z != x {
                        2
                    } else {
                        0
                    }
                }
            };
            nu0[z] + bump
        })
        .collect();
    let nu = ExponentVector::new(nu);
    if !in_t(p, &in_q, &nu) {
        return Err(Error::Internal(format!("witness {nu} is not in T(P,Q)")));
    }
    let diff = nu.checked_sub(&nu0);
    if diff.is_some_and(|d| in_t_bar(p, &in_q, &d)) {
        return Err(Error::Internal(format!("witness {nu} dominates ν₀")));
    }
    Ok(nu)
}

fn in_t(p: &Poset, in_q: &[bool], nu: &ExponentVector) -> bool {
    p.is_strictly_order_reversing(nu) && even_on(in_q, nu)
}

fn in_t_bar(p: &Poset, in_q: &[bool], nu: &ExponentVector) -> bool {
    p.is_order_reversing(nu) && even_on(in_q, nu)
}

fn even_on(in_q: &[bool], nu: &ExponentVector) -> bool {
    in_q.iter().zip(nu.values()).all(|(&e, &v)| !e || v % 2 == 0)
}

fn mask(p: &Poset, q: &[usize]) -> Result<Vec<bool>> {
    let mut in_q = vec![false; p.len()];
    for &y in q {
        *in_q.get_mut(y).ok_or(Error::IndexOutOfRange(y))? = true;
    }
    Ok(in_q)
}

/// Elements of `T(P, Q)` with all values at most `bound`.
pub fn canonical_members_in_box(p: &Poset, q: &[usize], bound: u64) -> Result<Vec<ExponentVector>> {
    let in_q = mask(p, q)?;
    let mut out = Vec::new();
    MapSearch::new(p, true, bound)
        .even_on(&in_q)
        .visit(|v| out.push(ExponentVector::new(v.to_vec())));
    Ok(out)
}

/// Minimal elements of `T(P, Q)` inside `[0, bound]^P`.
///
/// Anything below a boxed element is itself boxed, so minimality is exact
/// for the elements returned.
pub fn canonical_minimal_elements(p: &Poset, q: &[usize], bound: u64) -> Result<Vec<ExponentVector>> {
    let required = nu0(p, q)?.max_value();
    if bound < required {
        return Err(Error::BoxTooSmall { bound, required });
    }
    let in_q = mask(p, q)?;
    let members = canonical_members_in_box(p, q, bound)?;
    Ok(members
        .iter()
        .filter(|nu| {
            !members.iter().any(|other| {
                other != *nu
                    && nu
                        .checked_sub(other)
                        .is_some_and(|d| in_t_bar(p, &in_q, &d))
            })
        })
        .cloned()
        .collect())
}

/// Brute force: every `ν ∈ T(P, Q)` with `ν ≤ max ν₀ + 2` satisfies
/// `ν − ν₀ ∈ T̄(P, Q)`.
pub fn gorenstein_oracle(p: &Poset, q: &[usize]) -> Result<bool> {
    let nu0 = nu0(p, q)?;
    let in_q = mask(p, q)?;
    let bound = nu0.max_value() + 2;
    let mut ok = true;
    MapSearch::new(p, true, bound).even_on(&in_q).visit(|v| {
        if ok {
            let nu = ExponentVector::new(v.to_vec());
            ok = nu.checked_sub(&nu0).is_some_and(|d| in_t_bar(p, &in_q, &d));
        }
    });
    Ok(ok)
}

/// JSON shape of a [`WitnessReport`], with labels in place of indices.
#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub gorenstein: bool,
    pub failure: Option<FailureJson>,
    pub both_conditions_fail: bool,
    pub case: Option<CaseJson>,
    pub nu0: BTreeMap<String, u64>,
    pub witness: Option<BTreeMap<String, u64>>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FailureJson {
    Impure { chain: Vec<String> },
    OddInterval { y: String, y_prime: String, rank: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseJson {
    pub case: u8,
    pub pair: (String, String),
}

impl WitnessReport {
    /// `p` must be the poset the report was computed for.
    pub fn to_json(&self, p: &Poset, q: &[usize]) -> Result<ReportJson> {
        let tilde = PTilde::new(p, q)?;
        let ext = tilde.extended();
        let label = |x: usize| ext.label(x).to_string();
        Ok(ReportJson {
            gorenstein: self.gorenstein,
            failure: self.failure.as_ref().map(|f| match f {
                Failure::Impure { chain } => FailureJson::Impure {
                    chain: chain.iter().map(|&x| label(x)).collect(),
                },
                Failure::OddInterval { y, y_prime, rank } => FailureJson::OddInterval {
                    y: label(*y),
                    y_prime: label(*y_prime),
                    rank: *rank,
                },
            }),
            both_conditions_fail: self.both_conditions_fail,
            case: self.case.map(|c| {
                let (a, b) = c.pair();
                CaseJson {
                    case: c.number(),
                    pair: (p.label(a).to_string(), p.label(b).to_string()),
                }
            }),
            nu0: self.nu0.to_labels(p),
            witness: self.witness.as_ref().map(|w| w.to_labels(p)),
        })
    }
}
