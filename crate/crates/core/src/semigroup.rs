//! Hibi rings and (generalized) doset Hibi rings as affine semigroups.
//!
//! The Hibi ring of `H` has monomial basis `T^ν` for `ν ∈ T̄(P)`, the
//! order-reversing maps `P → ℕ`. Its subring `D(H, Q)` keeps only those `ν`
//! that are even on a chosen subset `Q ⊆ P`. Degrees are measured by
//! `ν(x₀)` at the minimum `x₀` of `P`, which equals the length of the
//! standard monomial `α₁ ⋯ α_s` representing `T^ν`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lattice::DistributiveLattice;
use crate::poset::{MapSearch, Poset};
use crate::vector::ExponentVector;

/// An affine semigroup of order-reversing maps on a poset, possibly with
/// parity constraints.
pub trait Semigroup {
    fn poset(&self) -> &Poset;

    /// `true` at the elements where members must take even values.
    fn even_mask(&self) -> &[bool];

    fn contains(&self, nu: &ExponentVector) -> Result<bool> {
        let p = self.poset();
        nu.check_domain(p)?;
        let parity = self
            .even_mask()
            .iter()
            .zip(nu.values())
            .all(|(&even, &v)| !even || v % 2 == 0);
        Ok(parity && p.is_order_reversing(nu))
    }

    /// Members with every coordinate at most `bound`.
    fn members_in_box(&self, bound: u64) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        MapSearch::new(self.poset(), false, bound)
            .even_on(self.even_mask())
            .visit(|v| out.push(ExponentVector::new(v.to_vec())));
        out
    }

    /// `h(s) = #{ν : ν(x₀) = s}` for `s = 0..=s_max`.
    fn hilbert_function(&self, s_max: u64) -> Result<Vec<u64>> {
        let p = self.poset();
        let x0 = p.unique_minimal().ok_or(Error::NoUniqueMinimum)?;
        Ok((0..=s_max)
            .map(|s| {
                let mut count = 0u64;
                MapSearch::new(p, false, s)
                    .even_on(self.even_mask())
                    .fix(x0, s)
                    .visit(|_| count += 1);
                count
            })
            .collect())
    }
}

/// `T̄(P)`: all order-reversing maps.
#[derive(Clone, Debug)]
pub struct HibiSemigroup {
    poset: Poset,
    no_parity: Vec<bool>,
}

impl HibiSemigroup {
    pub fn new(poset: Poset) -> Self {
        let no_parity = vec![false; poset.len()];
        Self { poset, no_parity }
    }
}

impl Semigroup for HibiSemigroup {
    fn poset(&self) -> &Poset {
        &self.poset
    }

    fn even_mask(&self) -> &[bool] {
        &self.no_parity
    }
}

/// `T̄(P, Q)`: order-reversing maps that are even on `Q`.
#[derive(Clone, Debug)]
pub struct DosetSemigroup {
    poset: Poset,
    q: Vec<bool>,
}

impl DosetSemigroup {
    /// `q` lists indices of `poset`.
    pub fn new(poset: Poset, q: &[usize]) -> Result<Self> {
        let mut mask = vec![false; poset.len()];
        for &y in q {
            *mask.get_mut(y).ok_or(Error::IndexOutOfRange(y))? = true;
        }
        Ok(Self { poset, q: mask })
    }

    pub fn from_labels<S: AsRef<str>>(poset: Poset, q: &[S]) -> Result<Self> {
        let idx = poset.indices_of(q)?;
        Self::new(poset, &idx)
    }

    pub fn q(&self) -> Vec<usize> {
        (0..self.q.len()).filter(|&i| self.q[i]).collect()
    }
}

impl Semigroup for DosetSemigroup {
    fn poset(&self) -> &Poset {
        &self.poset
    }

    fn even_mask(&self) -> &[bool] {
        &self.q
    }
}

/// Result of comparing a generated semigroup with a membership test inside
/// a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationCheck {
    pub equal: bool,
    /// A vector in the symmetric difference, if any.
    pub witness: Option<ExponentVector>,
    /// Whether the witness is generated (and not a member) or the reverse.
    pub witness_generated: bool,
}

/// Largest box (in points) the generation check will enumerate.
pub const MAX_BOX_POINTS: u64 = 20_000_000;

/// Compares the additive closure of `gens` with the members of `semigroup`,
/// both cut down to `[0, bound]^P`.
pub fn generated_equals_membership(
    gens: &[ExponentVector],
    semigroup: &impl Semigroup,
    bound: u64,
) -> Result<GenerationCheck> {
    let p = semigroup.poset();
    let n = p.len();
    for g in gens {
        g.check_domain(p)?;
    }
    let radix = bound + 1;
    let points = radix
        .checked_pow(n as u32)
        .filter(|&pts| pts <= MAX_BOX_POINTS)
        .ok_or_else(|| Error::Precondition(format!("box [0,{bound}]^{n} is too large")))?;
    let encode = |v: &[u64]| v.iter().rev().fold(0u64, |acc, &x| acc * radix + x);
    let decode = |mut code: u64| {
        let mut v = vec![0u64; n];
        for slot in v.iter_mut() {
            *slot = code % radix;
            code /= radix;
        }
        v
    };
    // Sums only grow, so one pass in code order reaches every sum.
    let mut reached = vec![false; points as usize];
    reached[0] = true;
    let steps: Vec<&[u64]> = gens
        .iter()
        .map(|g| g.values())
        .filter(|g| g.iter().any(|&x| x > 0))
        .collect();
    for code in 0..points {
        if !reached[code as usize] {
            continue;
        }
        let v = decode(code);
        for g in &steps {
            if v.iter().zip(g.iter()).all(|(a, b)| a + b <= bound) {
                let sum: Vec<u64> = v.iter().zip(g.iter()).map(|(a, b)| a + b).collect();
                reached[encode(&sum) as usize] = true;
            }
        }
    }
    let mut members = vec![false; points as usize];
    for nu in semigroup.members_in_box(bound) {
        members[encode(nu.values()) as usize] = true;
    }
    let diff = (0..points as usize).find(|&c| reached[c] != members[c]);
    Ok(match diff {
        None => GenerationCheck {
            equal: true,
            witness: None,
            witness_generated: false,
        },
        Some(c) => GenerationCheck {
            equal: false,
            witness: Some(ExponentVector::new(decode(c as u64))),
            witness_generated: reached[c],
        },
    })
}

/// Default box for [`generated_equals_membership`]: `2 (rank P + 2)`.
pub fn default_box_bound(p: &Poset) -> Result<u64> {
    Ok(2 * (p.rank()? as u64 + 2))
}

/// A generator of `D(H, Q)` as a product of one or two lattice elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    /// Factors as `H` indices, ascending.
    pub factors: Vec<usize>,
    pub exponent: ExponentVector,
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub generators: Vec<Generator>,
    /// `true` when `Q` had no unique minimal element and the generators came
    /// from the degree-bounded search.
    pub fallback: bool,
}

impl GeneratorSet {
    pub fn exponents(&self) -> Vec<ExponentVector> {
        self.generators.iter().map(|g| g.exponent.clone()).collect()
    }
}

/// The Hibi ring `R(H)` viewed inside `K[T_x | x ∈ P]`.
#[derive(Clone, Debug)]
pub struct HibiRing {
    lattice: DistributiveLattice,
}

impl HibiRing {
    pub fn new(lattice: DistributiveLattice) -> Self {
        Self { lattice }
    }

    pub fn lattice(&self) -> &DistributiveLattice {
        &self.lattice
    }

    /// The poset `P` of join-irreducibles.
    pub fn poset(&self) -> &Poset {
        self.lattice.irreducible_poset()
    }

    pub fn semigroup(&self) -> HibiSemigroup {
        HibiSemigroup::new(self.poset().clone())
    }

    pub fn doset_semigroup(&self, q: &[usize]) -> Result<DosetSemigroup> {
        DosetSemigroup::new(self.poset().clone(), q)
    }

    /// Exponent of `∏_{x ≤ α} T_x`: the indicator of `Φ(α)`.
    pub fn generator(&self, a: usize) -> Result<ExponentVector> {
        if a >= self.lattice.len() {
            return Err(Error::IndexOutOfRange(a));
        }
        Ok(ExponentVector::indicator(self.poset().len(), &self.lattice.phi(a)))
    }

    /// Exponent of the product `α₁ ⋯ α_s`: `ν(x) = #{i | x ≤ α_i}`.
    pub fn recompose(&self, factors: &[usize]) -> Result<ExponentVector> {
        let mut nu = ExponentVector::zeros(self.poset().len());
        for &a in factors {
            nu = nu.checked_add(&self.generator(a)?)?;
        }
        Ok(nu)
    }

    /// The unique multichain `α₁ ≤ ⋯ ≤ α_s` with `s = ν(x₀)` whose product
    /// is `T^ν`; `α_i` corresponds to the level ideal `{x | ν(x) ≥ s - i + 1}`.
    pub fn factor_standard(&self, nu: &ExponentVector) -> Result<Vec<usize>> {
        let p = self.poset();
        nu.check_domain(p)?;
        if !p.is_order_reversing(nu) {
            return Err(Error::NotAMember);
        }
        let x0 = self
            .lattice
            .irreducible_position(self.lattice.bottom())
            .expect("the minimum is join-irreducible");
        let s = nu[x0];
        (1..=s)
            .rev()
            .map(|level| {
                let ideal: Vec<usize> = (0..p.len()).filter(|&x| nu[x] >= level).collect();
                self.lattice.psi(&ideal)
            })
            .collect()
    }

    /// Straightening of a product of two pairs `(α, β)(α', β')` with
    /// `α ≤ β`, `α' ≤ β'`:
    /// `(α∧α', (α∨α')∧(β∧β'))`, `((α∨α')∨(β∧β'), β∨β')`.
    pub fn straighten_pair(
        &self,
        (a, b): (usize, usize),
        (a2, b2): (usize, usize),
    ) -> Result<((usize, usize), (usize, usize))> {
        let h = &self.lattice;
        for &x in &[a, b, a2, b2] {
            if x >= h.len() {
                return Err(Error::IndexOutOfRange(x));
            }
        }
        if !h.le(a, b) || !h.le(a2, b2) {
            return Err(Error::Precondition("straighten_pair needs α ≤ β and α' ≤ β'".into()));
        }
        let lo = h.meet(a, a2);
        let hi = h.join(b, b2);
        let mid_join = h.join(a, a2);
        let mid_meet = h.meet(b, b2);
        Ok((
            (lo, h.meet(mid_join, mid_meet)),
            (h.join(mid_join, mid_meet), hi),
        ))
    }

    /// Rewrites a product of lattice elements into standard form by
    /// repeated use of `αβ = (α∧β)(α∨β)`; returns the sorted multichain.
    pub fn straighten(&self, factors: &[usize]) -> Vec<usize> {
        let h = &self.lattice;
        let mut items = factors.to_vec();
        'outer: loop {
            for i in 0..items.len() {
                for j in i + 1..items.len() {
                    let (x, y) = (items[i], items[j]);
                    if !h.poset().comparable(x, y) {
                        items[i] = h.meet(x, y);
                        items[j] = h.join(x, y);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        // A set of pairwise comparable elements sorts into a chain.
        items.sort_by(|&x, &y| {
            if x == y {
                std::cmp::Ordering::Equal
            } else if h.le(x, y) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        items
    }

    /// `ψ(α) = {y ∈ Q | y ≤ α}` as `P` indices.
    pub fn psi(&self, a: usize, q: &[usize]) -> Vec<usize> {
        let phi = self.lattice.phi(a);
        let mut out: Vec<usize> = q.iter().copied().filter(|y| phi.contains(y)).collect();
        out.sort_unstable();
        out
    }

    /// Membership of a standard monomial `α₁ ≤ ⋯ ≤ α_r` in `D(H, Q)` via the
    /// pairing pattern: after the leading elements with empty `ψ`, the rest
    /// has even length and `ψ(α_{s+2i-1}) = ψ(α_{s+2i})`.
    pub fn satisfies_pairing(&self, chain: &[usize], q: &[usize]) -> bool {
        let split = chain
            .iter()
            .position(|&a| !self.psi(a, q).is_empty())
            .unwrap_or(chain.len());
        let rest = &chain[split..];
        if chain[..split].iter().any(|&a| !self.psi(a, q).is_empty()) {
            return false;
        }
        rest.len().is_multiple_of(2)
            && rest
                .chunks(2)
                .all(|pair| self.psi(pair[0], q) == self.psi(pair[1], q))
    }

    /// Generators of `D(H, Q)`.
    ///
    /// When `Q` has a unique minimal element these are the products `αβ`
    /// with `α ≤ β` above it and `ψ(α) = ψ(β)`, together with the elements
    /// not above it. Otherwise the members of degree at most `|Q| + 1` that
    /// are not sums of two nonzero members are returned.
    pub fn doset_generators(&self, q: &[usize]) -> Result<GeneratorSet> {
        let p = self.poset();
        let h = &self.lattice;
        for &y in q {
            if y >= p.len() {
                return Err(Error::IndexOutOfRange(y));
            }
        }
        let q_poset = p.induced(q);
        let Some(y0_local) = q_poset.unique_minimal() else {
            return self.doset_generators_by_search(q);
        };
        let y0 = h.join_irreducibles()[q[y0_local]];
        let mut generators = Vec::new();
        for a in 0..h.len() {
            if !h.le(y0, a) {
                generators.push(Generator {
                    factors: vec![a],
                    exponent: self.generator(a)?,
                });
                continue;
            }
            let psi_a = self.psi(a, q);
            for b in 0..h.len() {
                if h.le(a, b) && self.psi(b, q) == psi_a {
                    generators.push(Generator {
                        factors: vec![a, b],
                        exponent: self.recompose(&[a, b])?,
                    });
                }
            }
        }
        Ok(GeneratorSet {
            generators,
            fallback: false,
        })
    }

    fn doset_generators_by_search(&self, q: &[usize]) -> Result<GeneratorSet> {
        let semigroup = self.doset_semigroup(q)?;
        let p = self.poset();
        let x0 = p.unique_minimal().ok_or(Error::NoUniqueMinimum)?;
        let max_degree = q.len() as u64 + 1;
        let members: Vec<ExponentVector> = semigroup
            .members_in_box(max_degree)
            .into_iter()
            .filter(|nu| !nu.is_zero())
            .collect();
        let set: HashSet<&ExponentVector> = members.iter().collect();
        let mut generators = Vec::new();
        for nu in &members {
            let reducible = members.iter().any(|part| {
                part != nu
                    && part.dominated_by(nu)
                    && nu.checked_sub(part).is_some_and(|rest| set.contains(&rest))
            });
            if !reducible {
                debug_assert!(nu[x0] <= max_degree);
                generators.push(Generator {
                    factors: self.factor_standard(nu)?,
                    exponent: nu.clone(),
                });
            }
        }
        Ok(GeneratorSet {
            generators,
            fallback: true,
        })
    }
}
