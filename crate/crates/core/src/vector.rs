use std::collections::BTreeMap;
use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A map from the elements of a poset to the natural numbers, stored densely
/// by element index.
///
/// These are the exponents `ν` of monomials `T^ν = ∏ T_x^{ν(x)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(values: Vec<u64>) -> Self {
        Self(values)
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![0; len])
    }

    /// Indicator vector of `support` in a poset of `len` elements.
    pub fn indicator(len: usize, support: &[usize]) -> Self {
        let mut v = vec![0; len];
        for &i in support {
            v[i] = 1;
        }
        Self(v)
    }

    /// Builds a vector from a label map; every element of `poset` must occur.
    pub fn from_labels(poset: &Poset, values: &BTreeMap<String, u64>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::DomainMismatch {
                expected: poset.len(),
                found: values.len(),
            });
        }
        let mut v = vec![0; poset.len()];
        for (label, &value) in values {
            v[poset.index_of(label)?] = value;
        }
        Ok(Self(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn max_value(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// Pointwise difference, or `None` when some coordinate would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.0.len() != other.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    /// `self ≤ other` coordinatewise.
    pub fn dominated_by(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn to_labels(&self, poset: &Poset) -> BTreeMap<String, u64> {
        poset
            .labels()
            .iter()
            .cloned()
            .zip(self.0.iter().copied())
            .collect()
    }

    pub(crate) fn check_domain(&self, poset: &Poset) -> Result<()> {
        if self.0.len() != poset.len() {
            return Err(Error::DomainMismatch {
                expected: poset.len(),
                found: self.0.len(),
            });
        }
        Ok(())
    }

    fn same_len(&self, other: &Self) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::DomainMismatch {
                expected: self.0.len(),
                found: other.0.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for ExponentVector {
    type Output = u64;

    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl From<Vec<u64>> for ExponentVector {
    fn from(v: Vec<u64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
