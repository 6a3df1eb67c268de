use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector `(i₁, …, iₙ)` of a monomial `x₁^i₁ ··· xₙ^iₙ`.
///
/// Ordered graded-lexicographically: total degree first, then the
/// exponent tuples compared left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    /// The all-zero index of length `dimension`.
    pub fn zero(dimension: usize) -> Self {
        MultiIndex(vec![0; dimension])
    }

    /// The unit index `e_axis` (0-based axis).
    pub fn unit(dimension: usize, axis: usize) -> Self {
        let mut e = vec![0; dimension];
        e[axis] = 1;
        MultiIndex(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|i| = i₁ + … + iₙ`.
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum; lengths must agree.
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, `None` unless `other ≤ self` in every entry.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// Every index of length `dimension` with `|i| ≤ max_degree`, ordered by
    /// total degree and, within one degree, with larger leading exponents
    /// first: `(0,0), (1,0), (0,1), (2,0), (1,1), (0,2), …`.
    pub fn all_up_to(dimension: usize, max_degree: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            out.extend(Self::all_of_degree(dimension, d));
        }
        out
    }

    /// Every index of length `dimension` with `|i| = degree`, leading
    /// exponents largest first.
    pub fn all_of_degree(dimension: usize, degree: u32) -> Vec<MultiIndex> {
        fn rec(slot: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if slot + 1 == cur.len() {
                cur[slot] = left;
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[slot] = e;
                rec(slot + 1, left - e, cur, out);
            }
        }
        let mut out = Vec::new();
        if dimension == 0 {
            if degree == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        rec(0, degree, &mut vec![0; dimension], &mut out);
        out
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl<const N: usize> From<[u32; N]> for MultiIndex {
    fn from(v: [u32; N]) -> Self {
        MultiIndex(v.to_vec())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
