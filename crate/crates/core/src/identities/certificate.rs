use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::poly::{Coefficient, MultiIndex};
use crate::rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Block {
    /// `|i| = deg P`
    TopDegree,
    /// `|i| < deg P`
    Excess,
}

/// One nonvanishing summand `‖P^{(i)}(D)Q‖² / i!` of the expansion of
/// `‖PQ‖²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReznickTerm {
    pub index: MultiIndex,
    #[serde(rename = "value", with = "rational")]
    pub term_value: Coefficient,
    pub block: Block,
}

/// `‖PQ‖²` split into nonnegative terms. The top-degree block sums to
/// `‖P‖²‖Q‖²` when `P` is homogeneous, so `excess_sum ≥ 0` is exactly the
/// slack in `‖PQ‖² ≥ ‖P‖²‖Q‖²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReznickCertificate {
    /// Total degree of `P`, the split point between the blocks.
    pub degree: u32,
    pub terms: Vec<ReznickTerm>,
    #[serde(with = "rational")]
    pub lhs: Coefficient,
    #[serde(with = "rational")]
    pub top_sum: Coefficient,
    #[serde(with = "rational")]
    pub excess_sum: Coefficient,
}

impl ReznickCertificate {
    pub fn top_terms(&self) -> impl Iterator<Item = &ReznickTerm> {
        self.terms.iter().filter(|t| t.block == Block::TopDegree)
    }

    pub fn excess_terms(&self) -> impl Iterator<Item = &ReznickTerm> {
        self.terms.iter().filter(|t| t.block == Block::Excess)
    }

    /// `lhs = top_sum + excess_sum`, all terms nonnegative and correctly
    /// tagged, and the block sums match their terms.
    pub fn is_balanced(&self) -> bool {
        let sum = |it: &mut dyn Iterator<Item = &ReznickTerm>| {
            it.fold(Coefficient::zero(), |acc, t| acc + &t.term_value)
        };
        let tags_ok = self.terms.iter().all(|t| {
            let d = t.index.total_degree();
            match t.block {
                Block::TopDegree => d == self.degree,
                Block::Excess => d < self.degree,
            }
        });
        tags_ok
            && self.terms.iter().all(|t| !t.term_value.is_negative())
            && sum(&mut self.top_terms()) == self.top_sum
            && sum(&mut self.excess_terms()) == self.excess_sum
            && &self.top_sum + &self.excess_sum == self.lhs
    }
}
