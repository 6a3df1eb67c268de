//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] lives in a fixed ambient dimension `n` and stores only its
//! nonzero terms, keyed by [`MultiIndex`] in graded-lexicographic order. Every
//! constructor and operation returns a canonical value, so structural
//! equality is mathematical equality.

mod calculus;
mod index;

use std::collections::BTreeMap;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use index::MultiIndex;

/// Exact rational coefficient, always stored reduced with a positive
/// denominator.
pub type Coefficient = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial dimension must be positive")]
    ZeroDimension,
    #[error("multi-index has length {found}, expected {expected}")]
    IndexLength { expected: usize, found: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("axis {axis} out of range for dimension {dimension}")]
    AxisOutOfRange { axis: usize, dimension: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dimension: usize,
    terms: BTreeMap<MultiIndex, Coefficient>,
}

impl Polynomial {
    /// Builds a canonical polynomial from raw terms: duplicate indices are
    /// summed and zero coefficients dropped.
    pub fn new<I>(dimension: usize, raw_terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (MultiIndex, Coefficient)>,
    {
        if dimension == 0 {
            return Err(PolyError::ZeroDimension);
        }
        let mut p = Polynomial::zero(dimension);
        for (index, c) in raw_terms {
            if index.len() != dimension {
                return Err(PolyError::IndexLength {
                    expected: dimension,
                    found: index.len(),
                });
            }
            p.accumulate(index, c);
        }
        Ok(p)
    }

    /// The zero polynomial. Panics on `dimension == 0`.
    pub fn zero(dimension: usize) -> Self {
        assert!(dimension > 0, "polynomial dimension must be positive");
        Polynomial {
            dimension,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dimension: usize, c: Coefficient) -> Self {
        Self::monomial(MultiIndex::zero(dimension), c)
    }

    pub fn one(dimension: usize) -> Self {
        Self::constant(dimension, Coefficient::one())
    }

    /// The variable `x_{axis+1}` (0-based axis).
    pub fn variable(dimension: usize, axis: usize) -> Result<Self, PolyError> {
        if axis >= dimension {
            return Err(PolyError::AxisOutOfRange { axis, dimension });
        }
        Ok(Self::monomial(
            MultiIndex::unit(dimension, axis),
            Coefficient::one(),
        ))
    }

    /// `c · x^index`; the dimension is the index length.
    pub fn monomial(index: MultiIndex, c: Coefficient) -> Self {
        let mut p = Polynomial::zero(index.len());
        p.accumulate(index, c);
        p
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order (highest degree first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Coefficient)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, index: &MultiIndex) -> Option<&Coefficient> {
        self.terms.get(index)
    }

    /// Maximum `|i|` over stored terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        // the last key of a graded order has maximal degree
        self.terms.keys().next_back().map(MultiIndex::total_degree)
    }

    /// True when all terms share one total degree. The zero polynomial
    /// counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(lo), Some(hi)) => lo.total_degree() == hi.total_degree(),
            _ => true,
        }
    }

    /// The common degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.total_degree()
        } else {
            None
        }
    }

    /// Largest exponent of the given axis across all terms.
    pub fn max_exponent(&self, axis: usize) -> u32 {
        self.terms
            .keys()
            .map(|i| i.exponents()[axis])
            .max()
            .unwrap_or(0)
    }

    fn check_dimension(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.dimension != other.dimension {
            return Err(PolyError::DimensionMismatch {
                left: self.dimension,
                right: other.dimension,
            });
        }
        Ok(())
    }

    fn accumulate(&mut self, index: MultiIndex, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(index) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_dimension(other)?;
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.accumulate(i.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_dimension(other)?;
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.accumulate(i.clone(), -c);
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_dimension(other)?;
        let mut out = Polynomial::zero(self.dimension);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                out.accumulate(i.add(j), a * b);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dimension);
        }
        Polynomial {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(i, a)| (i.clone(), a * c)).collect(),
        }
    }

    /// `P^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.dimension);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.multiply(&base).expect("same dimension");
            }
            k >>= 1;
            if k > 0 {
                base = base.multiply(&base).expect("same dimension");
            }
        }
        acc
    }

    /// Re-embeds the polynomial into a larger ambient dimension by padding
    /// exponent vectors with zeros.
    pub fn embed(&self, dimension: usize) -> Result<Polynomial, PolyError> {
        if dimension < self.dimension {
            return Err(PolyError::DimensionMismatch {
                left: self.dimension,
                right: dimension,
            });
        }
        let terms = self.terms.iter().map(|(i, c)| {
            let mut e = i.exponents().to_vec();
            e.resize(dimension, 0);
            (MultiIndex::new(e), c.clone())
        });
        Polynomial::new(dimension, terms)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Convenience: an integer as a coefficient.
pub fn int(v: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(v))
}

/// Convenience: `num/den` as a coefficient. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Coefficient {
    Coefficient::new(BigInt::from(num), BigInt::from(den))
}
