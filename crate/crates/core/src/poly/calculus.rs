//! Formal partial derivatives and constant-coefficient differential operators.

use num_bigint::BigInt;

use super::{Coefficient, MultiIndex, PolyError, Polynomial};
use crate::combinatorics::falling_factorial;

impl Polynomial {
    /// `∂P/∂x_{axis+1}` (0-based axis).
    pub fn partial_derivative(&self, axis: usize) -> Result<Polynomial, PolyError> {
        if axis >= self.dimension {
            return Err(PolyError::AxisOutOfRange {
                axis,
                dimension: self.dimension,
            });
        }
        let mut out = Polynomial::zero(self.dimension);
        for (i, c) in &self.terms {
            let e = i.exponents()[axis];
            if e == 0 {
                continue;
            }
            let mut lowered = i.exponents().to_vec();
            lowered[axis] -= 1;
            out.accumulate(MultiIndex::new(lowered), c * BigInt::from(e));
        }
        Ok(out)
    }

    /// `P^{(i)} = D₁^{i₁} ··· Dₙ^{iₙ} P`.
    pub fn multi_derivative(&self, order: &MultiIndex) -> Result<Polynomial, PolyError> {
        if order.len() != self.dimension {
            return Err(PolyError::IndexLength {
                expected: self.dimension,
                found: order.len(),
            });
        }
        let mut out = Polynomial::zero(self.dimension);
        for (i, c) in &self.terms {
            if let Some((lowered, weight)) = derive_monomial(i, order) {
                out.accumulate(lowered, c * weight);
            }
        }
        Ok(out)
    }

    /// Applies `self(D₁, …, Dₙ)` to `target`: each term `c·x^i` of `self`
    /// contributes `c · target^{(i)}`.
    pub fn apply_operator(&self, target: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_dimension(target)?;
        let mut out = Polynomial::zero(self.dimension);
        for (order, a) in &self.terms {
            for (i, c) in &target.terms {
                if let Some((lowered, weight)) = derive_monomial(i, order) {
                    out.accumulate(lowered, a * c * weight);
                }
            }
        }
        Ok(out)
    }
}

/// `D^order x^exponent = w · x^(exponent − order)`, or `None` if it vanishes.
fn derive_monomial(exponent: &MultiIndex, order: &MultiIndex) -> Option<(MultiIndex, Coefficient)> {
    let lowered = exponent.checked_sub(order)?;
    let w = exponent
        .exponents()
        .iter()
        .zip(order.exponents())
        .fold(num_bigint::BigUint::from(1u32), |acc, (&e, &k)| {
            acc * falling_factorial(e, k)
        });
    Some((lowered, Coefficient::from_integer(BigInt::from(w))))
}
