//! The Bombieri inner product `[P, Q] = Σ i! · a_i · b_i` and its norm.
//!
//! Everything here is exact except [`norm_approx`], which renders `√‖P‖²`
//! as a decimal string truncated (rounded toward zero) at the requested
//! number of digits.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::combinatorics::multi_factorial;
use crate::poly::{Coefficient, PolyError, Polynomial};
use crate::rational;

/// Exact squared Bombieri norm; always nonnegative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct NormSquared(#[serde(with = "rational")] Coefficient);

impl NormSquared {
    pub fn value(&self) -> &Coefficient {
        &self.0
    }

    pub fn into_inner(self) -> Coefficient {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for NormSquared {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `[P, Q]`, summing only over indices present in both supports.
pub fn inner_product(p: &Polynomial, q: &Polynomial) -> Result<Coefficient, PolyError> {
    if p.dimension() != q.dimension() {
        return Err(PolyError::DimensionMismatch {
            left: p.dimension(),
            right: q.dimension(),
        });
    }
    let (small, large) = if p.len() <= q.len() { (p, q) } else { (q, p) };
    let mut acc = Coefficient::zero();
    for (i, a) in small.terms() {
        if let Some(b) = large.coefficient(i) {
            acc += a * b * BigInt::from(multi_factorial(i));
        }
    }
    Ok(acc)
}

pub fn norm_squared(p: &Polynomial) -> NormSquared {
    NormSquared(inner_product(p, p).expect("same polynomial"))
}

/// `‖P‖` truncated to `digits` decimal places, e.g. `"1.414"` for `x + y`
/// at three digits.
pub fn norm_approx(p: &Polynomial, digits: u32) -> String {
    sqrt_truncated(norm_squared(p).value(), digits)
}

/// Decimal expansion of `√v` for a nonnegative rational, truncated after
/// `digits` fractional digits.
///
/// Uses `⌊√⌊v·10^{2k}⌋⌋ = ⌊√(v·10^{2k})⌋`, so every printed digit is exact.
pub fn sqrt_truncated(v: &Coefficient, digits: u32) -> String {
    assert!(!v.is_negative(), "square root of a negative value");
    let scale = BigUint::from(10u32).pow(2 * digits);
    let num = v.numer().magnitude() * scale;
    let den = v.denom().magnitude();
    let root = (num / den).sqrt();
    let s = root.to_string();
    if digits == 0 {
        return s;
    }
    let d = digits as usize;
    let padded = if s.len() <= d {
        format!("{}{}", "0".repeat(d + 1 - s.len()), s)
    } else {
        s
    };
    let (int_part, frac) = padded.split_at(padded.len() - d);
    format!("{int_part}.{frac}")
}
