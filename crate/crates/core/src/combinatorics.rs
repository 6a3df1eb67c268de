//! Exact factorials and binomial coefficients.
//!
//! Factorials are memoized in a process-wide table guarded by an `RwLock`;
//! the table only ever grows, so concurrent readers never observe a
//! partially-written entry.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::poly::MultiIndex;

fn table() -> &'static RwLock<Vec<BigUint>> {
    static TABLE: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigUint::one()]))
}

/// `k!` as an exact integer.
pub fn factorial(k: u32) -> BigUint {
    let k = k as usize;
    {
        let memo = table().read().expect("factorial table poisoned");
        if let Some(v) = memo.get(k) {
            return v.clone();
        }
    }
    let mut memo = table().write().expect("factorial table poisoned");
    while memo.len() <= k {
        let next = memo.last().expect("table is never empty") * BigUint::from(memo.len());
        memo.push(next);
    }
    memo[k].clone()
}

/// `i₁!·i₂!···iₙ!` for a multi-index.
pub fn multi_factorial(index: &MultiIndex) -> BigUint {
    index
        .exponents()
        .iter()
        .fold(BigUint::one(), |acc, &e| acc * factorial(e))
}

/// Binomial coefficient `C(r, i)`, zero when `i > r`.
pub fn binomial(r: u32, i: u32) -> BigUint {
    if i > r {
        return BigUint::zero();
    }
    // multiplicative formula over the shorter side keeps intermediates small
    let i = i.min(r - i);
    let mut acc = BigUint::one();
    for k in 0..i {
        acc *= BigUint::from(r - k);
        acc /= BigUint::from(k + 1);
    }
    acc
}

/// Falling factorial `r·(r−1)···(r−k+1)`; zero when `k > r`.
pub fn falling_factorial(r: u32, k: u32) -> BigUint {
    if k > r {
        return BigUint::zero();
    }
    ((r - k + 1)..=r).fold(BigUint::one(), |acc, v| acc * BigUint::from(v))
}
