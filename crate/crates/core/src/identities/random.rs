//! Seeded random polynomials for fuzz campaigns.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;

use crate::poly::{Coefficient, MultiIndex, Polynomial};

/// Probability that each candidate monomial is drawn, a rational in `(0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Density {
    num: u64,
    den: u64,
}

impl Density {
    pub const FULL: Density = Density { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Option<Density> {
        if den == 0 || num == 0 || num > den {
            return None;
        }
        let g = num_integer::gcd(num, den);
        Some(Density {
            num: num / g,
            den: den / g,
        })
    }

    fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> bool {
        rng.random_range(0..self.den) < self.num
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Density {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Density {
    type Err = String;

    /// Accepts `a/b`, an integer, or a decimal such as `0.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("density must be a rational in (0, 1], got {s:?}");
        let s = s.trim();
        let (num, den) = if let Some((n, d)) = s.split_once('/') {
            (
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            )
        } else if let Some((int, frac)) = s.split_once('.') {
            if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let den = 10u64.pow(frac.len() as u32);
            let int: u64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            let frac: u64 = if frac.is_empty() {
                0
            } else {
                frac.parse().map_err(|_| bad())?
            };
            (
                int.checked_mul(den)
                    .and_then(|v| v.checked_add(frac))
                    .ok_or_else(bad)?,
                den,
            )
        } else {
            (s.parse().map_err(|_| bad())?, 1)
        };
        Density::new(num, den).ok_or_else(bad)
    }
}

/// Shape of a random polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub dimension: usize,
    pub max_degree: u32,
    pub density: Density,
    /// Numerators and denominators are drawn from `1..=coefficient_bound`.
    pub coefficient_bound: u32,
    /// Draw only monomials of degree exactly `max_degree`.
    pub homogeneous: bool,
}

/// Walks every candidate monomial in a fixed order and keeps each with
/// probability `density`, attaching a random nonzero coefficient
/// `±a/b` with `1 ≤ a, b ≤ coefficient_bound`.
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, spec: &RandomSpec) -> Polynomial {
    assert!(spec.dimension >= 1, "dimension must be positive");
    assert!(
        spec.coefficient_bound >= 1,
        "coefficient bound must be positive"
    );
    let candidates = if spec.homogeneous {
        MultiIndex::all_of_degree(spec.dimension, spec.max_degree)
    } else {
        MultiIndex::all_up_to(spec.dimension, spec.max_degree)
    };
    let mut terms = Vec::new();
    for index in candidates {
        if !spec.density.draw(rng) {
            continue;
        }
        let num = i64::from(rng.random_range(1..=spec.coefficient_bound));
        let den = i64::from(rng.random_range(1..=spec.coefficient_bound));
        let sign = if rng.random_bool(0.5) { -1 } else { 1 };
        terms.push((
            index,
            Coefficient::new(BigInt::from(sign * num), BigInt::from(den)),
        ));
    }
    Polynomial::new(spec.dimension, terms).expect("indices match dimension")
}
