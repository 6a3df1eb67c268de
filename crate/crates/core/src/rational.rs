//! Serde adapter writing exact rationals as `"num/den"` strings.
//!
//! Integers keep their denominator (`"8/1"`) so every rational field in a
//! report has the same shape. Parsing also accepts a bare integer.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{de, Deserialize, Deserializer, Serializer};

use crate::poly::Coefficient;

pub fn to_string(v: &Coefficient) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

pub fn from_str(s: &str) -> Option<Coefficient> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Coefficient::new(n, d))
}

pub fn serialize<S: Serializer>(v: &Coefficient, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_string(v))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Coefficient, D::Error> {
    let s = String::deserialize(d)?;
    from_str(&s).ok_or_else(|| de::Error::custom(format!("invalid rational {s:?}")))
}
