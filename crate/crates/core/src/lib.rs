//! Exact multivariate polynomials under the Bombieri inner product.
//!
//! The crate provides sparse polynomial arithmetic over the rationals,
//! differentiation and constant-coefficient differential operators, the
//! Bombieri inner product and norm, and exact verifiers for the chain
//!
//! ```text
//! Chu–Vandermonde  ⇒  [PQ,RS] = Σ_i [R^(i)(D)Q, P^(i)(D)S] / i!
//!                  ⇒  ‖PQ‖² = Σ_i ‖P^(i)(D)Q‖² / i!
//!                  ⇒  ‖PQ‖ ≥ ‖P‖·‖Q‖   (P, Q homogeneous)
//! ```
//!
//! together with per-instance certificates for the final inequality.

pub mod bombieri;
pub mod campaign;
pub mod combinatorics;
pub mod identities;
pub mod parser;
pub mod poly;
pub mod rational;

pub use bombieri::{inner_product, norm_approx, norm_squared, NormSquared};
pub use combinatorics::{binomial, factorial, multi_factorial};
pub use poly::{Coefficient, MultiIndex, PolyError, Polynomial};
