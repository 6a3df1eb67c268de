//! Exact verifiers for the implication chain
//!
//! * Chu–Vandermonde: `Σ_i C(r,i)·C(s,p−i) = C(r+s,p)`
//! * Beauzamy–Dégot: `[PQ, RS] = Σ_i [R^{(i)}(D)Q, P^{(i)}(D)S] / i!`
//! * Reznick: `‖PQ‖² = Σ_i ‖P^{(i)}(D)Q‖² / i!`
//! * Bombieri: `‖PQ‖ ≥ ‖P‖·‖Q‖` for homogeneous `P`, `Q`
//!
//! The identity sums run over all multi-indices `i ≥ 0`; they are truncated
//! at `|i| ≤ deg` of the differentiated polynomial since every later
//! summand vanishes.

mod certificate;
mod random;
mod report;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use certificate::{Block, ReznickCertificate, ReznickTerm};
pub use random::{random_polynomial, Density, RandomSpec};
pub use report::{ChuParams, Instance, Statement, VerificationReport};

use crate::bombieri::{inner_product, norm_squared};
use crate::combinatorics::{binomial, factorial, multi_factorial};
use crate::poly::{Coefficient, MultiIndex, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0} is the zero polynomial and has no degree to split on")]
    ZeroPolynomial(&'static str),
    #[error("{0} is not homogeneous")]
    NotHomogeneous(&'static str),
    #[error("{0} is not a single monomial")]
    NotMonomial(&'static str),
}

fn same_dimension(ps: &[&Polynomial]) -> Result<(), PolyError> {
    let d = ps[0].dimension();
    match ps.iter().find(|p| p.dimension() != d) {
        Some(p) => Err(PolyError::DimensionMismatch {
            left: d,
            right: p.dimension(),
        }),
        None => Ok(()),
    }
}

fn over_factorial(v: Coefficient, index: &MultiIndex) -> Coefficient {
    v / BigInt::from(multi_factorial(index))
}

/// Both sides of `Σ_{i=0}^{p} C(r,i)·C(s,p−i) = C(r+s,p)` in exact integers.
pub fn chu_vandermonde_check(r: u32, s: u32, p: u32) -> VerificationReport {
    let lhs = (0..=p).fold(num_bigint::BigUint::zero(), |acc, i| {
        acc + binomial(r, i) * binomial(s, p - i)
    });
    let rhs = binomial(r + s, p);
    VerificationReport::new(
        Statement::Chu,
        Coefficient::from_integer(lhs.into()),
        Coefficient::from_integer(rhs.into()),
        Instance {
            chu: Some(ChuParams { r, s, p }),
            ..Default::default()
        },
    )
}

/// Summands `[R^{(i)}(D)Q, P^{(i)}(D)S] / i!` for every `|i| ≤ min(deg R, deg P)`,
/// in [`MultiIndex::all_up_to`] order. Empty when `P` or `R` is zero.
pub fn identity_c_terms(
    p: &Polynomial,
    q: &Polynomial,
    r: &Polynomial,
    s: &Polynomial,
) -> Result<Vec<(MultiIndex, Coefficient)>, PolyError> {
    same_dimension(&[p, q, r, s])?;
    let bound = match (r.total_degree(), p.total_degree()) {
        (Some(a), Some(b)) => a.min(b),
        _ => return Ok(Vec::new()),
    };
    MultiIndex::all_up_to(p.dimension(), bound)
        .into_iter()
        .map(|i| {
            let left = r.multi_derivative(&i)?.apply_operator(q)?;
            let right = p.multi_derivative(&i)?.apply_operator(s)?;
            let v = over_factorial(inner_product(&left, &right)?, &i);
            Ok((i, v))
        })
        .collect()
}

/// `[PQ, RS]` against the operator-side sum.
pub fn identity_c_sides(
    p: &Polynomial,
    q: &Polynomial,
    r: &Polynomial,
    s: &Polynomial,
) -> Result<VerificationReport, PolyError> {
    let rhs = identity_c_terms(p, q, r, s)?
        .into_iter()
        .fold(Coefficient::zero(), |acc, (_, v)| acc + v);
    let lhs = inner_product(&p.multiply(q)?, &r.multiply(s)?)?;
    Ok(VerificationReport::new(
        Statement::IdentityC,
        lhs,
        rhs,
        Instance::of_polynomials(&[("P", p), ("Q", q), ("R", r), ("S", s)]),
    ))
}

/// Summands `‖P^{(i)}(D)Q‖² / i!` for every `|i| ≤ deg P`, in
/// [`MultiIndex::all_up_to`] order. Empty when `P` is zero.
pub fn identity_b_terms(
    p: &Polynomial,
    q: &Polynomial,
) -> Result<Vec<(MultiIndex, Coefficient)>, PolyError> {
    same_dimension(&[p, q])?;
    let Some(degree) = p.total_degree() else {
        return Ok(Vec::new());
    };
    MultiIndex::all_up_to(p.dimension(), degree)
        .into_iter()
        .map(|i| {
            let applied = p.multi_derivative(&i)?.apply_operator(q)?;
            let v = over_factorial(norm_squared(&applied).into_inner(), &i);
            Ok((i, v))
        })
        .collect()
}

/// `‖PQ‖²` against the derivative-side sum.
pub fn identity_b_sides(p: &Polynomial, q: &Polynomial) -> Result<VerificationReport, PolyError> {
    let rhs = identity_b_terms(p, q)?
        .into_iter()
        .fold(Coefficient::zero(), |acc, (_, v)| acc + v);
    let lhs = norm_squared(&p.multiply(q)?).into_inner();
    Ok(VerificationReport::new(
        Statement::IdentityB,
        lhs,
        rhs,
        Instance::of_polynomials(&[("P", p), ("Q", q)]),
    ))
}

/// Splits `‖PQ‖²` into its nonvanishing summands, tagged by whether
/// `|i| = deg P` (top degree) or `|i| < deg P` (excess).
pub fn reznick_certificate(
    p: &Polynomial,
    q: &Polynomial,
) -> Result<ReznickCertificate, IdentityError> {
    same_dimension(&[p, q])?;
    let degree = p.total_degree().ok_or(IdentityError::ZeroPolynomial("P"))?;
    let mut top_sum = Coefficient::zero();
    let mut excess_sum = Coefficient::zero();
    let mut terms = Vec::new();
    for (index, term_value) in identity_b_terms(p, q)? {
        if term_value.is_zero() {
            continue;
        }
        let block = if index.total_degree() == degree {
            top_sum += &term_value;
            Block::TopDegree
        } else {
            excess_sum += &term_value;
            Block::Excess
        };
        terms.push(ReznickTerm {
            index,
            term_value,
            block,
        });
    }
    let lhs = norm_squared(&p.multiply(q)?).into_inner();
    Ok(ReznickCertificate {
        degree,
        terms,
        lhs,
        top_sum,
        excess_sum,
    })
}

/// `‖PQ‖² ≥ ‖P‖²·‖Q‖²` for homogeneous `P` and `Q`. With `certify`, the
/// report carries the [`ReznickCertificate`] of `(P, Q)` (omitted when `P`
/// is zero, where both sides vanish).
pub fn inequality_a_check(
    p: &Polynomial,
    q: &Polynomial,
    certify: bool,
) -> Result<VerificationReport, IdentityError> {
    same_dimension(&[p, q])?;
    if !p.is_homogeneous() {
        return Err(IdentityError::NotHomogeneous("P"));
    }
    if !q.is_homogeneous() {
        return Err(IdentityError::NotHomogeneous("Q"));
    }
    let lhs = norm_squared(&p.multiply(q)?).into_inner();
    let rhs = norm_squared(p).into_inner() * norm_squared(q).into_inner();
    let mut report = VerificationReport::new(
        Statement::InequalityA,
        lhs,
        rhs,
        Instance::of_polynomials(&[("P", p), ("Q", q)]),
    );
    if certify && !p.is_zero() {
        report.certificate = Some(reznick_certificate(p, q)?);
    }
    Ok(report)
}

/// The closed form of `[PQ, RS]` for single monomials `P = a·x^p`,
/// `Q = b·x^q`, `R = c·x^r`, `S = d·x^s`: per axis `t`, the summands reduce
/// to `p_t!·q_t!·C(r_t,i)·C(s_t,p_t−i)`, so Chu–Vandermonde collapses the
/// axis to `p_t!·q_t!·C(r_t+s_t, p_t)`, provided `p_t+q_t = r_t+s_t`
/// (otherwise everything vanishes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialReduction {
    /// The Chu–Vandermonde instance `(r_t, s_t, p_t)` of each axis.
    pub axes: Vec<VerificationReport>,
    /// Whether `p + q = r + s` as exponent vectors.
    pub matched: bool,
    /// `a·b·c·d · Π_t p_t!·q_t!·C(r_t+s_t, p_t)`, or zero when unmatched.
    pub predicted: Coefficient,
}

pub fn monomial_reduction(
    p: &Polynomial,
    q: &Polynomial,
    r: &Polynomial,
    s: &Polynomial,
) -> Result<MonomialReduction, IdentityError> {
    same_dimension(&[p, q, r, s])?;
    let single = |poly: &Polynomial, name: &'static str| {
        let mut it = poly.terms();
        match (it.next(), it.next()) {
            (Some((i, c)), None) => Ok((i.clone(), c.clone())),
            _ => Err(IdentityError::NotMonomial(name)),
        }
    };
    let (pe, pc) = single(p, "P")?;
    let (qe, qc) = single(q, "Q")?;
    let (re, rc) = single(r, "R")?;
    let (se, sc) = single(s, "S")?;

    let mut axes = Vec::with_capacity(p.dimension());
    let mut matched = true;
    let mut product = Coefficient::one();
    for t in 0..p.dimension() {
        let (pt, qt, rt, st) = (
            pe.exponents()[t],
            qe.exponents()[t],
            re.exponents()[t],
            se.exponents()[t],
        );
        let chu = chu_vandermonde_check(rt, st, pt);
        if pt + qt == rt + st {
            let weight = factorial(pt) * factorial(qt);
            product *= &chu.rhs * BigInt::from(weight);
        } else {
            matched = false;
        }
        axes.push(chu);
    }
    let predicted = if matched {
        product * pc * qc * rc * sc
    } else {
        Coefficient::zero()
    };
    Ok(MonomialReduction {
        axes,
        matched,
        predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_many;
    use crate::parser::ParseOptions;
    use crate::poly::int;

    fn polys(texts: &[&str]) -> Vec<Polynomial> {
        parse_many(texts, &ParseOptions::default()).unwrap()
    }

    #[test]
    fn chu_examples() {
        let r = chu_vandermonde_check(2, 2, 2);
        assert!(r.verdict);
        assert_eq!(r.lhs, int(6));
        assert_eq!(r.rhs, int(6));
        let r = chu_vandermonde_check(5, 3, 0);
        assert!(r.verdict && r.lhs == int(1));
        let r = chu_vandermonde_check(0, 4, 3);
        assert!(r.verdict && r.rhs == int(4));
        // p beyond r + s: both sides vanish
        let r = chu_vandermonde_check(1, 1, 5);
        assert!(r.verdict && r.lhs.is_zero());
    }

    #[test]
    fn identity_c_constants() {
        let one = Polynomial::one(1);
        let r = identity_c_sides(&one, &one, &one, &one).unwrap();
        assert!(r.verdict);
        assert_eq!(r.lhs, int(1));
        assert_eq!(r.rhs, int(1));
    }

    #[test]
    fn identity_c_linear_case() {
        let v = polys(&["x", "1"]);
        let (x, one) = (&v[0], &v[1]);
        let terms = identity_c_terms(x, one, x, one).unwrap();
        assert_eq!(
            terms,
            vec![
                (MultiIndex::from([0]), int(0)),
                (MultiIndex::from([1]), int(1))
            ]
        );
        let r = identity_c_sides(x, one, x, one).unwrap();
        assert!(r.verdict);
        assert_eq!(r.lhs, int(1));
    }

    #[test]
    fn identity_c_zero_inputs() {
        let v = polys(&["0", "x1 + 2", "x1^2", "3"]);
        let r = identity_c_sides(&v[0], &v[1], &v[2], &v[3]).unwrap();
        assert!(r.verdict && r.lhs.is_zero());
        let r = identity_c_sides(&v[2], &v[1], &v[0], &v[3]).unwrap();
        assert!(r.verdict && r.lhs.is_zero());
    }

    #[test]
    fn identity_c_dimension_mismatch() {
        let a = Polynomial::one(1);
        let b = Polynomial::one(2);
        assert!(identity_c_sides(&a, &a, &a, &b).is_err());
        assert!(identity_b_sides(&a, &b).is_err());
    }

    #[test]
    fn identity_b_worked_example() {
        let v = polys(&["x + y"]);
        let s = &v[0];
        let r = identity_b_sides(s, s).unwrap();
        assert!(r.verdict);
        assert_eq!(r.lhs, int(8));
        let terms = identity_b_terms(s, s).unwrap();
        assert_eq!(
            terms,
            vec![
                (MultiIndex::from([0, 0]), int(4)),
                (MultiIndex::from([1, 0]), int(2)),
                (MultiIndex::from([0, 1]), int(2)),
            ]
        );
    }

    #[test]
    fn identity_b_degenerate() {
        let v = polys(&["-3/2", "x1^2 - x2 + 1"]);
        let (c, q) = (&v[0], &v[1]);
        let terms = identity_b_terms(c, q).unwrap();
        assert_eq!(terms.len(), 1);
        let r = identity_b_sides(c, q).unwrap();
        assert!(r.verdict);
        let zero = Polynomial::zero(2);
        let r = identity_b_sides(q, &zero).unwrap();
        assert!(r.verdict && r.lhs.is_zero() && r.rhs.is_zero());
    }

    #[test]
    fn certificate_worked_example() {
        let v = polys(&["x + y"]);
        let s = &v[0];
        let cert = reznick_certificate(s, s).unwrap();
        assert_eq!(cert.terms.len(), 3);
        assert_eq!(cert.terms[0].index, MultiIndex::from([0, 0]));
        assert_eq!(cert.terms[0].term_value, int(4));
        assert_eq!(cert.terms[0].block, Block::Excess);
        assert_eq!(cert.top_terms().count(), 2);
        assert!(cert.top_terms().all(|t| t.term_value == int(2)));
        assert_eq!(cert.top_sum, int(4));
        assert_eq!(cert.excess_sum, int(4));
        assert_eq!(cert.lhs, int(8));
        assert!(cert.is_balanced());
    }

    #[test]
    fn certificate_monomial_times_one() {
        for p in 0..6u32 {
            let mono = Polynomial::monomial(MultiIndex::from([p]), int(1));
            let cert = reznick_certificate(&mono, &Polynomial::one(1)).unwrap();
            assert_eq!(cert.terms.len(), 1);
            assert_eq!(cert.terms[0].block, Block::TopDegree);
            let fact = Coefficient::from_integer(factorial(p).into());
            assert_eq!(cert.terms[0].term_value, fact);
            assert_eq!(cert.lhs, fact);
            assert_eq!(cert.excess_terms().count(), 0);
        }
    }

    #[test]
    fn certificate_omits_vanishing_terms() {
        let v = polys(&["x1", "x2"]);
        let cert = reznick_certificate(&v[0], &v[1]).unwrap();
        assert_eq!(cert.terms.len(), 1);
        assert_eq!(cert.terms[0].index, MultiIndex::from([1, 0]));
        assert_eq!(cert.terms[0].term_value, int(1));
        assert_eq!(cert.lhs, int(1));
        assert!(cert.excess_sum.is_zero());
    }

    #[test]
    fn certificate_rejects_zero_p() {
        let z = Polynomial::zero(2);
        assert_eq!(
            reznick_certificate(&z, &Polynomial::one(2)),
            Err(IdentityError::ZeroPolynomial("P"))
        );
    }

    #[test]
    fn inequality_examples() {
        let v = polys(&["x + y", "1", "x1", "x2", "x1^2 - 3 x1 x2"]);
        let r = inequality_a_check(&v[0], &v[0], true).unwrap();
        assert!(r.passes());
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(8), int(4)));
        assert_eq!(r.difference, int(4));
        assert_eq!(r.certificate.as_ref().unwrap().excess_sum, int(4));

        let r = inequality_a_check(&v[1], &v[4], true).unwrap();
        assert!(r.verdict && r.difference.is_zero());

        let r = inequality_a_check(&v[2], &v[3], false).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(1), int(1)));
        assert!(r.difference.is_zero() && r.certificate.is_none());
    }

    #[test]
    fn inequality_rejects_inhomogeneous() {
        let v = polys(&["x^2 + x", "x"]);
        assert_eq!(
            inequality_a_check(&v[0], &v[1], false),
            Err(IdentityError::NotHomogeneous("P"))
        );
        assert_eq!(
            inequality_a_check(&v[1], &v[0], false),
            Err(IdentityError::NotHomogeneous("Q"))
        );
    }

    #[test]
    fn inequality_zero_p() {
        let z = Polynomial::zero(1);
        let r = inequality_a_check(&z, &Polynomial::one(1), true).unwrap();
        assert!(r.passes() && r.certificate.is_none());
    }

    #[test]
    fn monomial_reduction_matches_identity_c() {
        let v = polys(&["2 x1^2 x2", "x2^3", "-x1 x2^2", "1/3 x1 x2^2"]);
        let red = monomial_reduction(&v[0], &v[1], &v[2], &v[3]).unwrap();
        assert!(red.matched);
        assert!(red.axes.iter().all(|a| a.verdict));
        let rep = identity_c_sides(&v[0], &v[1], &v[2], &v[3]).unwrap();
        assert!(rep.verdict);
        assert_eq!(rep.lhs, red.predicted);
    }

    #[test]
    fn monomial_reduction_unmatched_is_zero() {
        let v = polys(&["x1", "x2", "x1^2", "1"]);
        let red = monomial_reduction(&v[0], &v[1], &v[2], &v[3]).unwrap();
        assert!(!red.matched);
        assert!(red.predicted.is_zero());
        let rep = identity_c_sides(&v[0], &v[1], &v[2], &v[3]).unwrap();
        assert!(rep.lhs.is_zero() && rep.rhs.is_zero());
    }

    #[test]
    fn monomial_reduction_requires_monomials() {
        let v = polys(&["x1 + 1", "x1"]);
        assert_eq!(
            monomial_reduction(&v[0], &v[1], &v[1], &v[1]),
            Err(IdentityError::NotMonomial("P"))
        );
    }
}
