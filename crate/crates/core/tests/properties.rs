use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use bombieri_core::identities::{
    identity_b_sides, identity_b_terms, identity_c_sides, identity_c_terms, reznick_certificate,
};
use bombieri_core::parser::{format_polynomial, parse_polynomial};
use bombieri_core::{
    inner_product, multi_factorial, norm_squared, Coefficient, MultiIndex, Polynomial,
};

fn arb_coefficient() -> impl Strategy<Value = Coefficient> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Coefficient::new(BigInt::from(n), BigInt::from(d)))
}

fn arb_poly(dim: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..=max_deg, dim), arb_coefficient())
        .prop_filter("degree bound", move |(e, _)| {
            e.iter().sum::<u32>() <= max_deg
        })
        .prop_map(|(e, c)| (MultiIndex::new(e), c));
    prop::collection::vec(term, 0..=max_terms)
        .prop_map(move |terms| Polynomial::new(dim, terms).unwrap())
}

fn pair(max_deg: u32) -> impl Strategy<Value = (Polynomial, Polynomial)> {
    (1usize..=3).prop_flat_map(move |d| (arb_poly(d, max_deg, 6), arb_poly(d, max_deg, 6)))
}

fn triple(max_deg: u32) -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    (1usize..=3).prop_flat_map(move |d| {
        (
            arb_poly(d, max_deg, 5),
            arb_poly(d, max_deg, 5),
            arb_poly(d, max_deg, 5),
        )
    })
}

fn quad(max_deg: u32) -> impl Strategy<Value = [Polynomial; 4]> {
    (1usize..=3).prop_flat_map(move |d| {
        (
            arb_poly(d, max_deg, 4),
            arb_poly(d, max_deg, 4),
            arb_poly(d, max_deg, 4),
            arb_poly(d, max_deg, 4),
        )
            .prop_map(|(a, b, c, e)| [a, b, c, e])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonicalization_is_idempotent(p in arb_poly(3, 4, 8)) {
        let rebuilt = Polynomial::new(3, p.terms().map(|(i, c)| (i.clone(), c.clone()))).unwrap();
        prop_assert_eq!(&rebuilt, &p);
        prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn ring_axioms((p, q, r) in triple(3)) {
        prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
        prop_assert_eq!(p.multiply(&q).unwrap(), q.multiply(&p).unwrap());
        prop_assert_eq!(
            p.add(&q).unwrap().add(&r).unwrap(),
            p.add(&q.add(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.multiply(&q).unwrap().multiply(&r).unwrap(),
            p.multiply(&q.multiply(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.multiply(&q.add(&r).unwrap()).unwrap(),
            p.multiply(&q).unwrap().add(&p.multiply(&r).unwrap()).unwrap()
        );
        prop_assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn derivative_is_linear((p, q) in pair(4), a in arb_coefficient(), b in arb_coefficient(), order in prop::collection::vec(0u32..=2, 3)) {
        let order = MultiIndex::new(order[..p.dimension()].to_vec());
        let combo = p.scale(&a).add(&q.scale(&b)).unwrap();
        let expected = p.multi_derivative(&order).unwrap().scale(&a)
            .add(&q.multi_derivative(&order).unwrap().scale(&b)).unwrap();
        prop_assert_eq!(combo.multi_derivative(&order).unwrap(), expected);
    }

    #[test]
    fn mixed_partials_commute(p in arb_poly(3, 5, 8), i in 0usize..3, j in 0usize..3) {
        let ij = p.partial_derivative(i).unwrap().partial_derivative(j).unwrap();
        let ji = p.partial_derivative(j).unwrap().partial_derivative(i).unwrap();
        prop_assert_eq!(ij, ji);
    }

    #[test]
    fn multi_derivative_of_own_monomial(e in prop::collection::vec(0u32..=5, 1..=3)) {
        let i = MultiIndex::new(e);
        let x = Polynomial::monomial(i.clone(), Coefficient::from_integer(1.into()));
        let expected = Polynomial::constant(i.len(), Coefficient::from_integer(multi_factorial(&i).into()));
        prop_assert_eq!(x.multi_derivative(&i).unwrap(), expected);
    }

    #[test]
    fn operator_is_bilinear((a1, a2, q) in triple(3), c in arb_coefficient()) {
        let lhs = a1.add(&a2.scale(&c)).unwrap().apply_operator(&q).unwrap();
        let rhs = a1.apply_operator(&q).unwrap().add(&a2.apply_operator(&q).unwrap().scale(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = q.apply_operator(&a1.add(&a2.scale(&c)).unwrap()).unwrap();
        let rhs = q.apply_operator(&a1).unwrap().add(&q.apply_operator(&a2).unwrap().scale(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inner_product_symmetric_and_bilinear((p, p2, q) in triple(4), a in arb_coefficient(), b in arb_coefficient()) {
        prop_assert_eq!(inner_product(&p, &q).unwrap(), inner_product(&q, &p).unwrap());
        let combo = p.scale(&a).add(&p2.scale(&b)).unwrap();
        prop_assert_eq!(
            inner_product(&combo, &q).unwrap(),
            a * inner_product(&p, &q).unwrap() + b * inner_product(&p2, &q).unwrap()
        );
    }

    #[test]
    fn norm_is_positive_definite(p in arb_poly(3, 4, 6)) {
        let n = norm_squared(&p);
        prop_assert!(!n.value().is_negative());
        prop_assert_eq!(n.is_zero(), p.is_zero());
    }

    #[test]
    fn monomials_are_orthogonal(e in prop::collection::vec(0u32..=4, 2), f in prop::collection::vec(0u32..=4, 2)) {
        let one = Coefficient::from_integer(1.into());
        let (i, j) = (MultiIndex::new(e), MultiIndex::new(f));
        let v = inner_product(&Polynomial::monomial(i.clone(), one.clone()), &Polynomial::monomial(j.clone(), one)).unwrap();
        if i == j {
            prop_assert_eq!(v, Coefficient::from_integer(multi_factorial(&i).into()));
        } else {
            prop_assert!(v.is_zero());
        }
    }

    #[test]
    fn multiplication_by_variable_is_adjoint_to_derivative((p, q) in pair(4), k in 0usize..3) {
        let k = k % p.dimension();
        let xk = Polynomial::variable(p.dimension(), k).unwrap();
        prop_assert_eq!(
            inner_product(&xk.multiply(&p).unwrap(), &q).unwrap(),
            inner_product(&p, &q.partial_derivative(k).unwrap()).unwrap()
        );
    }

    #[test]
    fn format_parse_round_trip(p in (1usize..=4).prop_flat_map(|d| arb_poly(d, 5, 8))) {
        let text = format_polynomial(&p);
        prop_assert_eq!(parse_polynomial(&text, Some(p.dimension())).unwrap(), p);
    }

    #[test]
    fn parser_agrees_with_core((a, b) in pair(3)) {
        let dim = Some(a.dimension());
        let (fa, fb) = (format_polynomial(&a), format_polynomial(&b));
        prop_assert_eq!(
            parse_polynomial(&format!("({fa})*({fb})"), dim).unwrap(),
            a.multiply(&b).unwrap()
        );
        prop_assert_eq!(
            parse_polynomial(&format!("({fa})+({fb})"), dim).unwrap(),
            a.add(&b).unwrap()
        );
    }

    #[test]
    fn diagnostics_point_into_input(s in "[x-z0-9+*/^() -]{0,12}") {
        if let Err(d) = parse_polynomial(&s, None) {
            prop_assert!(d.position <= s.chars().count());
        }
    }

    #[test]
    fn identity_c_holds([p, q, r, s] in quad(3)) {
        let rep = identity_c_sides(&p, &q, &r, &s).unwrap();
        prop_assert!(rep.verdict, "lhs {} rhs {}", rep.lhs, rep.rhs);
    }

    #[test]
    fn identity_b_is_c_specialized((p, q) in pair(3)) {
        let b = identity_b_sides(&p, &q).unwrap();
        prop_assert!(b.verdict);
        let c = identity_c_sides(&p, &q, &p, &q).unwrap();
        prop_assert_eq!(&b.rhs, &c.rhs);
        prop_assert_eq!(identity_b_terms(&p, &q).unwrap(), identity_c_terms(&p, &q, &p, &q).unwrap());
    }

    #[test]
    fn certificate_accounts((p, q) in pair(3)) {
        prop_assume!(!p.is_zero());
        let cert = reznick_certificate(&p, &q).unwrap();
        prop_assert!(cert.is_balanced());
        prop_assert!(!cert.excess_sum.is_negative());
        if p.is_homogeneous() {
            prop_assert_eq!(
                &cert.top_sum,
                &(norm_squared(&p).into_inner() * norm_squared(&q).into_inner())
            );
        }
    }
}
