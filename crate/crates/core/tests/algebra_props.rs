use std::collections::BTreeMap;

use num_bigint::BigInt;
use pipedream::algebra::{parse_polynomial, Monomial, Polynomial, Substitution, Var};
use proptest::prelude::*;

const VARS: [Var; 5] = [Var::A, Var::B, Var::X(1), Var::X(2), Var::Y(1)];

fn monomial(exps: &[u8]) -> Monomial {
    Monomial::from_factors(VARS.iter().zip(exps).map(|(&v, &e)| (v, e as i32)))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u8..3, VARS.len()), -4i64..=4), 0..6)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(|(e, c)| (monomial(&e), BigInt::from(c)))))
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn substitution() -> impl Strategy<Value = Substitution> {
    prop::collection::btree_map(prop::sample::select(VARS.to_vec()), poly(), 0..3)
}

/// `s2 ∘ s1`: first `s1`, then `s2` on the result.
fn compose(s1: &Substitution, s2: &Substitution) -> Substitution {
    let mut out: Substitution = s2.clone();
    for (v, image) in s1 {
        out.insert(*v, image.substitute(s2));
    }
    out
}

proptest! {
    #[test]
    fn addition_is_a_commutative_group(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p + &Polynomial::zero(), p.clone());
        prop_assert_eq!(&p + &(-&p), Polynomial::zero());
    }

    #[test]
    fn multiplication_is_commutative_associative_and_distributes(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &Polynomial::one(), p.clone());
        prop_assert!((&p * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly(), q in nonzero_poly()) {
        let product = &p * &q;
        prop_assert_eq!(product.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn exact_division_rejects_a_nonzero_remainder(p in poly(), q in nonzero_poly()) {
        let shifted = &(&p * &q) + &Polynomial::one();
        // q divides p*q + 1 only when q is a unit.
        if q.total_degree() != Some(0) {
            prop_assert!(shifted.exact_div(&q).is_err());
        }
    }

    #[test]
    fn leading_form_reassembles(p in nonzero_poly(), idx in 0..VARS.len()) {
        let v = VARS[idx];
        let (d, coefficient) = p.leading_form(v).unwrap();
        prop_assert!(!coefficient.is_zero());
        prop_assert_eq!(coefficient.degree_in(v).unwrap_or(0), 0);
        let top = &coefficient * &Polynomial::var(v).pow(d as u32);
        let rest = &p - &top;
        prop_assert!(rest.degree_in(v).map_or(true, |e| e < d));
    }

    #[test]
    fn substitution_composes(p in poly(), s1 in substitution(), s2 in substitution()) {
        let twice = p.substitute(&s1).substitute(&s2);
        prop_assert_eq!(twice, p.substitute(&compose(&s1, &s2)));
    }

    #[test]
    fn substitution_is_a_ring_map(p in poly(), q in poly(), s in substitution()) {
        prop_assert_eq!((&p * &q).substitute(&s), &p.substitute(&s) * &q.substitute(&s));
        prop_assert_eq!((&p + &q).substitute(&s), &p.substitute(&s) + &q.substitute(&s));
    }

    #[test]
    fn canonical_string_round_trips(p in poly()) {
        let text = p.canonical_string();
        prop_assert_eq!(parse_polynomial(&text).unwrap(), p.clone());
        prop_assert_eq!(Polynomial::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn homogeneous_components_sum_back(p in poly()) {
        let parts = p.homogeneous_components();
        for (d, part) in &parts {
            prop_assert!(part.is_homogeneous());
            prop_assert_eq!(part.total_degree(), Some(*d));
        }
        prop_assert_eq!(parts.into_values().sum::<Polynomial>(), p);
    }

    #[test]
    fn evaluation_is_multiplicative(p in poly(), q in poly(), values in prop::collection::vec(-5i64..=5, VARS.len())) {
        let table: BTreeMap<Var, BigInt> = VARS.iter().copied().zip(values.into_iter().map(BigInt::from)).collect();
        let at = |f: &Polynomial| f.evaluate_int(|v| table.get(&v).cloned()).unwrap();
        prop_assert_eq!(at(&(&p * &q)), at(&p) * at(&q));
        prop_assert_eq!(at(&(&p + &q)), at(&p) + at(&q));
    }
}
