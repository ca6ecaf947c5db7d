use num_bigint::BigInt;
use proptest::prelude::*;
use u6n::IntPolynomial;

fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
    proptest::collection::vec(-3i64..=3, 0..=5).prop_map(IntPolynomial::from_coefficients)
}

/// Every polynomial of degree <= 2 with coefficients in [-3, 3].
fn all_small() -> Vec<IntPolynomial> {
    let mut out = Vec::new();
    for a in -3..=3 {
        for b in -3..=3 {
            for c in -3..=3 {
                out.push(IntPolynomial::from_coefficients([a, b, c]));
            }
        }
    }
    out
}

#[test]
fn exhaustive_commutativity_small_degree() {
    let ps = all_small();
    for p in &ps {
        for q in &ps {
            assert_eq!(p.add(q), q.add(p));
            assert_eq!(p.mul(q), q.mul(p));
        }
    }
}

#[test]
fn exhaustive_identities_small_degree() {
    let zero = IntPolynomial::zero();
    let one = IntPolynomial::one();
    for p in all_small() {
        assert_eq!(p.add(&zero), p);
        assert_eq!(p.mul(&one), p);
        assert!(p.mul(&zero).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in arb_poly(), q in arb_poly(), v in -6i64..=6) {
        prop_assert_eq!(p.mul(&q).evaluate_i64(v), p.evaluate_i64(v) * q.evaluate_i64(v));
        prop_assert_eq!(p.add(&q).evaluate_i64(v), p.evaluate_i64(v) + q.evaluate_i64(v));
    }

    #[test]
    fn canonical_string_round_trips(p in arb_poly()) {
        let s = p.to_canonical_string();
        prop_assert_eq!(s.parse::<IntPolynomial>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<IntPolynomial>(&json).unwrap(), p);
    }

    #[test]
    fn no_zero_coefficients_stored(terms in proptest::collection::vec((0i64..6, -2i64..=2), 0..12)) {
        let p = IntPolynomial::from_terms(terms.clone()).unwrap();
        prop_assert!(p.terms().all(|(_, c)| *c != BigInt::from(0)));
        for e in 0..6u32 {
            let sum: i64 = terms.iter().filter(|(x, _)| *x == e as i64).map(|(_, c)| c).sum();
            prop_assert_eq!(p.coefficient(e), BigInt::from(sum));
        }
    }

    #[test]
    fn integer_roots_are_roots(roots in proptest::collection::vec(-5i64..=5, 1..4)) {
        let p = roots
            .iter()
            .fold(IntPolynomial::one(), |acc, &r| acc.mul(&IntPolynomial::from_coefficients([-r, 1])));
        let mut want = roots.clone();
        want.sort_unstable();
        want.dedup();
        prop_assert_eq!(p.integer_roots(), want);
    }
}
