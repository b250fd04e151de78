//! Composition and irreducibility invariants, partly property-based.

use ffbinom::arith::prime_powers_in;
use ffbinom::{Field, Poly};
use proptest::prelude::*;

fn arb_field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![3u64, 4, 5, 7, 8, 9, 11, 16, 25])
        .prop_map(|q| Field::of_order(q).unwrap())
}

fn arb_poly(field: Field, max_deg: usize) -> impl Strategy<Value = Poly> {
    let q = field.q();
    prop::collection::vec(0..q, 1..=max_deg + 1)
        .prop_map(move |codes| Poly::from_codes(&field, &codes).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mul_is_commutative_and_degree_adds(
        (_f, a, b) in arb_field().prop_flat_map(|f| {
            (Just(f.clone()), arb_poly(f.clone(), 12), arb_poly(f, 12))
        })
    ) {
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        prop_assert_eq!(&ab, &ba);
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!(ab.degree(), Some(da + db));
        }
    }

    #[test]
    fn div_rem_round_trips(
        (_f, a, b) in arb_field().prop_flat_map(|f| {
            (Just(f.clone()), arb_poly(f.clone(), 14), arb_poly(f, 6))
        })
    ) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        let back = q.mul(&b).unwrap().add(&r).unwrap();
        prop_assert_eq!(back, a);
        prop_assert!(r.degree().map_or(0, |d| d + 1) <= b.degree().unwrap());
    }

    #[test]
    fn compose_degree_multiplies(
        (_f, a, b) in arb_field().prop_flat_map(|f| {
            (Just(f.clone()), arb_poly(f.clone(), 6), arb_poly(f, 6))
        })
    ) {
        prop_assume!(a.degree().map_or(0, |d| d) >= 1);
        prop_assume!(b.degree().map_or(0, |d| d) >= 1);
        let c = a.compose(&b).unwrap();
        prop_assert_eq!(c.degree(), Some(a.degree().unwrap() * b.degree().unwrap()));
    }

    #[test]
    fn compose_matches_evaluation(
        (f, a, b, x) in arb_field().prop_flat_map(|f| {
            let q = f.q();
            (Just(f.clone()), arb_poly(f.clone(), 5), arb_poly(f, 5), 0..q)
        })
    ) {
        let x = f.element(x).unwrap();
        let c = a.compose(&b).unwrap();
        prop_assert_eq!(c.eval(&x), a.eval(&b.eval(&x)));
    }
}

/// f_(m+n) = f_m composed with f_n, checked for small m, n.
#[test]
fn iterates_compose_additively() {
    for q in [5u64, 9] {
        let field = Field::of_order(q).unwrap();
        let a = field.generator().unwrap();
        let f = Poly::binomial(2, &a);
        for m in 1..=3u32 {
            for n in 1..=3u32 {
                if 2u64.pow(m + n) > 4096 {
                    continue;
                }
                let lhs = f.iterate(m + n).unwrap();
                let rhs = f.iterate(m).unwrap().compose(&f.iterate(n).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "q={q} m={m} n={n}");
            }
        }
    }
}

/// Every default modulus the field constructor picks is irreducible
/// according to the generic test.
#[test]
fn accepted_moduli_are_irreducible() {
    for q in prime_powers_in(4, 1024) {
        let (p, e) = ffbinom::arith::split_prime_power(q).unwrap();
        if e == 1 {
            continue;
        }
        let f = Field::new(p, e).unwrap();
        let base = Field::new(p, 1).unwrap();
        let modulus = Poly::from_codes(&base, f.modulus().unwrap()).unwrap();
        assert!(modulus.is_irreducible(), "q={q} modulus={modulus}");
    }
}

/// Iterating x^2 - 12 over F_19 six times gives a degree-64 polynomial
/// whose constant term is P_6(12) = 5.
#[test]
fn intro_iterate_constant_term() {
    let f19 = Field::new(19, 1).unwrap();
    let f = Poly::binomial(2, &f19.from_int(12));
    let f6 = f.iterate(6).unwrap();
    assert_eq!(f6.degree(), Some(64));
    assert_eq!(f6.coeff(0), f19.from_int(5));
}
