use num_bigint::BigInt;
use proptest::prelude::*;
use riordan_core::fps::lucas_binomial;
use riordan_core::{RingSpec, TruncatedSeries};

fn rings() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        Just(RingSpec::F2),
        Just(RingSpec::prime_field(3).unwrap()),
        Just(RingSpec::zmod(4).unwrap()),
        Just(RingSpec::zmod(6).unwrap()),
        Just(RingSpec::Integers),
    ]
}

fn series(ring: RingSpec, order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-9i64..10, order + 1)
        .prop_map(move |c| TruncatedSeries::from_i64s(ring, &c).unwrap())
}

/// Series with unit constant term.
fn unit_series(ring: RingSpec, order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-9i64..10, order + 1).prop_map(move |mut c| {
        c[0] = 1;
        TruncatedSeries::from_i64s(ring, &c).unwrap()
    })
}

/// Series `t + ...` usable as an inner series and invertible under composition.
fn delta_series(ring: RingSpec, order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-9i64..10, order + 1).prop_map(move |mut c| {
        c[0] = 0;
        if c.len() > 1 {
            c[1] = 1;
        }
        TruncatedSeries::from_i64s(ring, &c).unwrap()
    })
}

fn triple(
    f: fn(RingSpec, usize) -> BoxedStrategy<TruncatedSeries>,
) -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
    (rings(), 1usize..12).prop_flat_map(move |(r, n)| (f(r, n), f(r, n), f(r, n)))
}

fn any_series(r: RingSpec, n: usize) -> BoxedStrategy<TruncatedSeries> {
    series(r, n).boxed()
}

fn any_delta(r: RingSpec, n: usize) -> BoxedStrategy<TruncatedSeries> {
    delta_series(r, n).boxed()
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in triple(any_series)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.add(&a.neg()).unwrap(), TruncatedSeries::zero(a.ring(), a.order()));
        prop_assert_eq!(a.mul(&TruncatedSeries::one(a.ring(), a.order())).unwrap(), a.clone());
    }

    #[test]
    fn packed_and_reference_agree((a, b, c) in triple(any_series)) {
        prop_assume!(a.ring().modulus().is_some());
        let inner = c.sub(&TruncatedSeries::one(c.ring(), c.order()).scale(&c.coeff(0))).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap(), a.mul_reference(&b).unwrap());
        prop_assert_eq!(a.compose(&inner).unwrap(), a.compose_reference(&inner).unwrap());
    }

    #[test]
    fn composition_is_associative((f, g, h) in triple(any_delta)) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverses((u, d) in (rings(), 1usize..14).prop_flat_map(|(r, n)| (unit_series(r, n), delta_series(r, n)))) {
        let (r, n) = (u.ring(), u.order());
        prop_assert!(u.mul(&u.mult_inverse().unwrap()).unwrap().is_one());
        let dbar = d.comp_inverse().unwrap();
        let t = TruncatedSeries::variable(r, n);
        prop_assert_eq!(d.compose(&dbar).unwrap(), t.clone());
        prop_assert_eq!(dbar.compose(&d).unwrap(), t);
        prop_assert_eq!(dbar.comp_inverse().unwrap(), d);
    }

    #[test]
    fn frobenius_over_f2(c in prop::collection::vec(0i64..2, 1..65)) {
        let a = TruncatedSeries::from_i64s(RingSpec::F2, &c).unwrap();
        let n = a.order();
        let mut sq = vec![0i64; n + 1];
        for (i, &x) in c.iter().enumerate() {
            if 2 * i <= n {
                sq[2 * i] = x;
            }
        }
        prop_assert_eq!(a.pow(2), TruncatedSeries::from_i64s(RingSpec::F2, &sq).unwrap());
    }

    #[test]
    fn truncation_commutes_with_products((a, b, _) in triple(any_series), k in 0usize..12) {
        let k = k.min(a.order());
        prop_assert_eq!(
            a.mul(&b).unwrap().truncate(k).unwrap(),
            a.truncate(k).unwrap().mul(&b.truncate(k).unwrap()).unwrap()
        );
    }

    #[test]
    fn text_round_trip(c in prop::collection::vec(-30i64..30, 1..10)) {
        let a = TruncatedSeries::from_i64s(RingSpec::Integers, &c).unwrap();
        let back = riordan_core::literal::parse_series(&a.to_string(), RingSpec::Integers, a.order()).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn lucas_matches_pascal_mod_small_primes() {
    for p in [2u64, 3, 5, 7] {
        let mut row = vec![BigInt::from(1)];
        for m in 0..60u64 {
            for (k, c) in row.iter().enumerate() {
                let expected = c % BigInt::from(p);
                assert_eq!(BigInt::from(lucas_binomial(m, k as u64, p).unwrap()), expected, "C({m},{k}) mod {p}");
            }
            let mut next = vec![BigInt::from(1); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }
}
