use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use riordan_core::groupkit::*;
use riordan_core::RingSpec;

fn small_groups() -> Vec<TruncatedGroup> {
    let mut v: Vec<TruncatedGroup> = (1..=5).map(|n| TruncatedGroup::binary(n).unwrap()).collect();
    v.push(TruncatedGroup::new(RingSpec::prime_field(3).unwrap(), 3).unwrap());
    v.push(TruncatedGroup::new(RingSpec::zmod(4).unwrap(), 3).unwrap());
    v.push(TruncatedGroup::new(RingSpec::zmod(6).unwrap(), 2).unwrap());
    v
}

#[test]
fn pack_unpack_round_trip() {
    for grp in [
        TruncatedGroup::binary(4).unwrap(),
        TruncatedGroup::new(RingSpec::prime_field(3).unwrap(), 3).unwrap(),
        TruncatedGroup::new(RingSpec::zmod(4).unwrap(), 2).unwrap(),
    ] {
        for c in 0..grp.order() {
            let x = PackedElement(c);
            let p = grp.unpack(x);
            assert!(p.is_unit_diagonal());
            assert_eq!(grp.pack(&p).unwrap(), x);
            assert_eq!(grp.digits(x).len(), grp.width());
            assert_eq!(grp.from_digits(&grp.digits(x)), x);
        }
    }
}

#[test]
fn closure_ignores_generator_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for grp in small_groups() {
        let full = grp.full().unwrap();
        assert_eq!(full.order(), grp.order());
        let mut gens = grp.generators();
        for _ in 0..4 {
            gens.shuffle(&mut rng);
            assert_eq!(SubgroupTable::closure(grp, &gens).unwrap(), full);
        }
    }
}

#[test]
fn generator_commutators_match_all_pairs() {
    for grp in small_groups() {
        let full = grp.full().unwrap();
        let mut subjects = vec![full.clone(), grp.appell().unwrap()];
        let d = commutator_subgroup(&full, &full).unwrap();
        subjects.push(d.clone());
        subjects.push(commutator_subgroup(&d, &full).unwrap());
        for h in &subjects {
            assert_eq!(
                commutator_subgroup(h, &full).unwrap(),
                commutator_subgroup_brute(h, &full).unwrap(),
                "{grp}, |H| = {}",
                h.order()
            );
        }
        // The substitution subgroup against itself: normal there, not in G.
        let j = grp.substitution().unwrap();
        assert_eq!(commutator_subgroup(&j, &j).unwrap(), commutator_subgroup_brute(&j, &j).unwrap());
    }
}

#[test]
fn census_agrees_with_invariants() {
    for grp in small_groups() {
        let a = grp.appell().unwrap();
        let inv = abelian_invariants(&a).unwrap();
        assert_eq!(inv.order(), a.order() as u128);
        assert_eq!(inv.census(), order_census(&a));
        let full = grp.full().unwrap();
        let d = commutator_subgroup(&full, &full).unwrap();
        let q = quotient_abelian_invariants(&full, &d).unwrap();
        assert_eq!(q.census(), quotient_census(&full, &d).unwrap());
        assert_eq!(q.order() * d.order() as u128, full.order() as u128);
    }
}

/// `(g, f) -> (1, f)` is a homomorphism onto the substitution subgroup with
/// kernel the Appell subgroup, split by the inclusion.
#[test]
fn substitution_projection_splits() {
    for n in 1..=6 {
        let grp = TruncatedGroup::binary(n).unwrap();
        let rho = |x: PackedElement| grp.substitution_part(x);
        for a in 0..grp.order() {
            let a = PackedElement(a);
            assert_eq!(grp.mul(grp.appell_part(a), rho(a)), a);
            assert_eq!(rho(a) == grp.identity(), grp.is_appell(a));
            if grp.is_substitution(a) {
                assert_eq!(rho(a), a);
            }
            let step = if n == 6 { 5 } else { 1 };
            for b in (0..grp.order()).step_by(step) {
                let b = PackedElement(b);
                assert_eq!(rho(grp.mul(a, b)), grp.mul(rho(a), rho(b)));
            }
        }
    }
}

#[test]
fn weight_commutator_terms_match_series() {
    for n in 6..=8 {
        let grp = TruncatedGroup::binary(n).unwrap();
        let full = grp.full().unwrap();
        let series = lower_central_series(&full, 4).unwrap();
        for (i, term) in series.iter().enumerate() {
            assert_eq!(&lower_central_term(grp, &grp.generators(), i + 1).unwrap(), term, "n={n} i={}", i + 1);
        }
    }
}

#[test]
fn lower_central_orders_at_level_eight() {
    let grp = TruncatedGroup::binary(8).unwrap();
    let series = lower_central_series(&grp.full().unwrap(), 20).unwrap();
    let orders: Vec<u64> = series.iter().map(|t| t.order()).collect();
    assert_eq!(orders, vec![1 << 15, 1 << 10, 1 << 7, 1 << 4, 1 << 1, 1]);
}

#[test]
fn size_cap_is_reported() {
    let grp = TruncatedGroup::binary(11).unwrap();
    assert_eq!(grp.full().unwrap_err(), GroupError::SizeCap { limit: MAX_GROUP_ORDER });
}
