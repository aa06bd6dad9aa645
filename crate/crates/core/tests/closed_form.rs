use num_bigint::BigInt;
use riordan_core::groupkit::{abelian_invariants, TruncatedGroup};
use riordan_core::theorems::*;
use riordan_core::{RingSpec, TruncatedSeries};

/// Least `q = 2^s` with `(1 + t^m)^q = 1 mod t^(N+1)`, by repeated squaring
/// in the series ring.
fn lucas_power_order(big_n: usize, m: usize) -> u64 {
    let mut x = TruncatedSeries::one(RingSpec::F2, big_n)
        .add(&TruncatedSeries::monomial(RingSpec::F2, big_n, m, &BigInt::from(1)))
        .unwrap();
    let mut q = 1;
    while !x.is_one() {
        x = x.pow(2);
        q *= 2;
    }
    q
}

#[test]
fn generator_orders_match_series_powers() {
    for big_n in 1..=64usize {
        for m in (1..=big_n).step_by(2) {
            assert_eq!(
                order_of_generator(big_n as u64, m as u64).unwrap(),
                lucas_power_order(big_n, m),
                "N={big_n} m={m}"
            );
        }
    }
}

#[test]
fn factor_exponents_sum_to_index() {
    for big_n in 1..=64u64 {
        let inv = appell_invariants_for_index(big_n);
        let total: u32 = inv.factors().iter().map(|f| f.trailing_zeros()).sum();
        assert_eq!(total as u64, big_n);
        assert_eq!(inv.rank() as u64, big_n.div_ceil(2));
    }
}

#[test]
fn closed_form_matches_engine() {
    for big_n in 1..=16usize {
        let grp = TruncatedGroup::binary(big_n).unwrap();
        let engine = abelian_invariants(&grp.appell().unwrap()).unwrap();
        assert_eq!(engine, appell_invariants_for_index(big_n as u64), "N={big_n}");
        for m in (1..=big_n).step_by(2) {
            let a = grp.elem_a(m, 1).unwrap();
            assert_eq!(grp.element_order(a), order_of_generator(big_n as u64, m as u64).unwrap());
        }
    }
}

#[test]
fn table_rows() {
    let rows: Vec<String> = (1..=10).map(|n| appell_invariants_for_index(n).to_plain()).collect();
    assert_eq!(
        rows,
        ["2", "4", "4 2", "8 2", "8 2 2", "8 4 2", "8 4 2 2", "16 4 2 2", "16 4 2 2 2", "16 4 4 2 2"]
    );
}

#[test]
fn split_parity_through_twelve() {
    let indices: Vec<usize> = (1..=12).collect();
    let reports = verify_appell_classification(&indices).unwrap();
    assert!(reports.iter().all(|r| r.passed()));
    let split: Vec<bool> = reports
        .iter()
        .filter(|r| r.claim == "appell_extension_split")
        .map(|r| r.computed == "split")
        .collect();
    assert_eq!(split, (1..=12).map(|n| n % 2 == 0).collect::<Vec<_>>());
}

#[test]
fn small_suites_pass() {
    let opts = SuiteOptions { n_max: 6, depth: 2 };
    let reports = run_suites(&[Suite::Dihedral, Suite::Shapiro, Suite::Identities], opts);
    assert!(!reports.is_empty());
    for r in &reports {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn lcs_rows_at_level_eight() {
    let lcs = verify_lcs_quotients(8, 3).unwrap();
    let quotients: Vec<String> = lcs.rows.iter().map(|r| r.quotient.to_plain()).collect();
    assert_eq!(quotients, ["4 2 2 2", "2 2 2", "2 2 2"]);
    let widths = lcs.reports.iter().filter(|r| r.claim == "lcs_width");
    assert!(widths.clone().count() > 0 && widths.clone().all(|r| r.passed()));
    let first = lcs.reports.iter().find(|r| r.claim == "lcs_quotient").unwrap();
    assert!(first.passed() && first.parameters["i"] == "1");
}
