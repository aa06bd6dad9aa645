use std::time::Instant;

use num_bigint::BigInt;

use super::{TheoremError, VerificationReport};
use crate::fps::{RingSpec, TruncatedSeries};
use crate::groupkit::{order_census, OrderCensus, SubgroupTable, TruncatedGroup};
use crate::riordan::RiordanPair;

fn census_string(c: &OrderCensus) -> String {
    let v: Vec<String> = c.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", v.join(","))
}

fn census_report(level: usize, expected: &OrderCensus) -> Result<Vec<VerificationReport>, TheoremError> {
    let start = Instant::now();
    let grp = TruncatedGroup::binary(level)?;
    let full = grp.full()?;
    let census = order_census(&full);
    let params = [("n", level.to_string())];
    let max_order = |c: &OrderCensus| c.keys().max().copied().unwrap_or(1);
    let d = start.elapsed();
    Ok(vec![
        VerificationReport::new("order_census", &params, census_string(expected), census_string(&census))
            .with_elapsed(d),
        VerificationReport::new("max_element_order", &params, max_order(expected), max_order(&census))
            .with_elapsed(d),
        VerificationReport::new(
            "group_order",
            &params,
            1u64 << (2 * level - 1),
            full.order(),
        )
        .with_elapsed(d),
    ])
}

/// `TR_2(F2)` is the dihedral group of order 8.
pub fn verify_tr2_structure() -> Result<Vec<VerificationReport>, TheoremError> {
    census_report(2, &OrderCensus::from([(1, 1), (2, 5), (4, 2)]))
}

/// `TR_3(F2)`: 19 involutions, 12 elements of order 4 and nothing of order 8.
pub fn verify_tr3_structure() -> Result<Vec<VerificationReport>, TheoremError> {
    census_report(3, &OrderCensus::from([(1, 1), (2, 19), (4, 12)]))
}

fn order_of(p: &RiordanPair) -> u64 {
    let mut x = p.clone();
    let mut k = 1;
    while !x.is_identity() {
        x = x.mul(p).expect("same group");
        k += 1;
    }
    k
}

fn relation_reports(
    claim: &str,
    params: &[(&str, String)],
    r: &RiordanPair,
    s: &RiordanPair,
) -> Vec<VerificationReport> {
    let holds = |b: bool| if b { "holds" } else { "fails" };
    let s2 = s.mul(s).expect("same group").is_identity();
    let rsr = r.mul(s).and_then(|x| x.mul(r)).expect("same group") == *s;
    let with = |rel: &str| {
        let mut p = params.to_vec();
        p.push(("relation", rel.to_string()));
        p
    };
    vec![
        VerificationReport::new(claim, &with("s^2 = 1"), "holds", holds(s2)),
        VerificationReport::new(claim, &with("rsr = s"), "holds", holds(rsr)),
    ]
}

/// `r = (1 + t, t)` and `s = (1, t + t^2 + ... + t^(2^n))` at level `2^n`
/// generate a dihedral group of order `2^(n+2)`.
pub fn dihedral_embedding(
    n: u32,
) -> Result<(RiordanPair, RiordanPair, Vec<VerificationReport>), TheoremError> {
    let start = Instant::now();
    let level = 1usize << n;
    let ring = RingSpec::F2;
    let r = RiordanPair::from_i64s(ring, &[1, 1], &[0, 1], level)?;
    let f: Vec<i64> = (0..=level as i64).map(|k| (k > 0) as i64).collect();
    let s = RiordanPair::from_i64s(ring, &[1], &f, level)?;
    let params = [("n", n.to_string()), ("level", level.to_string())];

    let mut reports = vec![
        VerificationReport::new("dihedral_rotation_order", &params, 1u64 << (n + 1), order_of(&r)),
    ];
    reports.extend(relation_reports("dihedral_relation", &params, &r, &s));
    // Above the packed-code limit only the relations are checked.
    if let Ok(grp) = TruncatedGroup::binary(level) {
        let sub = SubgroupTable::closure(grp, &[grp.pack(&r)?, grp.pack(&s)?])?;
        reports.push(VerificationReport::new(
            "dihedral_subgroup_order",
            &params,
            1u64 << (n + 2),
            sub.order(),
        ));
    }
    let d = start.elapsed();
    let reports = reports.into_iter().map(|x| x.with_elapsed(d)).collect();
    Ok((r, s, reports))
}

/// `r = (1 + t, t)` and `s = (1, t / (1 + t))` truncated at `level` satisfy
/// `s^2 = 1` and `rsr = s`; at levels `2^n` the truncated `s` is the
/// reflection of the finite dihedral embedding.
pub fn infinite_dihedral_relations(level: usize) -> Result<Vec<VerificationReport>, TheoremError> {
    let start = Instant::now();
    let ring = RingSpec::F2;
    let r = RiordanPair::from_i64s(ring, &[1, 1], &[0, 1], level)?;
    let t = TruncatedSeries::variable(ring, level);
    let one_plus_t = TruncatedSeries::with_order(ring, &[BigInt::from(1), BigInt::from(1)], level);
    let f = t.mul(&one_plus_t.mult_inverse()?)?;
    let s = RiordanPair::new(TruncatedSeries::one(ring, level), f)?;
    let params = [("level", level.to_string())];
    let mut reports = relation_reports("infinite_dihedral_relation", &params, &r, &s);
    if level.is_power_of_two() {
        let (_, finite_s, _) = dihedral_embedding(level.trailing_zeros())?;
        reports.push(VerificationReport::new(
            "infinite_dihedral_truncation",
            &params,
            &finite_s,
            &s,
        ));
    }
    let d = start.elapsed();
    Ok(reports.into_iter().map(|x| x.with_elapsed(d)).collect())
}
