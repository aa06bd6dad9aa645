use std::time::Instant;

use serde::Serialize;

use super::{TheoremError, VerificationReport};
use crate::fps::RingSpec;
use crate::groupkit::{
    commutator_subgroup, lower_central_term, quotient_abelian_invariants, AbelianType, PackedElement,
    SubgroupTable, TruncatedGroup,
};

fn abelianization(g: &SubgroupTable) -> Result<(SubgroupTable, AbelianType), TheoremError> {
    let d = commutator_subgroup(g, g)?;
    let q = quotient_abelian_invariants(g, &d)?;
    Ok((d, q))
}

/// The unit-diagonal group's abelianization against the additive group of
/// the ring times the abelianization of the substitution subgroup.
pub fn verify_abelianization_splitting(ring: RingSpec, n: usize) -> Result<VerificationReport, TheoremError> {
    let start = Instant::now();
    let grp = TruncatedGroup::new(ring, n)?;
    let (_, left) = abelianization(&grp.full()?)?;
    let (_, sub) = abelianization(&grp.substitution()?)?;
    let additive = AbelianType::new(ring.additive_invariants().expect("packed rings are finite"))?;
    Ok(VerificationReport::new(
        "abelianization_splitting",
        &[("ring", ring.to_string()), ("n", n.to_string())],
        additive.product(&sub),
        left,
    )
    .with_elapsed(start.elapsed()))
}

/// Least `k` with `x^k` in `d`.
fn image_order(grp: TruncatedGroup, d: &SubgroupTable, x: PackedElement) -> u64 {
    let mut y = x;
    let mut k = 1;
    while !d.contains(y) {
        y = grp.mul(y, x);
        k += 1;
    }
    k
}

fn nottingham_type(level: usize) -> Result<AbelianType, TheoremError> {
    let grp = TruncatedGroup::binary(level)?;
    Ok(abelianization(&grp.substitution()?)?.1)
}

/// Abelianization of `TN_n(F2)` with the level from which it stays
/// `{4,2,2}`, and the relations on the images `b1`, `b1 b2`, `b4` of
/// `e_1`, `e_1 e_2`, `e_4`.
pub fn verify_nottingham_abelianization(n: usize) -> Result<Vec<VerificationReport>, TheoremError> {
    let start = Instant::now();
    let target = AbelianType::new(vec![4, 2, 2])?;
    let types: Vec<AbelianType> = (1..=n).map(nottingham_type).collect::<Result<_, _>>()?;
    let n0 = (1..=n)
        .find(|&m| types[m - 1..].iter().all(|t| *t == target))
        .map_or("none".to_string(), |m| m.to_string());
    let mut out = vec![VerificationReport::new(
        "nottingham_abelianization",
        &[("n", n.to_string()), ("n0", n0)],
        &target,
        &types[n - 1],
    )
    .with_elapsed(start.elapsed())];

    let start = Instant::now();
    let grp = TruncatedGroup::binary(n)?;
    let tn = grp.substitution()?;
    let (d, _) = abelianization(&tn)?;
    let (e1, e2, e4) = (grp.elem_e(1, 1), grp.elem_e(2, 1), grp.elem_e(4, 1));
    let e1e2 = grp.mul(e1, e2);
    for (name, x, bound) in [("b1", e1, 4u64), ("b1b2", e1e2, 2), ("b4", e4, 2)] {
        let k = image_order(grp, &d, x);
        let computed = if bound % k == 0 { format!("order divides {bound}") } else { format!("order {k}") };
        out.push(
            VerificationReport::new(
                "nottingham_relation",
                &[("n", n.to_string()), ("image", name.to_string()), ("order", k.to_string())],
                format!("order divides {bound}"),
                computed,
            )
            .with_elapsed(start.elapsed()),
        );
    }

    // b1, b1b2 and b4 generate the quotient once e4 is visible.
    if n >= 5 {
        let mut gens = vec![e1, e1e2, e4];
        gens.extend_from_slice(d.generators());
        let span = SubgroupTable::closure(grp, &gens)?;
        let index = tn.order() / span.order();
        out.push(
            VerificationReport::new(
                "nottingham_generators",
                &[("n", n.to_string())],
                "index 1",
                format!("index {index}"),
            )
            .with_elapsed(start.elapsed()),
        );
    }
    Ok(out)
}

/// Abelianizations of `TR_n` and `TN_n` over F2 for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub riordan: Vec<AbelianType>,
    pub nottingham: Vec<AbelianType>,
    /// Least level from which both stay at their limits through `n_max`.
    pub n0: Option<usize>,
    pub report: VerificationReport,
}

pub fn abelianization_stabilization(n_max: usize) -> Result<StabilizationReport, TheoremError> {
    let start = Instant::now();
    let tr_target = AbelianType::new(vec![4, 2, 2, 2])?;
    let tn_target = AbelianType::new(vec![4, 2, 2])?;
    let mut riordan = Vec::new();
    let mut nottingham = Vec::new();
    for n in 1..=n_max {
        let grp = TruncatedGroup::binary(n)?;
        let full = grp.full()?;
        let d = lower_central_term(grp, &grp.generators(), 2)?;
        riordan.push(quotient_abelian_invariants(&full, &d)?);
        nottingham.push(nottingham_type(n)?);
    }
    let ok = |m: usize| riordan[m - 1] == tr_target && nottingham[m - 1] == tn_target;
    let n0 = (1..=n_max).find(|&m| (m..=n_max).all(ok));
    let show = |a: &AbelianType, b: &AbelianType| format!("TR {a}, TN {b}");
    let report = VerificationReport::new(
        "abelianization_stabilization",
        &[("n_max", n_max.to_string()), ("n0", n0.map_or("none".to_string(), |m| m.to_string()))],
        show(&tr_target, &tn_target),
        show(&riordan[n_max - 1], &nottingham[n_max - 1]),
    )
    .with_elapsed(start.elapsed());
    Ok(StabilizationReport { riordan, nottingham, n0, report })
}
