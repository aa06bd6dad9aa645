use std::time::Instant;

use super::{appell_invariants_for_index, TheoremError, VerificationReport};
use crate::groupkit::{
    abelian_invariants, lower_central_term, quotient_abelian_invariants, AbelianType, PackedElement,
    SubgroupTable, TruncatedGroup,
};

/// `TA_N` enumerated from `a_m`, `m` odd.
fn appell_table(big_n: usize) -> Result<SubgroupTable, TheoremError> {
    let grp = TruncatedGroup::binary(big_n)?;
    let gens: Vec<PackedElement> = (1..=big_n)
        .step_by(2)
        .map(|m| grp.elem_a(m, 1))
        .collect::<Result<_, _>>()?;
    Ok(SubgroupTable::closure(grp, &gens)?)
}

fn engine_invariants(big_n: usize) -> Result<AbelianType, TheoremError> {
    Ok(abelian_invariants(&appell_table(big_n)?)?)
}

/// For each table index `N`: the closed form against the engine's invariants
/// of `TA_N`, and whether `TA_(N+1) -> TA_N` splits (detected as
/// `TA_(N+1) = TA_N x Z2`), which should happen exactly for even `N`.
pub fn verify_appell_classification(indices: &[usize]) -> Result<Vec<VerificationReport>, TheoremError> {
    let mut out = Vec::new();
    for &big_n in indices {
        let start = Instant::now();
        let here = engine_invariants(big_n)?;
        out.push(
            VerificationReport::new(
                "appell_invariants",
                &[("n", big_n.to_string())],
                appell_invariants_for_index(big_n as u64),
                &here,
            )
            .with_elapsed(start.elapsed()),
        );

        let start = Instant::now();
        let above = engine_invariants(big_n + 1)?;
        let split = above == here.product(&AbelianType::elementary(2, 1));
        let label = |s: bool| if s { "split" } else { "non-split" };
        out.push(
            VerificationReport::new(
                "appell_extension_split",
                &[("n", big_n.to_string())],
                label(big_n % 2 == 0),
                label(split),
            )
            .with_elapsed(start.elapsed()),
        );
    }
    Ok(out)
}

/// Appell elements of `gamma_(i+1)(TR_n)` against the truncated image of
/// `A_(2i-1)`: Appell pairs with `g_1 = ... = g_(2i-1) = 0`.
pub fn verify_appell_gamma_intersection(n: usize, i: usize) -> Result<VerificationReport, TheoremError> {
    if i == 0 {
        return Err(TheoremError::ZeroIndex);
    }
    let start = Instant::now();
    let grp = TruncatedGroup::binary(n)?;
    let term = lower_central_term(grp, &grp.generators(), i + 1)?;
    let meet: Vec<PackedElement> = term.elements().iter().copied().filter(|&x| grp.is_appell(x)).collect();

    // g_k sits in bit k-1 of an Appell code.
    let vanish = (2 * i - 1).min(n);
    let describe = |count: usize, lowest: Option<usize>| match lowest {
        Some(d) => format!("{count} elements, lowest g-degree {d}"),
        None => format!("{count} elements"),
    };
    let predicted_count = 1usize << (n - vanish);
    let predicted_lowest = (vanish < n).then_some(vanish + 1);
    let all_vanish = meet.iter().all(|x| x.0 & ((1u64 << vanish) - 1) == 0);
    let lowest = meet
        .iter()
        .filter(|x| !x.is_identity())
        .map(|x| x.0.trailing_zeros() as usize + 1)
        .min();
    let computed = if all_vanish && meet.len() == predicted_count {
        describe(meet.len(), lowest)
    } else {
        format!("{}, not all vanishing below degree {}", describe(meet.len(), lowest), vanish + 1)
    };
    Ok(VerificationReport::new(
        "appell_gamma_intersection",
        &[("n", n.to_string()), ("i", i.to_string())],
        describe(predicted_count, predicted_lowest),
        computed,
    )
    .with_elapsed(start.elapsed()))
}

/// Appell subgroup at `level` whose `g` vanishes in degrees `1..=d`.
fn appell_tail(grp: TruncatedGroup, d: usize) -> Result<SubgroupTable, TheoremError> {
    let gens: Vec<PackedElement> = (d + 1..=grp.level())
        .map(|k| grp.elem_a(k, 1))
        .collect::<Result<_, _>>()?;
    Ok(SubgroupTable::closure(grp, &gens)?)
}

/// `A_(2n-1) / A_(2n+1) = Z2 x Z2` at a truncation level, and `A / A_1 = Z2`.
pub fn verify_snake_corollary(n: usize, level: usize) -> Result<Vec<VerificationReport>, TheoremError> {
    if n == 0 {
        return Err(TheoremError::ZeroIndex);
    }
    if level < 2 * n + 2 {
        return Err(TheoremError::LevelTooSmall { level, needed: 2 * n + 2 });
    }
    let start = Instant::now();
    let grp = TruncatedGroup::binary(level)?;
    let upper = appell_tail(grp, 2 * n - 1)?;
    let lower = appell_tail(grp, 2 * n + 1)?;
    let q = quotient_abelian_invariants(&upper, &lower)?;
    let first = VerificationReport::new(
        "appell_filtration_quotient",
        &[("n", n.to_string()), ("level", level.to_string())],
        AbelianType::elementary(2, 2),
        q,
    )
    .with_elapsed(start.elapsed());

    let start = Instant::now();
    let q = quotient_abelian_invariants(&grp.appell()?, &appell_tail(grp, 1)?)?;
    let second = VerificationReport::new(
        "appell_top_quotient",
        &[("level", level.to_string())],
        AbelianType::elementary(2, 1),
        q,
    )
    .with_elapsed(start.elapsed());
    Ok(vec![first, second])
}
