use std::time::Instant;

use serde::Serialize;

use super::{LcsPrediction, TheoremError, VerificationReport};
use crate::groupkit::{
    lower_central_series, lower_central_term, quotient_abelian_invariants, AbelianType, GroupError,
    SubgroupTable, TruncatedGroup,
};

/// One lower central quotient `gamma_i / gamma_(i+1)` at a fixed level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcsRow {
    pub index: usize,
    /// `|gamma_i|` as a decimal string.
    pub term_order: String,
    pub quotient: AbelianType,
    pub predicted: AbelianType,
    /// Whether the quotient has the same order one level up; `None` when the
    /// next level is beyond the enumeration cap.
    pub stable: Option<bool>,
}

impl LcsRow {
    pub fn matches(&self) -> bool {
        self.quotient == self.predicted
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcsReport {
    pub level: usize,
    pub rows: Vec<LcsRow>,
    /// `|gamma_1|, |gamma_2|, ...` down to the first trivial term or `depth + 1`.
    pub term_orders: Vec<String>,
    /// Indices whose quotient is unchanged at the next level.
    pub window: Vec<usize>,
    pub reports: Vec<VerificationReport>,
}

/// Order of `gamma_i(TR_level)` without enumerating the whole group; `None`
/// above the enumeration cap.
fn term_order(level: usize, i: usize) -> Result<Option<u64>, TheoremError> {
    if i == 1 {
        return Ok(Some(TruncatedGroup::binary(level)?.order()));
    }
    let grp = TruncatedGroup::binary(level)?;
    match lower_central_term(grp, &grp.generators(), i) {
        Ok(t) => Ok(Some(t.order())),
        Err(GroupError::SizeCap { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Lower central quotients of `TR_n(F2)` for `i = 1..=depth`, each compared
/// with the prediction when it is already stable one level up, plus the
/// width bound (every quotient needs at most 6 generators).
///
/// The truncation map carries `gamma_i` onto `gamma_i`, so the quotient at
/// level `n + 1` maps onto the one at `n`; equal orders mean equal quotients.
pub fn verify_lcs_quotients(n: usize, depth: usize) -> Result<LcsReport, TheoremError> {
    let start = Instant::now();
    let grp = TruncatedGroup::binary(n)?;
    let full = grp.full()?;
    let series = lower_central_series(&full, depth + 1)?;
    let trivial = SubgroupTable::trivial(grp);
    let term = |i: usize| series.get(i - 1).unwrap_or(&trivial);

    let mut next_orders: Vec<Option<u64>> = Vec::new();
    for i in 1..=depth + 1 {
        next_orders.push(term_order(n + 1, i)?);
    }

    let mut rows = Vec::new();
    let mut reports = Vec::new();
    let mut window = Vec::new();
    for i in 1..=depth {
        let q = quotient_abelian_invariants(term(i), term(i + 1))?;
        let stable = match (next_orders[i - 1], next_orders[i]) {
            (Some(a), Some(b)) => Some((a / b) as u128 == q.order()),
            _ => None,
        };
        let predicted = LcsPrediction::for_index(i)?.factors;
        if stable == Some(true) {
            window.push(i);
            reports.push(
                VerificationReport::new(
                    "lcs_quotient",
                    &[("n", n.to_string()), ("i", i.to_string())],
                    &predicted,
                    &q,
                )
                .with_elapsed(start.elapsed()),
            );
        }
        rows.push(LcsRow { index: i, term_order: term(i).order().to_string(), quotient: q, predicted, stable });
    }

    let width = rows.iter().map(|r| r.quotient.rank()).max().unwrap_or(0);
    let bound = "width <= 6";
    reports.push(
        VerificationReport::new(
            "lcs_width",
            &[("n", n.to_string()), ("depth", depth.to_string()), ("width", width.to_string())],
            bound,
            if width <= 6 { bound.to_string() } else { format!("width {width}") },
        )
        .with_elapsed(start.elapsed()),
    );

    Ok(LcsReport {
        level: n,
        rows,
        term_orders: series.iter().map(|t| t.order().to_string()).collect(),
        window,
        reports,
    })
}

/// `gamma_i / gamma_(i+1)` of `TR_level`, or `None` above the cap.
fn quotient_at(level: usize, i: usize) -> Result<Option<AbelianType>, TheoremError> {
    let grp = TruncatedGroup::binary(level)?;
    let gens = grp.generators();
    let upper = match lower_central_term(grp, &gens, i) {
        Ok(t) => t,
        Err(GroupError::SizeCap { .. }) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let lower = lower_central_term(grp, &gens, i + 1)?;
    Ok(Some(quotient_abelian_invariants(&upper, &lower)?))
}

/// First level `>= from` at which `gamma_i / gamma_(i+1)` of `TR_level`
/// equals the prediction, searching upward until the enumeration cap.
pub fn lcs_prediction_onset(i: usize, from: usize) -> Result<VerificationReport, TheoremError> {
    let start = Instant::now();
    let predicted = LcsPrediction::for_index(i)?.factors;
    let mut last = None;
    let mut level = from.max(1);
    loop {
        match quotient_at(level, i)? {
            None => break,
            Some(q) if q == predicted => {
                let next = match quotient_at(level + 1, i)? {
                    Some(q2) if q2 == q => "stable",
                    Some(_) => "changes",
                    None => "beyond cap",
                };
                return Ok(VerificationReport::new(
                    "lcs_quotient_onset",
                    &[("i", i.to_string()), ("first_level", level.to_string()), ("next_level", next.to_string())],
                    &predicted,
                    &q,
                )
                .with_elapsed(start.elapsed()));
            }
            Some(q) => last = Some((level, q)),
        }
        level += 1;
    }
    let (searched, computed) = match last {
        Some((l, q)) => (format!("{}..={l}", from.max(1)), q.to_string()),
        None => ("none".to_string(), "beyond cap".to_string()),
    };
    Ok(VerificationReport::new(
        "lcs_quotient_onset",
        &[("i", i.to_string()), ("searched", searched)],
        &predicted,
        computed,
    )
    .with_elapsed(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_level() {
        let r = verify_lcs_quotients(2, 3).unwrap();
        assert_eq!(r.term_orders, vec!["8", "2", "1"]);
        assert_eq!(r.rows[0].quotient.to_string(), "{2,2}");
        assert_eq!(r.rows[1].quotient.to_string(), "{2}");
        assert!(r.rows[2].quotient.factors().is_empty());
    }

    #[test]
    fn onset_of_first_quotient() {
        let r = lcs_prediction_onset(1, 1).unwrap();
        assert!(r.passed(), "{r}");
        let first: usize = r.parameters["first_level"].parse().unwrap();
        assert!(first <= 8);
        assert_eq!(r.parameters["next_level"], "stable");
    }
}
