//! Closed forms for the structural statements about truncated Riordan groups
//! over F2, and procedures that check each one against the group engine.

mod abelianization;
mod appell;
mod closed_form;
mod identities;
mod lcs;
mod shapiro;
mod structure;
mod suite;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::fps::FpsError;
use crate::groupkit::GroupError;
use crate::riordan::RiordanError;

pub use abelianization::{
    abelianization_stabilization, verify_abelianization_splitting, verify_nottingham_abelianization,
    StabilizationReport,
};
pub use appell::{verify_appell_classification, verify_appell_gamma_intersection, verify_snake_corollary};
pub use closed_form::{
    appell_invariants_closed_form, appell_invariants_for_index, order_of_generator, LcsPrediction,
};
pub use identities::{verify_commutator_identity_sweep, verify_depth_parity_sweep};
pub use lcs::{lcs_prediction_onset, verify_lcs_quotients, LcsReport, LcsRow};
pub use shapiro::{shapiro_membership, verify_shapiro_closure, ShapiroCondition, ShapiroVerdict};
pub use structure::{
    dihedral_embedding, infinite_dihedral_relations, verify_tr2_structure, verify_tr3_structure,
};
pub use suite::{run_suites, Suite, SuiteOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("generators are odd-indexed, got m = {0}")]
    EvenGenerator(u64),
    #[error("generator index m = {m} must lie in 1..={n}")]
    GeneratorOutOfRange { m: u64, n: u64 },
    #[error("need α₁..α₆ and c₁ (g through degree 1, f through degree 7)")]
    MissingCoefficients,
    #[error("expected g₀ = 1, f₀ = 0 and f₁ = 1")]
    NotUnitDiagonal,
    #[error("level {level} is too small, need at least {needed}")]
    LevelTooSmall { level: usize, needed: usize },
    #[error("lower central index must be at least 1")]
    ZeroIndex,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Series(#[from] FpsError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Riordan(#[from] RiordanError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// One checked statement: what was predicted, what the engine found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: BTreeMap<String, String>,
    pub predicted: String,
    pub computed: String,
    pub verdict: Verdict,
    #[serde(rename = "elapsed_ms", serialize_with = "millis", skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<Duration>,
}

fn millis<S: Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_str(&d.as_millis().to_string()),
        None => s.serialize_none(),
    }
}

impl VerificationReport {
    /// The verdict is pass exactly when the two strings agree.
    pub fn new(
        claim: &str,
        parameters: &[(&str, String)],
        predicted: impl fmt::Display,
        computed: impl fmt::Display,
    ) -> Self {
        let predicted = predicted.to_string();
        let computed = computed.to_string();
        let verdict = if predicted == computed { Verdict::Pass } else { Verdict::Fail };
        VerificationReport {
            claim: claim.to_string(),
            parameters: parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            predicted,
            computed,
            verdict,
            elapsed: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn with_elapsed(mut self, d: Duration) -> Self {
        self.elapsed = Some(d);
        self
    }

    /// Parameters as `k=v` pairs in key order.
    pub fn parameter_string(&self) -> String {
        let v: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        v.join(" ")
    }

    /// Ordering key for aggregated output: claim, then parameters with
    /// numeric values compared as numbers.
    pub fn sort_key(&self) -> (String, Vec<(String, u64, String)>) {
        let params = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), v.parse().unwrap_or(u64::MAX), v.clone()))
            .collect();
        (self.claim.clone(), params)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}] predicted {} computed {}",
            self.verdict,
            self.claim,
            self.parameter_string(),
            self.predicted,
            self.computed
        )
    }
}
