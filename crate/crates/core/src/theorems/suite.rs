use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::*;
use crate::fps::RingSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Appell,
    Lcs,
    Abelianization,
    Dihedral,
    Shapiro,
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Appell,
        Suite::Lcs,
        Suite::Abelianization,
        Suite::Dihedral,
        Suite::Shapiro,
        Suite::Identities,
    ];

    /// Parses a comma-separated list; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>, TheoremError> {
        let mut out = Vec::new();
        for name in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            if name == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(name.parse()?);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Suite {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "appell" => Suite::Appell,
            "lcs" => Suite::Lcs,
            "abelianization" => Suite::Abelianization,
            "dihedral" => Suite::Dihedral,
            "shapiro" => Suite::Shapiro,
            "identities" => Suite::Identities,
            _ => return Err(TheoremError::UnknownSuite(s.to_string())),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Appell => "appell",
            Suite::Lcs => "lcs",
            Suite::Abelianization => "abelianization",
            Suite::Dihedral => "dihedral",
            Suite::Shapiro => "shapiro",
            Suite::Identities => "identities",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Largest truncation level for the F2 checks.
    pub n_max: usize,
    /// Number of lower central quotients examined.
    pub depth: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n_max: 10, depth: 3 }
    }
}

type Task = Box<dyn Fn() -> Result<Vec<VerificationReport>, TheoremError> + Send + Sync>;

fn one<F>(f: F) -> Task
where
    F: Fn() -> Result<VerificationReport, TheoremError> + Send + Sync + 'static,
{
    Box::new(move || f().map(|r| vec![r]))
}

fn many<F>(f: F) -> Task
where
    F: Fn() -> Result<Vec<VerificationReport>, TheoremError> + Send + Sync + 'static,
{
    Box::new(f)
}

fn shapiro_vector(name: &'static str, g: &'static [i64], f: &'static [i64], expected: &'static str) -> Task {
    one(move || {
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let v = shapiro_membership(&big(g), &big(f))?;
        Ok(VerificationReport::new("shapiro_vector", &[("input", name.to_string())], expected, v))
    })
}

fn tasks(suite: Suite, o: SuiteOptions) -> Vec<Task> {
    let n_max = o.n_max.max(1);
    let lcs_level = n_max.clamp(2, 10);
    match suite {
        Suite::Appell => vec![
            many(move || verify_appell_classification(&(1..=n_max).collect::<Vec<_>>())),
            many(|| verify_snake_corollary(1, 5)),
            many(|| verify_snake_corollary(2, 7)),
        ],
        Suite::Lcs => {
            let depth = o.depth.max(1);
            let mut t = vec![many(move || Ok(verify_lcs_quotients(lcs_level, depth)?.reports))];
            for i in 1..=depth.min(3) {
                t.push(one(move || lcs_prediction_onset(i, 1)));
            }
            for level in lcs_level.saturating_sub(2).max(3)..=lcs_level {
                for i in 1..=3 {
                    t.push(one(move || verify_appell_gamma_intersection(level, i)));
                }
            }
            t
        }
        Suite::Abelianization => {
            let mut t = Vec::new();
            for (ring, top) in [(RingSpec::F2, 6), (RingSpec::PrimeField { p: 3 }, 4), (RingSpec::ModRing { m: 4 }, 3)] {
                for n in 1..=top.min(n_max) {
                    t.push(one(move || verify_abelianization_splitting(ring, n)));
                }
            }
            t.push(many(move || verify_nottingham_abelianization(lcs_level)));
            t.push(one(move || Ok(abelianization_stabilization(lcs_level)?.report)));
            t
        }
        Suite::Dihedral => {
            let mut t = vec![many(verify_tr2_structure), many(verify_tr3_structure)];
            for n in 1..=6 {
                t.push(many(move || Ok(dihedral_embedding(n)?.2)));
            }
            for level in 2..=10 {
                t.push(many(move || infinite_dihedral_relations(level)));
            }
            t
        }
        Suite::Shapiro => vec![
            shapiro_vector("identity", &[1, 0], &[0, 1, 0, 0, 0, 0, 0, 0], "member"),
            shapiro_vector("(1+t, t)", &[1, 1], &[0, 1, 0, 0, 0, 0, 0, 0], "non-member (c₁ ≠ 0)"),
            shapiro_vector("(1+t^2, t(1+t^3+t^4+t^6))", &[1, 0, 1], &[0, 1, 0, 0, 1, 1, 0, 1], "member"),
            shapiro_vector("(1, t(1+t^3+t^4))", &[1, 0], &[0, 1, 0, 0, 1, 1, 0, 0], "non-member (α₆ parity)"),
            one(|| verify_shapiro_closure(500, 1)),
        ],
        Suite::Identities => vec![
            one(|| verify_commutator_identity_sweep(12)),
            one(|| verify_depth_parity_sweep(12)),
        ],
    }
}

/// Runs the selected suites in parallel. Reports come back ordered by claim
/// and parameters; a check that errors becomes a failing report.
pub fn run_suites(suites: &[Suite], options: SuiteOptions) -> Vec<VerificationReport> {
    let all: Vec<(Suite, Task)> = suites
        .iter()
        .flat_map(|&s| tasks(s, options).into_iter().map(move |t| (s, t)))
        .collect();
    let mut reports: Vec<VerificationReport> = all
        .par_iter()
        .flat_map_iter(|(suite, task)| match task() {
            Ok(r) => r,
            Err(e) => vec![VerificationReport::new(
                "error",
                &[("suite", suite.to_string())],
                "completed",
                format!("error: {e}"),
            )],
        })
        .collect();
    reports.sort_by_cached_key(|r| r.sort_key());
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse_list("all").unwrap().len(), 6);
        assert_eq!(Suite::parse_list("shapiro,appell,shapiro").unwrap(), vec![Suite::Appell, Suite::Shapiro]);
        assert_eq!(
            Suite::parse_list("bogus").unwrap_err().to_string(),
            "unknown suite \"bogus\""
        );
    }

    #[test]
    fn small_suites_pass_and_are_ordered() {
        let opts = SuiteOptions { n_max: 5, depth: 2 };
        let r = run_suites(&[Suite::Shapiro, Suite::Identities, Suite::Dihedral], opts);
        assert!(r.iter().all(|x| x.passed()), "{r:#?}");
        let keys: Vec<_> = r.iter().map(|x| x.sort_key()).collect();
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    }
}
