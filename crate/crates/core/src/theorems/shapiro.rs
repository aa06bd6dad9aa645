use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{TheoremError, VerificationReport};
use crate::fps::RingSpec;
use crate::riordan::RiordanPair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShapiroCondition {
    C1,
    Alpha1,
    Alpha2,
    Alpha4Parity,
    Alpha6Parity,
}

impl fmt::Display for ShapiroCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapiroCondition::C1 => "c₁ ≠ 0",
            ShapiroCondition::Alpha1 => "α₁ ≠ 0",
            ShapiroCondition::Alpha2 => "α₂ ≠ 0",
            ShapiroCondition::Alpha4Parity => "α₄ parity",
            ShapiroCondition::Alpha6Parity => "α₆ parity",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapiroVerdict {
    pub member: bool,
    /// Conditions that fail, in a fixed order; empty for members.
    pub failed: Vec<ShapiroCondition>,
}

impl fmt::Display for ShapiroVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.member {
            return f.write_str("member");
        }
        let reasons: Vec<String> = self.failed.iter().map(|c| c.to_string()).collect();
        write!(f, "non-member ({})", reasons.join(", "))
    }
}

/// Membership of `(g, f)` with `g = 1 + c_1 t + ...` and
/// `f = t(1 + alpha_1 t + alpha_2 t^2 + ...)` in the commutator subgroup of
/// the integer unit-diagonal Riordan group: `c_1 = 0`, `alpha_1 = alpha_2 = 0`
/// and `alpha_3 = alpha_4 = alpha_6 (mod 2)`.
pub fn shapiro_membership(g: &[BigInt], f: &[BigInt]) -> Result<ShapiroVerdict, TheoremError> {
    if g.len() < 2 || f.len() < 8 {
        return Err(TheoremError::MissingCoefficients);
    }
    if !g[0].is_one() || !f[0].is_zero() || !f[1].is_one() {
        return Err(TheoremError::NotUnitDiagonal);
    }
    let alpha = |k: usize| &f[k + 1];
    let parity = |x: &BigInt| x.is_odd();
    let mut failed = Vec::new();
    if !g[1].is_zero() {
        failed.push(ShapiroCondition::C1);
    }
    if !alpha(1).is_zero() {
        failed.push(ShapiroCondition::Alpha1);
    }
    if !alpha(2).is_zero() {
        failed.push(ShapiroCondition::Alpha2);
    }
    if parity(alpha(4)) != parity(alpha(3)) {
        failed.push(ShapiroCondition::Alpha4Parity);
    }
    if parity(alpha(6)) != parity(alpha(3)) {
        failed.push(ShapiroCondition::Alpha6Parity);
    }
    Ok(ShapiroVerdict { member: failed.is_empty(), failed })
}

fn verdict_of(p: &RiordanPair) -> bool {
    shapiro_membership(&p.g().coeffs(), &p.f().coeffs())
        .expect("order 7 unit-diagonal pair")
        .member
}

fn random_pair(rng: &mut ChaCha8Rng, member: bool) -> RiordanPair {
    let mut g: Vec<i64> = (0..8).map(|_| rng.gen_range(-3..=3)).collect();
    let mut f: Vec<i64> = (0..8).map(|_| rng.gen_range(-3..=3)).collect();
    g[0] = 1;
    f[0] = 0;
    f[1] = 1;
    if member {
        g[1] = 0;
        f[2] = 0;
        f[3] = 0;
        let a3 = f[4].rem_euclid(2);
        f[5] = 2 * f[5].div_euclid(2) + a3;
        f[7] = 2 * f[7].div_euclid(2) + a3;
    }
    RiordanPair::from_i64s(RingSpec::Integers, &g, &f, 7).expect("unit-diagonal")
}

/// The predicate describes a subgroup, so multiplying by a member on either
/// side must not change membership. Spot-checked on random integer pairs
/// modulo `t^8`.
pub fn verify_shapiro_closure(samples: usize, seed: u64) -> Result<VerificationReport, TheoremError> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0usize;
    let mut members_seen = 0usize;
    for s in 0..samples {
        let m = random_pair(&mut rng, true);
        let x = random_pair(&mut rng, s % 2 == 0);
        let base = verdict_of(&x);
        members_seen += base as usize;
        for y in [x.mul(&m)?, m.mul(&x)?, x.mul(&m.inverse())?] {
            if verdict_of(&y) != base {
                violations += 1;
            }
        }
    }
    let computed = if violations == 0 { "0 violations".to_string() } else { format!("{violations} violations") };
    Ok(VerificationReport::new(
        "shapiro_closure",
        &[
            ("samples", samples.to_string()),
            ("seed", seed.to_string()),
            ("members", members_seen.to_string()),
        ],
        "0 violations",
        computed,
    )
    .with_elapsed(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn documented_vectors() {
        let id = shapiro_membership(&big(&[1, 0]), &big(&[0, 1, 0, 0, 0, 0, 0, 0])).unwrap();
        assert!(id.member);
        assert_eq!(id.to_string(), "member");
        let a1 = shapiro_membership(&big(&[1, 1]), &big(&[0, 1, 0, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(a1.failed, vec![ShapiroCondition::C1]);
        assert_eq!(a1.to_string(), "non-member (c₁ ≠ 0)");
        let odd = shapiro_membership(&big(&[1, 0, 1]), &big(&[0, 1, 0, 0, 1, 1, 0, 1])).unwrap();
        assert!(odd.member);
        let a6 = shapiro_membership(&big(&[1, 0]), &big(&[0, 1, 0, 0, 1, 1, 0, 0])).unwrap();
        assert_eq!(a6.failed, vec![ShapiroCondition::Alpha6Parity]);
        assert_eq!(a6.failed[0].to_string(), "α₆ parity");
    }

    #[test]
    fn input_checks() {
        let err = shapiro_membership(&big(&[1]), &big(&[0, 1, 0, 0, 0, 0, 0, 0])).unwrap_err();
        assert_eq!(err.to_string(), "need α₁..α₆ and c₁ (g through degree 1, f through degree 7)");
        assert!(shapiro_membership(&big(&[1, 0]), &big(&[0, 1, 0])).is_err());
        assert!(shapiro_membership(&big(&[2, 0]), &big(&[0, 1, 0, 0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn closure_spot_check() {
        let r = verify_shapiro_closure(200, 7).unwrap();
        assert!(r.passed(), "{r}");
    }
}
