use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{TheoremError, VerificationReport};
use crate::fps::{RingSpec, TruncatedSeries};
use crate::riordan::RiordanPair;

fn tally(claim: &str, params: &[(&str, String)], checked: usize, held: usize, start: Instant) -> VerificationReport {
    VerificationReport::new(claim, params, format!("{checked} of {checked} hold"), format!("{held} of {checked} hold"))
        .with_elapsed(start.elapsed())
}

/// `[(1 + t, t), (1, fbar)] = (1 + alpha t^k, t)` for
/// `f = t + alpha t^k + alpha t^(k+1)`, every `2 <= k <= n <= max_level`,
/// over F2 (`alpha` in {0, 1}) and over the integers (`alpha` in -2..=3).
pub fn verify_commutator_identity_sweep(max_level: usize) -> Result<VerificationReport, TheoremError> {
    let start = Instant::now();
    let mut checked = 0;
    let mut held = 0;
    let cases = [(RingSpec::F2, 0i64..=1), (RingSpec::Integers, -2..=3)];
    for (ring, alphas) in cases {
        for n in 2..=max_level {
            let x = RiordanPair::from_i64s(ring, &[1, 1], &[0, 1], n)?;
            for k in 2..=n {
                for alpha in alphas.clone() {
                    let a = BigInt::from(alpha);
                    let f = TruncatedSeries::variable(ring, n)
                        .add(&TruncatedSeries::monomial(ring, n, k, &a))?
                        .add(&TruncatedSeries::monomial(ring, n, k + 1, &a))?;
                    let y = RiordanPair::new(TruncatedSeries::one(ring, n), f.comp_inverse()?)?;
                    checked += 1;
                    if x.commutator(&y)? == RiordanPair::elem_a(ring, k, &a, n)? {
                        held += 1;
                    }
                }
            }
        }
    }
    Ok(tally("appell_commutator_identity", &[("max_level", max_level.to_string())], checked, held, start))
}

/// Over F2, `[a_m, e_i^-1]` is Appell and agrees with
/// `(1 + (m mod 2) t^(m+i), t)` modulo `t^(m+i+1)`, for all `m + i <= max`.
pub fn verify_depth_parity_sweep(max: usize) -> Result<VerificationReport, TheoremError> {
    let start = Instant::now();
    let ring = RingSpec::F2;
    let one = BigInt::one();
    let mut checked = 0;
    let mut held = 0;
    for m in 1..max {
        let a = RiordanPair::elem_a(ring, m, &one, max)?;
        for i in 1..=max - m {
            let e_inv = RiordanPair::elem_e(ring, i, &one, max).inverse();
            let c = a.commutator(&e_inv)?;
            let d = m + i;
            let g = c.g();
            let ok = c.is_appell()
                && (1..d).all(|j| g.coeff(j).is_zero())
                && g.coeff(d) == BigInt::from((m % 2) as u64);
            checked += 1;
            held += ok as usize;
        }
    }
    Ok(tally("appell_commutator_depth_parity", &[("max", max.to_string())], checked, held, start))
}
