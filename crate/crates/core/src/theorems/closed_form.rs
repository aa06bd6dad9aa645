use serde::Serialize;

use super::TheoremError;
use crate::groupkit::AbelianType;

/// Invariant factors of `TA_N(F2)` for table index `N`.
///
/// `TA_N` has one generator `a_m` for each odd `m <= N`, of order
/// `2^(1 + floor(log2(N/m)))`, and these orders are the invariant factors.
pub fn appell_invariants_for_index(big_n: u64) -> AbelianType {
    let factors = (1..=big_n)
        .step_by(2)
        .map(|m| order_of_generator(big_n, m).expect("odd m within range"))
        .collect();
    AbelianType::new(factors).expect("powers of two")
}

/// Invariant factors of `TA_(n+1)(F2)`; `n = 0` gives `TA_1`.
pub fn appell_invariants_closed_form(n: u64) -> AbelianType {
    appell_invariants_for_index(n + 1)
}

/// Order of `a_m = (1 + t^m, t)` in `TA_N(F2)`: `2^(1 + floor(log2(N/m)))`.
pub fn order_of_generator(big_n: u64, m: u64) -> Result<u64, TheoremError> {
    if m == 0 || m > big_n {
        return Err(TheoremError::GeneratorOutOfRange { m, n: big_n });
    }
    if m % 2 == 0 {
        return Err(TheoremError::EvenGenerator(m));
    }
    // floor(log2(N/m)) is the largest s with m * 2^s <= N.
    let s = (big_n / m).ilog2();
    Ok(1u64 << (s + 1))
}

/// Predicted lower central quotient `gamma_i / gamma_(i+1)` of the Riordan
/// group over F2: `Z4 x Z2^3` for `i = 1`, `Z2^4` for even `i`, `Z2^6` for
/// odd `i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcsPrediction {
    pub index: usize,
    pub factors: AbelianType,
}

impl LcsPrediction {
    pub fn for_index(i: usize) -> Result<Self, TheoremError> {
        let factors = match i {
            0 => return Err(TheoremError::ZeroIndex),
            1 => AbelianType::new(vec![4, 2, 2, 2]).expect("prime powers"),
            i if i % 2 == 0 => AbelianType::elementary(2, 4),
            _ => AbelianType::elementary(2, 6),
        };
        Ok(LcsPrediction { index: i, factors })
    }

    /// Names of the generating images in the presentation of the
    /// abelianization: `a` and `b_1, b_1 b_2, b_4`.
    pub fn abelianization_generators() -> [&'static str; 4] {
        ["a", "b1", "b1b2", "b4"]
    }
}
