use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::FpsError;

/// Largest modulus accepted for finite coefficient rings. Keeps every
/// residue product inside a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Coefficient ring of a truncated series.
///
/// JSON form: `{"ring":"F2"}`, `{"ring":"Zmod","m":4}` or `{"ring":"Z"}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RingLiteral", into = "RingLiteral")]
pub enum RingSpec {
    /// The prime field F_p.
    PrimeField { p: u64 },
    /// Integers modulo m.
    ModRing { m: u64 },
    /// The integers, with arbitrary precision coefficients.
    Integers,
}

#[derive(Serialize, Deserialize)]
struct RingLiteral {
    ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
}

impl TryFrom<RingLiteral> for RingSpec {
    type Error = FpsError;

    fn try_from(lit: RingLiteral) -> Result<Self, FpsError> {
        match (lit.ring.as_str(), lit.m) {
            ("Zmod", Some(m)) => RingSpec::zmod(m),
            ("Zmod", None) => Err(FpsError::UnknownRing("Zmod without \"m\"".into())),
            (name, _) => name.parse(),
        }
    }
}

impl From<RingSpec> for RingLiteral {
    fn from(r: RingSpec) -> Self {
        match r {
            RingSpec::PrimeField { p } => RingLiteral { ring: format!("F{p}"), m: None },
            RingSpec::ModRing { m } => RingLiteral { ring: "Zmod".into(), m: Some(m) },
            RingSpec::Integers => RingLiteral { ring: "Z".into(), m: None },
        }
    }
}

impl RingSpec {
    pub const F2: RingSpec = RingSpec::PrimeField { p: 2 };

    pub fn prime_field(p: u64) -> Result<Self, FpsError> {
        if !is_prime(p) || p >= MAX_MODULUS {
            return Err(FpsError::NotPrime(p));
        }
        Ok(RingSpec::PrimeField { p })
    }

    pub fn zmod(m: u64) -> Result<Self, FpsError> {
        if !(2..MAX_MODULUS).contains(&m) {
            return Err(FpsError::InvalidModulus(m));
        }
        Ok(RingSpec::ModRing { m })
    }

    /// Modulus of a finite ring, `None` for the integers.
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            RingSpec::PrimeField { p } => Some(p),
            RingSpec::ModRing { m } => Some(m),
            RingSpec::Integers => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.modulus().is_some()
    }

    /// Reduces an integer into the canonical range of the ring.
    pub fn reduce(&self, x: &BigInt) -> BigInt {
        match self.modulus() {
            Some(m) => x.mod_floor(&BigInt::from(m)),
            None => x.clone(),
        }
    }

    pub(crate) fn reduce_u64(&self, x: &BigInt) -> u64 {
        let m = self.modulus().expect("finite ring");
        x.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits in u64")
    }

    pub fn is_unit(&self, x: &BigInt) -> bool {
        match self.modulus() {
            Some(m) => self.reduce(x).gcd(&BigInt::from(m)).is_one(),
            None => x.abs().is_one(),
        }
    }

    /// Number of units, `None` for the integers (which have two).
    pub fn unit_count(&self) -> Option<u64> {
        self.modulus().map(|m| (1..m).filter(|&x| x.gcd(&m) == 1).count() as u64)
    }

    /// Invariant factors of the additive group of a finite ring, as prime
    /// powers in non-increasing order.
    pub fn additive_invariants(&self) -> Option<Vec<u64>> {
        let m = self.modulus()?;
        let mut factors: Vec<u64> = factorize(m)
            .into_iter()
            .map(|(p, e)| p.pow(e))
            .collect();
        factors.sort_unstable_by(|a, b| b.cmp(a));
        Some(factors)
    }

}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RingSpec::PrimeField { p } => write!(f, "F{p}"),
            RingSpec::ModRing { m } => write!(f, "Z/{m}"),
            RingSpec::Integers => write!(f, "Z"),
        }
    }
}

/// Accepts `F2`, `F3`, `Z/4`, `Zmod4`, `Z4` and `Z`.
impl FromStr for RingSpec {
    type Err = FpsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_num = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| FpsError::UnknownRing(s.to_string()))
        };
        if s == "Z" {
            Ok(RingSpec::Integers)
        } else if let Some(rest) = s.strip_prefix('F') {
            RingSpec::prime_field(parse_num(rest)?)
        } else if let Some(rest) = s
            .strip_prefix("Z/")
            .or_else(|| s.strip_prefix("Zmod"))
            .or_else(|| s.strip_prefix('Z'))
        {
            RingSpec::zmod(parse_num(rest)?)
        } else {
            Err(FpsError::UnknownRing(s.to_string()))
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}
