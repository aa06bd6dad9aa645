//! Finite-group engine for unit-diagonal truncated Riordan groups over small
//! finite rings.
//!
//! An element of level `n` is encoded by its free coordinates
//! `(g_1..g_n, f_2..f_n)` as base-`m` digits, digit 0 being `g_1`. Over F2
//! the code is a `(2n-1)`-bit word and arithmetic runs on packed bits.

mod abelian;
mod codeset;
mod kernel;
mod subgroup;

use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::fps::{RingSpec, TruncatedSeries};
use crate::riordan::{RiordanError, RiordanPair};

pub use abelian::AbelianType;
pub use subgroup::{
    abelian_invariants, commutator_subgroup, commutator_subgroup_brute, lower_central_series,
    lower_central_term,
    normal_closure, order_census, quotient_abelian_invariants, quotient_census, OrderCensus,
    SubgroupTable,
};

/// Largest subgroup the engine will enumerate.
pub const MAX_GROUP_ORDER: u64 = 1 << 20;

/// Largest coefficient modulus accepted by the packed encoding.
pub const MAX_PACKED_MODULUS: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order exceeds the enumeration cap of {limit} elements")]
    SizeCap { limit: u64 },
    #[error("packed groups need level >= 1, got {0}")]
    LevelZero(usize),
    #[error("level {level} over {ring} does not fit a 64-bit code")]
    LevelTooLarge { level: usize, ring: RingSpec },
    #[error("packed groups need a finite ring with modulus at most {MAX_PACKED_MODULUS}, got {0}")]
    UnsupportedRing(RingSpec),
    #[error("pair is not unit-diagonal (need g0 = 1 and f1 = 1)")]
    NotUnitDiagonal,
    #[error("pair has order {got}, expected level {expected} over {ring}")]
    WrongGroup { got: usize, expected: usize, ring: RingSpec },
    #[error("subgroups live in different groups")]
    GroupMismatch,
    #[error("first argument is not a subgroup of the second")]
    NotSubgroup,
    #[error("commutator requires normal first argument")]
    NotNormal,
    #[error("subgroup is not normal")]
    QuotientNotNormal,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("quotient is not abelian")]
    QuotientNotAbelian,
    #[error("order census does not describe an abelian group")]
    BadCensus,
    #[error(transparent)]
    Riordan(#[from] RiordanError),
}

/// Canonical code of a unit-diagonal element at a fixed level and ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct PackedElement(pub u64);

impl PackedElement {
    pub const IDENTITY: PackedElement = PackedElement(0);

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for PackedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl Serialize for PackedElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The group TSR_n(D) of unit-diagonal pairs at one level, as a context for
/// packed arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedGroup {
    ring: RingSpec,
    level: usize,
    modulus: u64,
}

impl TruncatedGroup {
    pub fn new(ring: RingSpec, level: usize) -> Result<Self, GroupError> {
        let modulus = match ring.modulus() {
            Some(m) if m <= MAX_PACKED_MODULUS => m,
            _ => return Err(GroupError::UnsupportedRing(ring)),
        };
        if level == 0 {
            return Err(GroupError::LevelZero(level));
        }
        let fits = u32::try_from(2 * level - 1)
            .ok()
            .and_then(|w| modulus.checked_pow(w))
            .is_some()
            && level < kernel::MAX_LEN;
        if !fits {
            return Err(GroupError::LevelTooLarge { level, ring });
        }
        Ok(TruncatedGroup { ring, level, modulus })
    }

    pub fn binary(level: usize) -> Result<Self, GroupError> {
        Self::new(RingSpec::F2, level)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of base-`m` digits in a code.
    pub fn width(&self) -> usize {
        2 * self.level - 1
    }

    /// `m^(2n-1)`, the order of the whole group and the size of the code space.
    pub fn order(&self) -> u64 {
        self.modulus.pow(self.width() as u32)
    }

    pub(crate) fn is_binary(&self) -> bool {
        self.modulus == 2
    }

    pub fn identity(&self) -> PackedElement {
        PackedElement::IDENTITY
    }

    /// Coordinates `(g_1..g_n, f_2..f_n)` of a code.
    pub fn digits(&self, x: PackedElement) -> Vec<u64> {
        let mut c = x.0;
        (0..self.width())
            .map(|_| {
                let d = c % self.modulus;
                c /= self.modulus;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> PackedElement {
        assert_eq!(digits.len(), self.width());
        PackedElement(digits.iter().rev().fold(0, |acc, &d| acc * self.modulus + d % self.modulus))
    }

    pub fn pack(&self, p: &RiordanPair) -> Result<PackedElement, GroupError> {
        if p.ring() != self.ring || p.order() != self.level {
            return Err(GroupError::WrongGroup {
                got: p.order(),
                expected: self.level,
                ring: self.ring,
            });
        }
        if !p.is_unit_diagonal() {
            return Err(GroupError::NotUnitDiagonal);
        }
        let g = p.g().residues().expect("finite ring");
        let f = p.f().residues().expect("finite ring");
        let digits: Vec<u64> = g[1..].iter().chain(&f[2..]).copied().collect();
        Ok(self.from_digits(&digits))
    }

    pub fn unpack(&self, x: PackedElement) -> RiordanPair {
        let d = self.digits(x);
        let n = self.level;
        let big = |v: &[u64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        let mut g = vec![1u64];
        g.extend(&d[..n]);
        let mut f = vec![0u64, 1];
        f.extend(&d[n..]);
        RiordanPair::new(
            TruncatedSeries::from_bigints(self.ring, &big(&g)).expect("non-empty"),
            TruncatedSeries::from_bigints(self.ring, &big(&f)).expect("non-empty"),
        )
        .expect("unit-diagonal coordinates form a valid pair")
    }

    pub fn mul(&self, a: PackedElement, b: PackedElement) -> PackedElement {
        PackedElement(kernel::mul(self, a.0, b.0))
    }

    pub fn inv(&self, a: PackedElement) -> PackedElement {
        PackedElement(kernel::inv(self, a.0))
    }

    pub fn pow(&self, a: PackedElement, mut e: u64) -> PackedElement {
        let mut result = self.identity();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        result
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: PackedElement, b: PackedElement) -> PackedElement {
        let left = self.mul(self.inv(a), self.inv(b));
        self.mul(left, self.mul(a, b))
    }

    /// `a^-1 x a`.
    pub fn conjugate(&self, x: PackedElement, a: PackedElement) -> PackedElement {
        self.mul(self.mul(self.inv(a), x), a)
    }

    /// Least `k >= 1` with `a^k` the identity.
    pub fn element_order(&self, a: PackedElement) -> u64 {
        let mut x = a;
        let mut k = 1;
        while !x.is_identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `a_k(beta) = (1 + beta t^k, t)`.
    pub fn elem_a(&self, k: usize, beta: u64) -> Result<PackedElement, GroupError> {
        let p = RiordanPair::elem_a(self.ring, k, &BigInt::from(beta), self.level)?;
        self.pack(&p)
    }

    /// `e_i[alpha] = (1, t + alpha t^(i+1))`.
    pub fn elem_e(&self, i: usize, alpha: u64) -> PackedElement {
        let p = RiordanPair::elem_e(self.ring, i, &BigInt::from(alpha), self.level);
        self.pack(&p).expect("e_i is unit-diagonal")
    }

    pub fn is_appell(&self, x: PackedElement) -> bool {
        x.0 < self.modulus.pow(self.level as u32)
    }

    pub fn is_substitution(&self, x: PackedElement) -> bool {
        x.0 % self.modulus.pow(self.level as u32) == 0
    }

    /// The Appell part `(g, t)` of `(g, f) = (g, t)(1, f)`.
    pub fn appell_part(&self, x: PackedElement) -> PackedElement {
        PackedElement(x.0 % self.modulus.pow(self.level as u32))
    }

    /// The substitution part `(1, f)` of `(g, f) = (g, t)(1, f)`.
    pub fn substitution_part(&self, x: PackedElement) -> PackedElement {
        let base = self.modulus.pow(self.level as u32);
        PackedElement(x.0 / base * base)
    }

    /// `a_k(1)` for `1 <= k <= n`, skipping multiples of `p` over a prime
    /// field, since there `a_(pk)(1) = a_k(1)^p`.
    pub fn appell_generators(&self) -> Vec<PackedElement> {
        let skip = match self.ring {
            RingSpec::PrimeField { p } => p as usize,
            _ => 0,
        };
        (1..=self.level)
            .filter(|k| skip == 0 || k % skip != 0)
            .map(|k| self.elem_a(k, 1).expect("k within level"))
            .collect()
    }

    /// `e_i[1]` for `1 <= i <= n-1`.
    pub fn substitution_generators(&self) -> Vec<PackedElement> {
        (1..self.level).map(|i| self.elem_e(i, 1)).collect()
    }

    pub fn generators(&self) -> Vec<PackedElement> {
        let mut g = self.appell_generators();
        g.extend(self.substitution_generators());
        g
    }

    /// The whole group, enumerated.
    pub fn full(&self) -> Result<SubgroupTable, GroupError> {
        SubgroupTable::closure(*self, &self.generators())
    }

    /// The Appell subgroup TA_n.
    pub fn appell(&self) -> Result<SubgroupTable, GroupError> {
        SubgroupTable::closure(*self, &self.appell_generators())
    }

    /// The unit-diagonal substitution subgroup TJ_n (TN_n over F2).
    pub fn substitution(&self) -> Result<SubgroupTable, GroupError> {
        SubgroupTable::closure(*self, &self.substitution_generators())
    }
}

impl fmt::Display for TruncatedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TSR_{}({})", self.level, self.ring)
    }
}
