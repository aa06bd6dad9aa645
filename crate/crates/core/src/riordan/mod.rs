//! Riordan pairs `(g, f)` truncated at a common order, their group law, and
//! the lower-triangular matrices they realize.

mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::fps::{FpsError, RingSpec, TruncatedSeries};

pub use matrix::RiordanMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RiordanError {
    #[error(transparent)]
    Series(#[from] FpsError),
    #[error("g and f have different orders ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("g must have a unit constant term, found {0}")]
    GNotUnit(BigInt),
    #[error("f must have zero constant term, found {0}")]
    FConstant(BigInt),
    #[error("f must have a unit linear term, found {0}")]
    FLinearNotUnit(BigInt),
    #[error("index {index} out of range 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },
}

/// A level of the truncation tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TowerIndex(pub usize);

impl From<usize> for TowerIndex {
    fn from(n: usize) -> Self {
        TowerIndex(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RiordanPair {
    g: TruncatedSeries,
    f: TruncatedSeries,
}

impl RiordanPair {
    pub fn new(g: TruncatedSeries, f: TruncatedSeries) -> Result<Self, RiordanError> {
        if g.ring() != f.ring() {
            return Err(FpsError::IncompatibleRings(g.ring(), f.ring()).into());
        }
        if g.order() != f.order() {
            return Err(RiordanError::OrderMismatch(g.order(), f.order()));
        }
        let ring = g.ring();
        if !ring.is_unit(&g.coeff(0)) {
            return Err(RiordanError::GNotUnit(g.coeff(0)));
        }
        if !f.coeff(0).is_zero() {
            return Err(RiordanError::FConstant(f.coeff(0)));
        }
        if f.order() >= 1 && !ring.is_unit(&f.coeff(1)) {
            return Err(RiordanError::FLinearNotUnit(f.coeff(1)));
        }
        Ok(RiordanPair { g, f })
    }

    /// Builds a pair from coefficient lists, padding or cutting both to `order`.
    pub fn from_i64s(ring: RingSpec, g: &[i64], f: &[i64], order: usize) -> Result<Self, RiordanError> {
        let big = |c: &[i64]| c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        RiordanPair::new(
            TruncatedSeries::with_order(ring, &big(g), order),
            TruncatedSeries::with_order(ring, &big(f), order),
        )
    }

    pub fn identity(ring: RingSpec, order: usize) -> Self {
        RiordanPair {
            g: TruncatedSeries::one(ring, order),
            f: TruncatedSeries::variable(ring, order),
        }
    }

    /// `a_k(beta) = (1 + beta t^k, t)`.
    pub fn elem_a(ring: RingSpec, k: usize, beta: &BigInt, order: usize) -> Result<Self, RiordanError> {
        if k == 0 || k > order {
            return Err(RiordanError::IndexOutOfRange { index: k, order });
        }
        let g = TruncatedSeries::one(ring, order)
            .add(&TruncatedSeries::monomial(ring, order, k, beta))
            .expect("same ring");
        Ok(RiordanPair { g, f: TruncatedSeries::variable(ring, order) })
    }

    /// `e_i[alpha] = (1, t + alpha t^(i+1))`; the identity when `i = 0` or
    /// when `t^(i+1)` is truncated away.
    pub fn elem_e(ring: RingSpec, i: usize, alpha: &BigInt, order: usize) -> Self {
        if i == 0 {
            return Self::identity(ring, order);
        }
        let f = TruncatedSeries::variable(ring, order)
            .add(&TruncatedSeries::monomial(ring, order, i + 1, alpha))
            .expect("same ring");
        RiordanPair { g: TruncatedSeries::one(ring, order), f }
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    pub fn ring(&self) -> RingSpec {
        self.g.ring()
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), RiordanError> {
        if self.ring() != other.ring() {
            return Err(FpsError::IncompatibleRings(self.ring(), other.ring()).into());
        }
        if self.order() != other.order() {
            return Err(RiordanError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    /// `(g1, f1) * (g2, f2) = (g1 * g2(f1), f2(f1))`.
    pub fn mul(&self, other: &Self) -> Result<Self, RiordanError> {
        self.check_compatible(other)?;
        let g = self.g.mul(&other.g.compose(&self.f)?)?;
        let f = other.f.compose(&self.f)?;
        Ok(RiordanPair { g, f })
    }

    /// `(1 / g(fbar), fbar)` where `fbar` is the compositional inverse of `f`.
    pub fn inverse(&self) -> Self {
        let fbar = self.f.comp_inverse().expect("valid pair has invertible f");
        let g = self
            .g
            .compose(&fbar)
            .and_then(|h| h.mult_inverse())
            .expect("valid pair has unit g0");
        RiordanPair { g, f: fbar }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::identity(self.ring(), self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same group");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same group");
            }
        }
        result
    }

    /// `[p, q] = p^-1 q^-1 p q`.
    pub fn commutator(&self, other: &Self) -> Result<Self, RiordanError> {
        self.check_compatible(other)?;
        let left = self.inverse().mul(&other.inverse())?;
        left.mul(&self.mul(other)?)
    }

    /// Projection to a lower level of the tower.
    pub fn truncate(&self, n: impl Into<TowerIndex>) -> Result<Self, RiordanError> {
        let n = n.into().0;
        Ok(RiordanPair { g: self.g.truncate(n)?, f: self.f.truncate(n)? })
    }

    /// `(g, f) = (g, t) * (1, f)`: the Appell factor and the Lagrange factor.
    pub fn split(&self) -> (Self, Self) {
        let (ring, n) = (self.ring(), self.order());
        let appell = RiordanPair { g: self.g.clone(), f: TruncatedSeries::variable(ring, n) };
        let lagrange = RiordanPair { g: TruncatedSeries::one(ring, n), f: self.f.clone() };
        (appell, lagrange)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ring(), self.order())
    }

    /// `g0 = 1` and `f1 = 1`, so every diagonal entry of the matrix is 1.
    pub fn is_unit_diagonal(&self) -> bool {
        self.g.coeff(0).is_one() && (self.order() == 0 || self.f.coeff(1).is_one())
    }

    pub fn is_appell(&self) -> bool {
        self.f == TruncatedSeries::variable(self.ring(), self.order())
    }

    pub fn is_lagrange(&self) -> bool {
        self.g.is_one()
    }

    /// `d[i][j] = [t^i] g f^j`.
    pub fn to_matrix(&self) -> RiordanMatrix {
        let n = self.order();
        let mut cols = Vec::with_capacity(n + 1);
        let mut col = self.g.clone();
        for _ in 0..=n {
            let next = col.mul(&self.f).expect("same ring");
            cols.push(col.coeffs());
            col = next;
        }
        let rows = (0..=n)
            .map(|i| (0..=n).map(|j| cols[j][i].clone()).collect())
            .collect();
        RiordanMatrix::from_rows(self.ring(), rows)
    }
}

impl fmt::Display for RiordanPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.f)
    }
}
