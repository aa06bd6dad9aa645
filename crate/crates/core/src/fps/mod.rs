//! Formal power series truncated at a fixed order over a small coefficient ring.
//!
//! A [`TruncatedSeries`] of order `N` is known modulo `t^(N+1)`. Binary
//! operations accept operands of different orders and return a result of the
//! smaller order. Over F2 the coefficients are stored one bit per degree.

mod dense;
mod gf2;
mod lucas;
mod ring;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use dense::{Arith, IntArith, ModArith};

pub use lucas::lucas_binomial;
pub use ring::{RingSpec, MAX_MODULUS};
pub(crate) use ring::factorize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpsError {
    #[error("incompatible rings: {0} vs {1}")]
    IncompatibleRings(RingSpec, RingSpec),
    #[error("composition requires depth ≥ 1 (inner series has constant term {0})")]
    DepthZero(BigInt),
    #[error("not invertible: constant term {0} is not a unit")]
    NotInvertible(BigInt),
    #[error("no compositional inverse: need zero constant term and unit linear term")]
    NoCompositionalInverse,
    #[error("cannot extend precision from order {from} to order {to}")]
    CannotExtend { from: usize, to: usize },
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("modulus {0} is out of range")]
    InvalidModulus(u64),
    #[error("unknown ring {0:?}")]
    UnknownRing(String),
    #[error("a series needs at least one coefficient")]
    EmptySeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Coeffs {
    Bits(Vec<u64>),
    Residues(Vec<u64>),
    Big(Vec<BigInt>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    ring: RingSpec,
    order: usize,
    coeffs: Coeffs,
}

impl TruncatedSeries {
    /// Builds a series whose order is `coeffs.len() - 1`.
    pub fn from_bigints(ring: RingSpec, coeffs: &[BigInt]) -> Result<Self, FpsError> {
        if coeffs.is_empty() {
            return Err(FpsError::EmptySeries);
        }
        let len = coeffs.len();
        let repr = match ring.modulus() {
            Some(2) => Coeffs::Bits(gf2::from_bools(
                coeffs.iter().map(|c| ring.reduce_u64(c) == 1),
                len,
            )),
            Some(_) => Coeffs::Residues(coeffs.iter().map(|c| ring.reduce_u64(c)).collect()),
            None => Coeffs::Big(coeffs.to_vec()),
        };
        Ok(TruncatedSeries { ring, order: len - 1, coeffs: repr })
    }

    pub fn from_i64s(ring: RingSpec, coeffs: &[i64]) -> Result<Self, FpsError> {
        let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_bigints(ring, &big)
    }

    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients above the order.
    pub fn with_order(ring: RingSpec, coeffs: &[BigInt], order: usize) -> Self {
        let mut v: Vec<BigInt> = coeffs.iter().take(order + 1).cloned().collect();
        v.resize(order + 1, BigInt::zero());
        Self::from_bigints(ring, &v).expect("non-empty")
    }

    pub fn zero(ring: RingSpec, order: usize) -> Self {
        Self::with_order(ring, &[], order)
    }

    pub fn one(ring: RingSpec, order: usize) -> Self {
        Self::with_order(ring, &[BigInt::one()], order)
    }

    /// The series `t` (zero at order 0).
    pub fn variable(ring: RingSpec, order: usize) -> Self {
        Self::with_order(ring, &[BigInt::zero(), BigInt::one()], order)
    }

    /// `c * t^degree`, vanishing when `degree > order`.
    pub fn monomial(ring: RingSpec, order: usize, degree: usize, c: &BigInt) -> Self {
        let mut v = vec![BigInt::zero(); order + 1];
        if degree <= order {
            v[degree] = c.clone();
        }
        Self::from_bigints(ring, &v).expect("non-empty")
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn len(&self) -> usize {
        self.order + 1
    }

    pub fn get(&self, i: usize) -> Option<BigInt> {
        if i > self.order {
            return None;
        }
        Some(match &self.coeffs {
            Coeffs::Bits(b) => BigInt::from(gf2::bit(b, i) as u8),
            Coeffs::Residues(r) => BigInt::from(r[i]),
            Coeffs::Big(v) => v[i].clone(),
        })
    }

    /// Coefficient of `t^i`. Panics above the truncation order.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.get(i)
            .unwrap_or_else(|| panic!("coefficient {i} is beyond order {}", self.order))
    }

    pub fn coeffs(&self) -> Vec<BigInt> {
        (0..self.len()).map(|i| self.coeff(i)).collect()
    }

    /// Coefficients as residues in `[0, m)`; `None` over the integers.
    pub fn residues(&self) -> Option<Vec<u64>> {
        match &self.coeffs {
            Coeffs::Bits(b) => Some((0..self.len()).map(|i| gf2::bit(b, i) as u64).collect()),
            Coeffs::Residues(r) => Some(r.clone()),
            Coeffs::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        (0..self.len()).all(|i| self.coeff(i).is_zero())
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.ring, self.order)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        (0..self.len()).find(|&i| !self.coeff(i).is_zero())
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self, FpsError> {
        if order > self.order {
            return Err(FpsError::CannotExtend { from: self.order, to: order });
        }
        let len = order + 1;
        let coeffs = match &self.coeffs {
            Coeffs::Bits(b) => {
                let mut b = b[..gf2::words_for(len)].to_vec();
                gf2::mask_to(&mut b, len);
                Coeffs::Bits(b)
            }
            Coeffs::Residues(r) => Coeffs::Residues(r[..len].to_vec()),
            Coeffs::Big(v) => Coeffs::Big(v[..len].to_vec()),
        };
        Ok(TruncatedSeries { ring: self.ring, order, coeffs })
    }

    fn common(&self, other: &Self) -> Result<(Self, Self), FpsError> {
        if self.ring != other.ring {
            return Err(FpsError::IncompatibleRings(self.ring, other.ring));
        }
        let order = self.order.min(other.order);
        Ok((self.truncate(order)?, other.truncate(order)?))
    }

    fn rebuild(&self, coeffs: Coeffs) -> Self {
        TruncatedSeries { ring: self.ring, order: self.order, coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FpsError> {
        let (a, b) = self.common(other)?;
        let coeffs = match (&a.coeffs, &b.coeffs) {
            (Coeffs::Bits(x), Coeffs::Bits(y)) => {
                Coeffs::Bits(x.iter().zip(y).map(|(p, q)| p ^ q).collect())
            }
            (Coeffs::Residues(x), Coeffs::Residues(y)) => {
                Coeffs::Residues(dense::add(&a.mod_arith(), x, y))
            }
            (Coeffs::Big(x), Coeffs::Big(y)) => Coeffs::Big(dense::add(&IntArith, x, y)),
            _ => unreachable!("representation follows the ring"),
        };
        Ok(a.rebuild(coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FpsError> {
        let (a, b) = self.common(other)?;
        let coeffs = match (&a.coeffs, &b.coeffs) {
            (Coeffs::Bits(x), Coeffs::Bits(y)) => {
                Coeffs::Bits(x.iter().zip(y).map(|(p, q)| p ^ q).collect())
            }
            (Coeffs::Residues(x), Coeffs::Residues(y)) => {
                Coeffs::Residues(dense::sub(&a.mod_arith(), x, y))
            }
            (Coeffs::Big(x), Coeffs::Big(y)) => Coeffs::Big(dense::sub(&IntArith, x, y)),
            _ => unreachable!("representation follows the ring"),
        };
        Ok(a.rebuild(coeffs))
    }

    pub fn neg(&self) -> Self {
        Self::zero(self.ring, self.order).sub(self).expect("same ring")
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        let v: Vec<BigInt> = self.coeffs().iter().map(|x| x * c).collect();
        Self::from_bigints(self.ring, &v).expect("non-empty")
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self, FpsError> {
        let (a, b) = self.common(other)?;
        let len = a.len();
        let coeffs = match (&a.coeffs, &b.coeffs) {
            (Coeffs::Bits(x), Coeffs::Bits(y)) => Coeffs::Bits(gf2::mul(x, y, len)),
            (Coeffs::Residues(x), Coeffs::Residues(y)) => {
                Coeffs::Residues(dense::mul(&a.mod_arith(), x, y, len))
            }
            (Coeffs::Big(x), Coeffs::Big(y)) => Coeffs::Big(dense::mul(&IntArith, x, y, len)),
            _ => unreachable!("representation follows the ring"),
        };
        Ok(a.rebuild(coeffs))
    }

    pub fn pow(&self, e: u64) -> Self {
        let len = self.len();
        let coeffs = match &self.coeffs {
            Coeffs::Bits(x) => Coeffs::Bits(gf2::pow(x, e, len)),
            Coeffs::Residues(x) => Coeffs::Residues(dense::pow(&self.mod_arith(), x, e)),
            Coeffs::Big(x) => Coeffs::Big(dense::pow(&IntArith, x, e)),
        };
        self.rebuild(coeffs)
    }

    /// `self(inner(t))`, truncated at the smaller order.
    pub fn compose(&self, inner: &Self) -> Result<Self, FpsError> {
        let c0 = inner.coeff(0);
        if !c0.is_zero() {
            return Err(FpsError::DepthZero(c0));
        }
        let (a, b) = self.common(inner)?;
        let len = a.len();
        let coeffs = match (&a.coeffs, &b.coeffs) {
            (Coeffs::Bits(x), Coeffs::Bits(y)) => Coeffs::Bits(gf2::compose(x, y, len)),
            (Coeffs::Residues(x), Coeffs::Residues(y)) => {
                Coeffs::Residues(dense::compose(&a.mod_arith(), x, y, len))
            }
            (Coeffs::Big(x), Coeffs::Big(y)) => {
                Coeffs::Big(dense::compose(&IntArith, x, y, len))
            }
            _ => unreachable!("representation follows the ring"),
        };
        Ok(a.rebuild(coeffs))
    }

    /// `1 / self`; the constant term must be a unit.
    pub fn mult_inverse(&self) -> Result<Self, FpsError> {
        let len = self.len();
        let coeffs = match &self.coeffs {
            Coeffs::Bits(x) => gf2::mult_inverse(x, len).map(Coeffs::Bits),
            Coeffs::Residues(x) => dense::mult_inverse(&self.mod_arith(), x).map(Coeffs::Residues),
            Coeffs::Big(x) => dense::mult_inverse(&IntArith, x).map(Coeffs::Big),
        };
        coeffs
            .map(|c| self.rebuild(c))
            .ok_or_else(|| FpsError::NotInvertible(self.coeff(0)))
    }

    /// The series `g` with `self(g(t)) = g(self(t)) = t`.
    pub fn comp_inverse(&self) -> Result<Self, FpsError> {
        let len = self.len();
        let coeffs = match &self.coeffs {
            Coeffs::Bits(x) => gf2::comp_inverse(x, len).map(Coeffs::Bits),
            Coeffs::Residues(x) => {
                dense::comp_inverse(&self.mod_arith(), x).map(Coeffs::Residues)
            }
            Coeffs::Big(x) => dense::comp_inverse(&IntArith, x).map(Coeffs::Big),
        };
        coeffs
            .map(|c| self.rebuild(c))
            .ok_or(FpsError::NoCompositionalInverse)
    }

    fn mod_arith(&self) -> ModArith {
        ModArith(self.ring.modulus().expect("finite ring"))
    }

    /// Reference Cauchy product on plain residue vectors. Used to check the
    /// packed F2 path against the contract.
    #[doc(hidden)]
    pub fn mul_reference(&self, other: &Self) -> Result<Self, FpsError> {
        let (a, b) = self.common(other)?;
        let ar = ModArith(a.ring.modulus().ok_or(FpsError::UnknownRing("Z".into()))?);
        let x = a.residues().expect("finite");
        let y = b.residues().expect("finite");
        let prod = dense::mul(&ar, &x, &y, a.len());
        let big: Vec<BigInt> = prod.into_iter().map(BigInt::from).collect();
        Self::from_bigints(a.ring, &big)
    }

    /// Reference composition on plain residue vectors.
    #[doc(hidden)]
    pub fn compose_reference(&self, inner: &Self) -> Result<Self, FpsError> {
        let (a, b) = self.common(inner)?;
        let ar = ModArith(a.ring.modulus().ok_or(FpsError::UnknownRing("Z".into()))?);
        if !ar.is_zero(&b.residues().expect("finite")[0]) {
            return Err(FpsError::DepthZero(b.coeff(0)));
        }
        let out = dense::compose(&ar, &a.residues().unwrap(), &b.residues().unwrap(), a.len());
        let big: Vec<BigInt> = out.into_iter().map(BigInt::from).collect();
        Self::from_bigints(a.ring, &big)
    }
}

/// Polynomial notation, e.g. `1 + t + 3t^4`, without the truncation order.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
