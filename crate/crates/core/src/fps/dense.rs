//! Coefficient-vector algorithms shared by every coefficient ring.
//!
//! All slices are degree-indexed and have the same length `len = order + 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ring::inv_mod;

pub(crate) trait Arith {
    type E: Clone + PartialEq;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
    fn is_zero(&self, a: &Self::E) -> bool;
}

/// Residues modulo `m`, always kept in `[0, m)`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ModArith(pub u64);

impl Arith for ModArith {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        inv_mod(*a, self.0)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct IntArith;

impl Arith for IntArith {
    type E = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        a.abs().is_one().then(|| a.clone())
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

pub(crate) fn add<A: Arith>(ar: &A, a: &[A::E], b: &[A::E]) -> Vec<A::E> {
    a.iter().zip(b).map(|(x, y)| ar.add(x, y)).collect()
}

pub(crate) fn sub<A: Arith>(ar: &A, a: &[A::E], b: &[A::E]) -> Vec<A::E> {
    a.iter().zip(b).map(|(x, y)| ar.sub(x, y)).collect()
}

/// Cauchy product truncated to `len` coefficients.
pub(crate) fn mul<A: Arith>(ar: &A, a: &[A::E], b: &[A::E], len: usize) -> Vec<A::E> {
    let mut out = vec![ar.zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if ar.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = ar.add(&out[i + j], &ar.mul(x, y));
        }
    }
    out
}

/// `outer(inner(t))` by Horner evaluation; `inner[0]` must be zero.
pub(crate) fn compose<A: Arith>(ar: &A, outer: &[A::E], inner: &[A::E], len: usize) -> Vec<A::E> {
    let mut acc = vec![ar.zero(); len];
    for c in outer[..len].iter().rev() {
        acc = mul(ar, &acc, inner, len);
        acc[0] = ar.add(&acc[0], c);
    }
    acc
}

/// Multiplicative inverse; `None` if the constant term is not a unit.
pub(crate) fn mult_inverse<A: Arith>(ar: &A, a: &[A::E]) -> Option<Vec<A::E>> {
    let len = a.len();
    let inv0 = ar.inv(&a[0])?;
    let mut b = Vec::with_capacity(len);
    b.push(inv0.clone());
    for n in 1..len {
        let mut s = ar.zero();
        for i in 1..=n {
            s = ar.add(&s, &ar.mul(&a[i], &b[n - i]));
        }
        b.push(ar.neg(&ar.mul(&inv0, &s)));
    }
    Some(b)
}

/// Columns `f^0, f^1, ..., f^(len-1)`, each truncated to `len` coefficients.
pub(crate) fn powers<A: Arith>(ar: &A, f: &[A::E]) -> Vec<Vec<A::E>> {
    let len = f.len();
    let mut cols = Vec::with_capacity(len);
    let mut p = vec![ar.zero(); len];
    p[0] = ar.one();
    for _ in 0..len {
        let next = mul(ar, &p, f, len);
        cols.push(p);
        p = next;
    }
    cols
}

/// Compositional inverse of `f` (zero constant term, unit linear term).
///
/// Solves `sum_k u_k f^k = t` degree by degree. The degree-`d` equation
/// involves `u_1..u_d` only, with the unit `f_1^d` in front of `u_d`.
pub(crate) fn comp_inverse<A: Arith>(ar: &A, f: &[A::E]) -> Option<Vec<A::E>> {
    let len = f.len();
    if len == 1 {
        return Some(vec![ar.zero()]);
    }
    if !ar.is_zero(&f[0]) {
        return None;
    }
    let f1_inv = ar.inv(&f[1])?;
    let cols = powers(ar, f);
    let mut u = vec![ar.zero(); len];
    u[1] = f1_inv.clone();
    let mut lead_inv = f1_inv.clone();
    for d in 2..len {
        lead_inv = ar.mul(&lead_inv, &f1_inv);
        let mut s = ar.zero();
        for k in 1..d {
            s = ar.add(&s, &ar.mul(&u[k], &cols[k][d]));
        }
        u[d] = ar.neg(&ar.mul(&lead_inv, &s));
    }
    Some(u)
}

pub(crate) fn pow<A: Arith>(ar: &A, a: &[A::E], mut e: u64) -> Vec<A::E> {
    let len = a.len();
    let mut result = vec![ar.zero(); len];
    result[0] = ar.one();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mul(ar, &result, &base, len);
        }
        e >>= 1;
        if e > 0 {
            base = mul(ar, &base, &base, len);
        }
    }
    result
}
