//! Word-packed series over F2: bit `i` of the word vector is the coefficient
//! of `t^i`. Bits at or above `len` are always clear.

pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

#[inline]
pub(crate) fn bit(a: &[u64], i: usize) -> bool {
    (a[i / 64] >> (i % 64)) & 1 == 1
}

#[inline]
pub(crate) fn flip(a: &mut [u64], i: usize) {
    a[i / 64] ^= 1 << (i % 64);
}

pub(crate) fn mask_to(a: &mut [u64], len: usize) {
    let words = words_for(len);
    for w in a.iter_mut().skip(words) {
        *w = 0;
    }
    if len % 64 != 0 && words > 0 {
        a[words - 1] &= (1u64 << (len % 64)) - 1;
    }
}

pub(crate) fn from_bools(bits: impl IntoIterator<Item = bool>, len: usize) -> Vec<u64> {
    let mut out = vec![0; words_for(len)];
    for (i, b) in bits.into_iter().enumerate().take(len) {
        if b {
            flip(&mut out, i);
        }
    }
    out
}

/// `acc ^= b * t^shift`, dropping bits at or above `len`.
fn xor_shifted(acc: &mut [u64], b: &[u64], shift: usize, len: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    let words = words_for(len);
    for (j, &w) in b.iter().enumerate() {
        if w == 0 {
            continue;
        }
        let k = j + ws;
        if k >= words {
            break;
        }
        acc[k] ^= w << bs;
        if bs != 0 && k + 1 < words {
            acc[k + 1] ^= w >> (64 - bs);
        }
    }
}

/// Carry-less product truncated to `len` bits.
pub(crate) fn mul(a: &[u64], b: &[u64], len: usize) -> Vec<u64> {
    let mut out = vec![0; words_for(len)];
    for (wi, &w) in a.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let i = wi * 64 + w.trailing_zeros() as usize;
            if i >= len {
                break;
            }
            xor_shifted(&mut out, b, i, len);
            w &= w - 1;
        }
    }
    mask_to(&mut out, len);
    out
}

pub(crate) fn compose(outer: &[u64], inner: &[u64], len: usize) -> Vec<u64> {
    let mut acc = vec![0; words_for(len)];
    for i in (0..len).rev() {
        acc = mul(&acc, inner, len);
        if bit(outer, i) {
            acc[0] ^= 1;
        }
    }
    acc
}

pub(crate) fn mult_inverse(a: &[u64], len: usize) -> Option<Vec<u64>> {
    if !bit(a, 0) {
        return None;
    }
    let mut b = vec![0; words_for(len)];
    flip(&mut b, 0);
    for n in 1..len {
        let mut s = false;
        for i in 1..=n {
            s ^= bit(a, i) & bit(&b, n - i);
        }
        if s {
            flip(&mut b, n);
        }
    }
    Some(b)
}

pub(crate) fn comp_inverse(f: &[u64], len: usize) -> Option<Vec<u64>> {
    if len == 1 {
        return Some(vec![0]);
    }
    if bit(f, 0) || !bit(f, 1) {
        return None;
    }
    let mut cols = Vec::with_capacity(len);
    let mut p = vec![0; words_for(len)];
    flip(&mut p, 0);
    for _ in 0..len {
        let next = mul(&p, f, len);
        cols.push(p);
        p = next;
    }
    let mut u = vec![0; words_for(len)];
    flip(&mut u, 1);
    for d in 2..len {
        let mut s = false;
        for (k, col) in cols.iter().enumerate().take(d).skip(1) {
            s ^= bit(&u, k) & bit(col, d);
        }
        if s {
            flip(&mut u, d);
        }
    }
    Some(u)
}

pub(crate) fn pow(a: &[u64], mut e: u64, len: usize) -> Vec<u64> {
    let mut result = vec![0; words_for(len)];
    flip(&mut result, 0);
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base, len);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base, len);
        }
    }
    result
}
