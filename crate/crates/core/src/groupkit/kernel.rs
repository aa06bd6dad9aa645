//! Arithmetic on packed codes.
//!
//! The F2 path keeps `g` and `f` as bit words (bit `i` is the coefficient of
//! `t^i`) and composes by XOR-ing precomputed powers of the inner series.

use super::TruncatedGroup;

/// Series length bound for the fixed-size scratch arrays.
pub(crate) const MAX_LEN: usize = 33;

#[inline]
fn clmul(a: u64, b: u64, mask: u64) -> u64 {
    let mut acc = 0u64;
    let mut x = a;
    while x != 0 {
        acc ^= b << x.trailing_zeros();
        x &= x - 1;
    }
    acc & mask
}

/// Bit words of `g` and `f` for a binary code at level `n`.
#[inline]
pub(crate) fn decode2(code: u64, n: usize) -> (u64, u64) {
    let gmask = (1u64 << n) - 1;
    (1 | ((code & gmask) << 1), 0b10 | ((code >> n) << 2))
}

#[inline]
pub(crate) fn encode2(g: u64, f: u64, n: usize) -> u64 {
    let gmask = (1u64 << n) - 1;
    ((g >> 1) & gmask) | ((f >> 2) << n)
}

#[inline]
pub(crate) fn series_mask(n: usize) -> u64 {
    (1u64 << (n + 1)) - 1
}

/// `f^0, f^1, ..., f^n` truncated at degree `n`.
#[inline]
pub(crate) fn powers2(f: u64, n: usize, out: &mut [u64]) {
    let mask = series_mask(n);
    out[0] = 1;
    for k in 1..=n {
        out[k] = clmul(out[k - 1], f, mask);
    }
}

/// `h(f)` given the powers of `f`.
#[inline]
pub(crate) fn compose2(h: u64, pows: &[u64]) -> u64 {
    let mut acc = 0u64;
    let mut x = h;
    while x != 0 {
        acc ^= pows[x.trailing_zeros() as usize];
        x &= x - 1;
    }
    acc
}

/// Product of `(ga, fa)` with `(gb, fb)` given the powers of `fa`.
#[inline]
pub(crate) fn mul2_with(ga: u64, gb: u64, fb: u64, pows: &[u64], mask: u64) -> (u64, u64) {
    (clmul(ga, compose2(gb, pows), mask), compose2(fb, pows))
}

/// `1/h` for `h` with constant term 1.
#[inline]
fn mult_inverse2(h: u64, n: usize) -> u64 {
    let mask = series_mask(n);
    let mut b = 1u64;
    let mut acc = h;
    for d in 1..=n {
        if (acc >> d) & 1 == 1 {
            b ^= 1 << d;
            acc ^= (h << d) & mask;
        }
    }
    b
}

/// Compositional inverse of `f` given its powers.
#[inline]
fn comp_inverse2(pows: &[u64], n: usize) -> u64 {
    let mut u = 0b10u64;
    let mut acc = pows[1];
    for d in 2..=n {
        if (acc >> d) & 1 == 1 {
            u ^= 1 << d;
            acc ^= pows[d];
        }
    }
    u
}

/// Inverse of the binary pair `(g, f)` together with it.
#[inline]
pub(crate) fn inv2(g: u64, f: u64, n: usize) -> (u64, u64) {
    if f == 0b10 {
        return (mult_inverse2(g, n), f);
    }
    let mut pows = [0u64; MAX_LEN];
    powers2(f, n, &mut pows);
    let fbar = comp_inverse2(&pows, n);
    powers2(fbar, n, &mut pows);
    (mult_inverse2(compose2(g, &pows), n), fbar)
}

pub(crate) fn mul(grp: &TruncatedGroup, a: u64, b: u64) -> u64 {
    let n = grp.level;
    if grp.is_binary() {
        let (ga, fa) = decode2(a, n);
        let (gb, fb) = decode2(b, n);
        let mask = series_mask(n);
        if fa == 0b10 {
            return encode2(clmul(ga, gb, mask), fb, n);
        }
        let mut pows = [0u64; MAX_LEN];
        powers2(fa, n, &mut pows);
        let (g, f) = mul2_with(ga, gb, fb, &pows, mask);
        encode2(g, f, n)
    } else {
        let m = grp.modulus;
        let (ga, fa) = decode(a, n, m);
        let (gb, fb) = decode(b, n, m);
        let pows = powers(&fa, n, m);
        let g = mul_series(&ga, &compose(&gb, &pows, n, m), n, m);
        let f = compose(&fb, &pows, n, m);
        encode(&g, &f, n, m)
    }
}

pub(crate) fn inv(grp: &TruncatedGroup, a: u64) -> u64 {
    let n = grp.level;
    if grp.is_binary() {
        let (g, f) = decode2(a, n);
        let (gi, fi) = inv2(g, f, n);
        encode2(gi, fi, n)
    } else {
        let m = grp.modulus;
        let (g, f) = decode(a, n, m);
        let pows = powers(&f, n, m);
        let mut fbar = [0u64; MAX_LEN];
        fbar[1] = 1;
        let mut acc = pows[1];
        for d in 2..=n {
            let r = acc[d];
            if r != 0 {
                let u = m - r;
                fbar[d] = u;
                for j in d..=n {
                    acc[j] = (acc[j] + u * pows[d][j]) % m;
                }
            }
        }
        let pows = powers(&fbar, n, m);
        let h = compose(&g, &pows, n, m);
        let mut b = [0u64; MAX_LEN];
        b[0] = 1;
        for k in 1..=n {
            let s: u64 = (1..=k).map(|i| h[i] * b[k - i]).sum::<u64>() % m;
            b[k] = (m - s) % m;
        }
        encode(&b, &fbar, n, m)
    }
}

type Series = [u64; MAX_LEN];

fn decode(code: u64, n: usize, m: u64) -> (Series, Series) {
    let mut g = [0u64; MAX_LEN];
    let mut f = [0u64; MAX_LEN];
    g[0] = 1;
    f[1] = 1;
    let mut c = code;
    for gi in g.iter_mut().take(n + 1).skip(1) {
        *gi = c % m;
        c /= m;
    }
    for fi in f.iter_mut().take(n + 1).skip(2) {
        *fi = c % m;
        c /= m;
    }
    (g, f)
}

fn encode(g: &Series, f: &Series, n: usize, m: u64) -> u64 {
    let mut code = 0u64;
    for i in (2..=n).rev() {
        code = code * m + f[i];
    }
    for i in (1..=n).rev() {
        code = code * m + g[i];
    }
    code
}

fn mul_series(a: &Series, b: &Series, n: usize, m: u64) -> Series {
    let mut out = [0u64; MAX_LEN];
    for i in 0..=n {
        if a[i] == 0 {
            continue;
        }
        for j in 0..=n - i {
            out[i + j] += a[i] * b[j];
        }
    }
    for x in out.iter_mut().take(n + 1) {
        *x %= m;
    }
    out
}

fn powers(f: &Series, n: usize, m: u64) -> Vec<Series> {
    let mut pows = Vec::with_capacity(n + 1);
    let mut p = [0u64; MAX_LEN];
    p[0] = 1;
    for _ in 0..=n {
        let next = mul_series(&p, f, n, m);
        pows.push(p);
        p = next;
    }
    pows
}

fn compose(h: &Series, pows: &[Series], n: usize, m: u64) -> Series {
    let mut out = [0u64; MAX_LEN];
    for k in 0..=n {
        if h[k] == 0 {
            continue;
        }
        for j in 0..=n {
            out[j] += h[k] * pows[k][j];
        }
    }
    for x in out.iter_mut().take(n + 1) {
        *x %= m;
    }
    out
}
