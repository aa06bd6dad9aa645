use std::collections::HashSet;

/// Code spaces up to this many codes get a bitmap; larger ones a hash set.
const DENSE_LIMIT: u64 = 1 << 26;

#[derive(Clone, Debug)]
pub(crate) enum CodeSet {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl CodeSet {
    pub(crate) fn with_space(space: u64) -> Self {
        if space <= DENSE_LIMIT {
            CodeSet::Dense(vec![0; space.div_ceil(64) as usize])
        } else {
            CodeSet::Sparse(HashSet::new())
        }
    }

    /// Returns true if `x` was not present.
    #[inline]
    pub(crate) fn insert(&mut self, x: u64) -> bool {
        match self {
            CodeSet::Dense(bits) => {
                let (w, b) = ((x / 64) as usize, x % 64);
                let fresh = (bits[w] >> b) & 1 == 0;
                bits[w] |= 1 << b;
                fresh
            }
            CodeSet::Sparse(s) => s.insert(x),
        }
    }

    #[inline]
    pub(crate) fn contains(&self, x: u64) -> bool {
        match self {
            CodeSet::Dense(bits) => bits
                .get((x / 64) as usize)
                .is_some_and(|w| (w >> (x % 64)) & 1 == 1),
            CodeSet::Sparse(s) => s.contains(&x),
        }
    }

    pub(crate) fn sorted(&self) -> Vec<u64> {
        match self {
            CodeSet::Dense(bits) => {
                let mut out = Vec::new();
                for (i, &w) in bits.iter().enumerate() {
                    let mut w = w;
                    while w != 0 {
                        out.push(i as u64 * 64 + w.trailing_zeros() as u64);
                        w &= w - 1;
                    }
                }
                out
            }
            CodeSet::Sparse(s) => {
                let mut v: Vec<u64> = s.iter().copied().collect();
                v.sort_unstable();
                v
            }
        }
    }

    pub(crate) fn union(mut self, other: CodeSet) -> CodeSet {
        match (&mut self, other) {
            (CodeSet::Dense(a), CodeSet::Dense(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x |= y;
                }
            }
            (CodeSet::Sparse(a), CodeSet::Sparse(b)) => a.extend(b),
            _ => unreachable!("sets over one code space share a layout"),
        }
        self
    }
}
