use super::ring::{inv_mod, is_prime};
use super::FpsError;

/// `C(m, k) mod p` as the product of binomials of the base-`p` digits.
///
/// Returns 0 when `k > m`.
pub fn lucas_binomial(mut m: u64, mut k: u64, p: u64) -> Result<u64, FpsError> {
    if !is_prime(p) || p >= super::ring::MAX_MODULUS {
        return Err(FpsError::NotPrime(p));
    }
    if k > m {
        return Ok(0);
    }
    let mut acc = 1u64;
    while k > 0 || m > 0 {
        let (mi, ki) = (m % p, k % p);
        if ki > mi {
            return Ok(0);
        }
        acc = acc * small_binomial(mi, ki, p) % p;
        m /= p;
        k /= p;
    }
    Ok(acc)
}

/// `C(m, k) mod p` for digits `k <= m < p`; every factorial involved is a unit.
fn small_binomial(m: u64, k: u64, p: u64) -> u64 {
    let k = k.min(m - k);
    let (mut num, mut den) = (1u64, 1u64);
    for j in 0..k {
        num = num * ((m - j) % p) % p;
        den = den * ((j + 1) % p) % p;
    }
    num * inv_mod(den, p).expect("digit factorials are units") % p
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Pascal triangle modulo p, independent of digit expansions.
    fn pascal_mod(rows: usize, p: u64) -> Vec<Vec<u64>> {
        let mut t = vec![vec![1u64]];
        for n in 1..=rows {
            let prev = &t[n - 1];
            let mut row = vec![1u64; n + 1];
            for k in 1..n {
                row[k] = (prev[k - 1] + prev[k]) % p;
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn documented_values() {
        assert_eq!(lucas_binomial(4, 2, 2).unwrap(), 0);
        assert_eq!(lucas_binomial(5, 5, 2).unwrap(), 1);
        assert_eq!(lucas_binomial(3, 7, 2).unwrap(), 0);
        for q in 1..8 {
            let m = 1u64 << q;
            for k in 1..m {
                assert_eq!(lucas_binomial(m, k, 2).unwrap(), 0, "C({m},{k})");
            }
        }
    }

    #[test]
    fn agrees_with_pascal_up_to_64() {
        for p in [2u64, 3, 5, 7, 61] {
            let t = pascal_mod(64, p);
            for m in 0..=64u64 {
                for k in 0..=m {
                    assert_eq!(
                        lucas_binomial(m, k, p).unwrap(),
                        t[m as usize][k as usize],
                        "C({m},{k}) mod {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(lucas_binomial(4, 2, 4).is_err());
    }
}
