use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::subgroup::OrderCensus;
use super::GroupError;
use crate::fps::factorize;

/// A finite abelian group as its prime-power cyclic factors, largest first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AbelianType {
    factors: Vec<u64>,
}

impl AbelianType {
    /// Sorts the factors; each must be a prime power at least 2.
    pub fn new(mut factors: Vec<u64>) -> Result<Self, GroupError> {
        if factors.iter().any(|&q| q < 2 || factorize(q).len() != 1) {
            return Err(GroupError::BadCensus);
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        Ok(AbelianType { factors })
    }

    pub fn trivial() -> Self {
        AbelianType::default()
    }

    /// `(Z_2)^k`.
    pub fn elementary(p: u64, k: usize) -> Self {
        AbelianType { factors: vec![p; k] }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u128 {
        self.factors.iter().map(|&q| q as u128).product()
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        let mut per_prime: BTreeMap<u64, usize> = BTreeMap::new();
        for &q in &self.factors {
            *per_prime.entry(factorize(q)[0].0).or_default() += 1;
        }
        per_prime.values().copied().max().unwrap_or(0)
    }

    /// Direct product.
    pub fn product(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(&other.factors);
        factors.sort_unstable_by(|a, b| b.cmp(a));
        AbelianType { factors }
    }

    /// Recovers the factors from the number of elements of each order.
    ///
    /// For each prime `p`, with `c_s` the number of elements whose order
    /// divides `p^s`, the number of factors of order at least `p^s` is
    /// `log_p(c_s / c_(s-1))`.
    pub fn from_census(census: &OrderCensus) -> Result<Self, GroupError> {
        let total: u64 = census.values().sum();
        if census.get(&1) != Some(&1) {
            return Err(GroupError::BadCensus);
        }
        let mut primes: Vec<u64> = census
            .keys()
            .flat_map(|&d| factorize(d).into_iter().map(|(p, _)| p))
            .collect();
        primes.sort_unstable();
        primes.dedup();

        let mut factors = Vec::new();
        let mut covered: u64 = 1;
        for p in primes {
            let mut at_least = Vec::new();
            let mut prev = 1u64;
            let mut pk = 1u64;
            loop {
                pk *= p;
                let c: u64 = census
                    .iter()
                    .filter(|(&d, _)| pk % d == 0)
                    .map(|(_, &v)| v)
                    .sum();
                if c == prev {
                    break;
                }
                let ratio = c / prev;
                if c % prev != 0 || factorize(ratio).iter().any(|&(q, _)| q != p) {
                    return Err(GroupError::BadCensus);
                }
                at_least.push(ratio.ilog(p) as usize);
                prev = c;
            }
            covered *= prev;
            for (s, &k) in at_least.iter().enumerate() {
                let next = at_least.get(s + 1).copied().unwrap_or(0);
                if k < next {
                    return Err(GroupError::BadCensus);
                }
                factors.extend(std::iter::repeat_n(p.pow(s as u32 + 1), k - next));
            }
        }
        if covered != total {
            return Err(GroupError::BadCensus);
        }
        AbelianType::new(factors)
    }

    /// Number of elements of each order in the group with these factors.
    pub fn census(&self) -> OrderCensus {
        let exponent = self.factors.iter().fold(1u64, |l, &q| l.lcm(&q));
        let divisors: Vec<u64> = (1..=exponent).filter(|d| exponent % d == 0).collect();
        let mut out = OrderCensus::new();
        for &d in &divisors {
            let dividing: u64 = self.factors.iter().map(|&q| q.gcd(&d)).product();
            let smaller: u64 = out
                .iter()
                .filter(|(&e, _)| d % e == 0 && e < d)
                .map(|(_, &v)| v)
                .sum();
            let exact = dividing - smaller;
            if exact > 0 {
                out.insert(d, exact);
            }
        }
        out
    }

    /// Space-separated factors, e.g. `16 4 2 2`.
    pub fn to_plain(&self) -> String {
        let v: Vec<String> = self.factors.iter().map(u64::to_string).collect();
        v.join(" ")
    }
}

/// Braced factor list, e.g. `{16,4,2,2}`.
impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.factors.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(f: &[u64]) -> AbelianType {
        AbelianType::new(f.to_vec()).unwrap()
    }

    #[test]
    fn census_round_trip() {
        for f in [
            vec![],
            vec![2],
            vec![8, 2],
            vec![16, 4, 2, 2],
            vec![4, 2, 2, 2],
            vec![9, 3, 4, 2],
            vec![5, 3, 2],
        ] {
            let t = at(&f);
            let c = t.census();
            assert_eq!(c.values().sum::<u64>() as u128, t.order());
            assert_eq!(AbelianType::from_census(&c).unwrap(), t);
        }
    }

    #[test]
    fn z8_times_z2_census() {
        assert_eq!(at(&[8, 2]).census(), OrderCensus::from([(1, 1), (2, 3), (4, 4), (8, 8)]));
    }

    #[test]
    fn rejects_non_abelian_census() {
        // Order census of D4.
        let d4 = OrderCensus::from([(1, 1), (2, 5), (4, 2)]);
        assert!(AbelianType::from_census(&d4).is_err());
        assert!(AbelianType::new(vec![6]).is_err());
    }

    #[test]
    fn rank_and_display() {
        let t = at(&[2, 16, 2, 4]);
        assert_eq!(t.factors(), &[16, 4, 2, 2]);
        assert_eq!(t.rank(), 4);
        assert_eq!(t.to_string(), "{16,4,2,2}");
        assert_eq!(t.to_plain(), "16 4 2 2");
        assert_eq!(at(&[4, 3]).rank(), 1);
        assert_eq!(at(&[2]).product(&at(&[4])).factors(), &[4, 2]);
    }
}
