use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::fps::{FpsError, RingSpec};

/// An `(n+1) x (n+1)` lower-triangular matrix over a coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RiordanMatrix {
    ring: RingSpec,
    rows: Vec<Vec<BigInt>>,
}

impl RiordanMatrix {
    /// Square rows, reduced into the ring.
    pub fn from_rows(ring: RingSpec, rows: Vec<Vec<BigInt>>) -> Self {
        let size = rows.len();
        let rows = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), size, "matrix rows must be square");
                r.iter().map(|x| ring.reduce(x)).collect()
            })
            .collect();
        RiordanMatrix { ring, rows }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    /// The level `n`; the matrix has `n + 1` rows.
    pub fn n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64().expect("entry fits in i64")).collect())
            .collect()
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().skip(i + 1).all(Zero::is_zero))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FpsError> {
        if self.ring != other.ring {
            return Err(FpsError::IncompatibleRings(self.ring, other.ring));
        }
        let size = self.rows.len().min(other.rows.len());
        let rows = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        (0..size)
                            .map(|k| &self.rows[i][k] * &other.rows[k][j])
                            .sum::<BigInt>()
                    })
                    .collect()
            })
            .collect();
        Ok(Self::from_rows(self.ring, rows))
    }

    /// Keeps the top-left `(n+1) x (n+1)` block.
    pub fn truncate(&self, n: usize) -> Result<Self, FpsError> {
        if n > self.n() {
            return Err(FpsError::CannotExtend { from: self.n(), to: n });
        }
        let rows = self.rows[..=n].iter().map(|r| r[..=n].to_vec()).collect();
        Ok(RiordanMatrix { ring: self.ring, rows })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Array of rows with entries as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows
                .iter()
                .map(|r| r.iter().map(|x| serde_json::Value::String(x.to_string())).collect())
                .collect(),
        )
    }
}

impl fmt::Display for RiordanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
