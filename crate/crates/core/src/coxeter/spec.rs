use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Names accepted by [`CoxeterSpec::named`].
pub const SUPPORTED_TYPES: &str = "A1..A6, B2..B4, D4, H3, F4, I2(m) for 2 <= m <= 12";

/// A Coxeter matrix, optionally tagged with its type name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterSpec {
    rank: usize,
    matrix: Vec<u32>,
    type_tag: Option<String>,
}

impl CoxeterSpec {
    /// Validates symmetry, unit diagonal and off-diagonal labels >= 2.
    pub fn from_matrix(rows: &[Vec<u32>]) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::InvalidSpec("rank must be positive".into()));
        }
        if rank > 16 {
            return Err(Error::InvalidSpec(format!("rank {rank} exceeds the supported 16")));
        }
        let mut matrix = Vec::with_capacity(rank * rank);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidSpec(format!("row {} has {} entries, expected {rank}", i + 1, row.len())));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 1 {
                    return Err(Error::InvalidSpec(format!("diagonal entry m[{i}][{i}] = {m}, expected 1")));
                }
                if i != j && m < 2 {
                    return Err(Error::InvalidSpec(format!("off-diagonal entry m[{i}][{j}] = {m} is below 2")));
                }
                if rows[j][i] != m {
                    return Err(Error::InvalidSpec(format!("matrix is not symmetric at ({i}, {j})")));
                }
                matrix.push(m);
            }
        }
        Ok(CoxeterSpec {
            rank,
            matrix,
            type_tag: None,
        })
    }

    /// Standard matrix for a named type. Diagrams are linear with the exceptional
    /// bond placed as F4 (s2 -4- s3), H3 (s1 -5- s2), B_n (s_{n-1} -4- s_n) and D4
    /// with s2 as the branch node.
    pub fn named(name: &str) -> Result<Self> {
        let unknown = || {
            Error::InvalidSpec(format!("unknown group type '{name}'; supported: {SUPPORTED_TYPES}"))
        };
        let trimmed = name.trim();
        let upper = trimmed.to_ascii_uppercase();
        let path = |rank: usize, bonds: &[(usize, usize, u32)]| {
            let mut rows = vec![vec![2u32; rank]; rank];
            for (i, row) in rows.iter_mut().enumerate() {
                row[i] = 1;
                if i + 1 < rank {
                    row[i + 1] = 3;
                }
                if i > 0 {
                    row[i - 1] = 3;
                }
            }
            for &(i, j, m) in bonds {
                rows[i][j] = m;
                rows[j][i] = m;
            }
            rows
        };
        let rows = if let Some(inner) = upper.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = inner.trim().parse().map_err(|_| unknown())?;
            if !(2..=12).contains(&m) {
                return Err(unknown());
            }
            vec![vec![1, m], vec![m, 1]]
        } else {
            let (family, n) = upper.split_at(1.min(upper.len()));
            let n: usize = n.parse().map_err(|_| unknown())?;
            match (family, n) {
                ("A", 1..=6) => path(n, &[]),
                ("B", 2..=4) => path(n, &[(n - 2, n - 1, 4)]),
                ("D", 4) => {
                    let mut rows = vec![vec![2u32; 4]; 4];
                    for (i, row) in rows.iter_mut().enumerate() {
                        row[i] = 1;
                    }
                    for (i, j) in [(0, 1), (1, 2), (1, 3)] {
                        rows[i][j] = 3;
                        rows[j][i] = 3;
                    }
                    rows
                }
                ("H", 3) => path(3, &[(0, 1, 5)]),
                ("F", 4) => path(4, &[(1, 2, 4)]),
                _ => return Err(unknown()),
            }
        };
        let mut spec = Self::from_matrix(&rows)?;
        spec.type_tag = Some(canonical_tag(&upper));
        Ok(spec)
    }

    pub fn with_type_tag(mut self, tag: impl Into<String>) -> Self {
        self.type_tag = Some(tag.into());
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn type_tag(&self) -> Option<&str> {
        self.type_tag.as_deref()
    }

    /// Bond label m_{ij} (zero-based indices).
    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.matrix[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.matrix.chunks(self.rank).map(<[u32]>::to_vec).collect()
    }

    /// True when the diagram is the path s1 - s2 - ... - sn with all bonds 3,
    /// i.e. the symmetric group with its adjacent transpositions in order.
    pub fn is_type_a(&self) -> bool {
        (0..self.rank).all(|i| {
            (0..self.rank).all(|j| {
                let expected = if i == j {
                    1
                } else if i.abs_diff(j) == 1 {
                    3
                } else {
                    2
                };
                self.m(i, j) == expected
            })
        })
    }

    /// Display label: the type tag if present, else the matrix.
    pub fn label(&self) -> String {
        match &self.type_tag {
            Some(t) => t.clone(),
            None => format!("{:?}", self.rows()),
        }
    }
}

fn canonical_tag(upper: &str) -> String {
    match upper.strip_prefix("I2(") {
        Some(rest) => format!("I2({}", rest.trim_start()),
        None => upper.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_matrices() {
        let f4 = CoxeterSpec::named("F4").unwrap();
        assert_eq!(f4.rows(), vec![vec![1, 3, 2, 2], vec![3, 1, 4, 2], vec![2, 4, 1, 3], vec![2, 2, 3, 1]]);
        let h3 = CoxeterSpec::named("h3").unwrap();
        assert_eq!(h3.m(0, 1), 5);
        assert_eq!(h3.m(1, 2), 3);
        assert_eq!(h3.type_tag(), Some("H3"));
        assert!(CoxeterSpec::named("A4").unwrap().is_type_a());
        assert!(!h3.is_type_a());
        assert_eq!(CoxeterSpec::named("I2(8)").unwrap().m(0, 1), 8);
    }

    #[test]
    fn rejects_unknown_and_malformed() {
        let err = CoxeterSpec::named("E8").unwrap_err();
        assert!(matches!(err, Error::InvalidSpec(ref m) if m.contains("supported")));
        assert!(CoxeterSpec::named("I2(13)").is_err());
        assert!(CoxeterSpec::from_matrix(&[vec![1, 3], vec![2, 1]]).is_err());
        assert!(CoxeterSpec::from_matrix(&[vec![2, 3], vec![3, 1]]).is_err());
        assert!(CoxeterSpec::from_matrix(&[vec![1, 1], vec![1, 1]]).is_err());
    }
}
