//! Total-soft-set (0/1 matrix) representation.
//!
//! Rows follow the attribute order of the space, columns the element order.
//! Going through a matrix forces every soft set to be total, so the partial
//! domain of the original is lost.

use std::fmt;
use std::sync::Arc;

use crate::error::{Result, SoftSetError};
use crate::softset::{SoftSet, SoftSpace, ValueSet};

/// An `m × n` indicator matrix: one row per attribute, one column per element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: Vec<Vec<u8>>,
    row_labels: Vec<String>,
}

impl BinaryMatrix {
    /// Builds a matrix from raw rows, checking that every entry is 0 or 1 and
    /// that rows are of equal length.
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(SoftSetError::DimensionMismatch {
                    rows: rows.len(),
                    cols: row.len(),
                    expected_rows: rows.len(),
                    expected_cols: cols,
                });
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v > 1) {
                return Err(SoftSetError::NonBinaryEntry {
                    row: i,
                    col: j,
                    value: v,
                });
            }
        }
        let row_labels = (1..=rows.len()).map(|i| format!("r{i}")).collect();
        Ok(BinaryMatrix { rows, row_labels })
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows.len(), self.rows.first().map_or(0, Vec::len))
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.rows[row][col]
    }

    pub fn transpose(&self) -> Vec<Vec<u8>> {
        let (m, n) = self.dims();
        (0..n)
            .map(|j| (0..m).map(|i| self.rows[i][j]).collect())
            .collect()
    }
}

impl fmt::Display for BinaryMatrix {
    /// One line per attribute: the label, then space-separated entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, row) in self.row_labels.iter().zip(&self.rows) {
            f.write_str(label)?;
            for v in row {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Extends `f` to all of `E`, mapping absent attributes to the empty set.
pub fn totalize(f: &SoftSet) -> SoftSet {
    let space = f.space();
    let entries =
        (0..space.attribute_count()).map(|a| (a, f.value(a).cloned().unwrap_or_default()));
    SoftSet::from_indices(space, entries).expect("indices come from the same space")
}

pub fn to_matrix(f: &SoftSet) -> BinaryMatrix {
    let space = f.space();
    let rows = (0..space.attribute_count())
        .map(|a| {
            let value = f.value(a);
            (0..space.element_count())
                .map(|x| u8::from(value.is_some_and(|v| v.contains(&x))))
                .collect()
        })
        .collect();
    BinaryMatrix {
        rows,
        row_labels: space.attributes().to_vec(),
    }
}

/// Reads a total soft set off the rows of `mat`.
pub fn from_matrix(mat: &BinaryMatrix, space: &Arc<SoftSpace>) -> Result<SoftSet> {
    let (m, n) = mat.dims();
    if m != space.attribute_count() || n != space.element_count() {
        return Err(SoftSetError::DimensionMismatch {
            rows: m,
            cols: n,
            expected_rows: space.attribute_count(),
            expected_cols: space.element_count(),
        });
    }
    let entries = mat.rows.iter().enumerate().map(|(a, row)| {
        let set: ValueSet = row
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 1)
            .map(|(x, _)| x)
            .collect();
        (a, set)
    });
    SoftSet::from_indices(space, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::softset::{null_soft_set, soft_equal, whole_soft_set};

    fn example() -> SoftSet {
        let space = SoftSpace::new(["a", "b", "c"], ["e1", "e2", "e3"]).unwrap();
        SoftSet::from_names(&space, [("e1", vec!["a", "c"]), ("e3", vec!["b", "c"])]).unwrap()
    }

    #[test]
    fn totalize_example() {
        let t = totalize(&example());
        assert_eq!(t.to_string(), "{e1={a,c}, e2={}, e3={b,c}}");
        assert!(soft_equal(&totalize(&t), &t).unwrap());
    }

    #[test]
    fn matrix_layout_is_attribute_rows() {
        let m = to_matrix(&example());
        assert_eq!(m.rows(), &[vec![1, 0, 1], vec![0, 0, 0], vec![0, 1, 1]]);
        // the published display of this example is the transpose
        assert_eq!(
            m.transpose(),
            vec![vec![1, 0, 0], vec![0, 0, 1], vec![1, 0, 1]]
        );
        assert_eq!(m.to_string(), "e1 1 0 1\ne2 0 0 0\ne3 0 1 1\n");
    }

    #[test]
    fn extremes() {
        let space = example().space().clone();
        assert!(to_matrix(&null_soft_set(&space))
            .rows()
            .iter()
            .flatten()
            .all(|&v| v == 0));
        assert!(to_matrix(&whole_soft_set(&space))
            .rows()
            .iter()
            .flatten()
            .all(|&v| v == 1));
        let zeros = BinaryMatrix::from_rows(vec![vec![0; 3]; 3]).unwrap();
        let back = from_matrix(&zeros, &space).unwrap();
        assert!(soft_equal(&back, &null_soft_set(&space)).unwrap());
    }

    #[test]
    fn round_trip_loses_partiality() {
        let f = example();
        let back = from_matrix(&to_matrix(&f), f.space()).unwrap();
        assert!(!soft_equal(&back, &f).unwrap());
        assert!(soft_equal(&back, &totalize(&f)).unwrap());
    }

    #[test]
    fn dimension_and_entry_checks() {
        let space = example().space().clone();
        let bad = BinaryMatrix::from_rows(vec![vec![0, 1]; 3]).unwrap();
        assert!(matches!(
            from_matrix(&bad, &space),
            Err(SoftSetError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            BinaryMatrix::from_rows(vec![vec![0, 2]]),
            Err(SoftSetError::NonBinaryEntry {
                row: 0,
                col: 1,
                value: 2
            })
        ));
    }
}
