//! Real 2×4 matrices and their column minors.

use crate::error::Error;
use crate::minors::MinorSextuple;
use crate::tolerance::Tolerance;

/// A real 2×4 matrix, row-major. Entries are validated finite at
/// construction. Column indices are 1-based in documentation, matching the
/// usual minor notation `A_ij`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2x4 {
    rows: [[f64; 4]; 2],
}

impl Matrix2x4 {
    pub fn new(rows: [[f64; 4]; 2]) -> Result<Self, Error> {
        if rows.iter().flatten().all(|v| v.is_finite()) {
            Ok(Self { rows })
        } else {
            Err(Error::NonFinite("matrix entry"))
        }
    }

    /// Skips the finiteness check; callers guarantee entries are finite.
    pub(crate) fn from_rows_unchecked(rows: [[f64; 4]; 2]) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> [[f64; 4]; 2] {
        self.rows
    }

    pub fn row(&self, r: usize) -> [f64; 4] {
        self.rows[r]
    }

    /// Entry at 0-based (row, col).
    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.rows[row][col]
    }

    /// The signed minor `A_ij`: the determinant of the 2×2 submatrix formed
    /// by columns `i` and `j` (1-based). Antisymmetric in `(i, j)`; zero when
    /// `i == j`.
    pub fn minor(&self, i: usize, j: usize) -> f64 {
        assert!(
            (1..=4).contains(&i) && (1..=4).contains(&j),
            "column indices are 1-based in 1..=4"
        );
        let (r1, r2) = (&self.rows[0], &self.rows[1]);
        r1[i - 1] * r2[j - 1] - r1[j - 1] * r2[i - 1]
    }

    /// All six independent minors, in storage order (12, 13, 14, 23, 24, 34).
    pub fn minors(&self) -> MinorSextuple {
        MinorSextuple {
            m12: self.minor(1, 2),
            m13: self.minor(1, 3),
            m14: self.minor(1, 4),
            m23: self.minor(2, 3),
            m24: self.minor(2, 4),
            m34: self.minor(3, 4),
        }
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    /// Numerical rank in {0, 1, 2}. Rank 2 means some minor exceeds the
    /// tolerance at the minors' natural scale (degree 2 in the entries);
    /// rank 0 means every entry is within the absolute floor.
    pub fn rank(&self, tol: Tolerance) -> usize {
        let entry_scale = self.max_abs_entry();
        if self.minors().max_abs() > tol.threshold(entry_scale * entry_scale) {
            2
        } else if entry_scale <= tol.abs() {
            0
        } else {
            1
        }
    }
}
