//! Reconstruction of a representative matrix from a minor sextuple, and
//! linear equivalence of 2×4 matrices.
//!
//! Two rank-2 matrices have the same row span exactly when one is a
//! non-singular 2×2 multiple of the other, exactly when their minor
//! sextuples are proportional. Reconstruction inverts that map: given a
//! sextuple satisfying the Plücker relation, it produces a matrix whose
//! minors are the given ones up to (`reconstruct_canonical`) or including
//! (`reconstruct_exact`) the proportionality constant.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, MatrixSide};
use crate::matrix::Matrix2x4;
use crate::minors::{flush_zero_sign, MinorSextuple};
use crate::tolerance::Tolerance;

/// The minor chosen to drive reconstruction; must be nonzero at the given
/// tolerance. Each of the six choices has its own row template.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pivot {
    M12,
    M13,
    M14,
    M23,
    M24,
    M34,
}

impl Pivot {
    /// Storage order (12, 13, 14, 23, 24, 34), also the tie-break order of
    /// [`select_pivot`].
    pub const ALL: [Pivot; 6] = [
        Pivot::M12,
        Pivot::M13,
        Pivot::M14,
        Pivot::M23,
        Pivot::M24,
        Pivot::M34,
    ];

    /// 1-based column indices (i, j) of the pivot minor.
    pub fn columns(self) -> (usize, usize) {
        match self {
            Pivot::M12 => (1, 2),
            Pivot::M13 => (1, 3),
            Pivot::M14 => (1, 4),
            Pivot::M23 => (2, 3),
            Pivot::M24 => (2, 4),
            Pivot::M34 => (3, 4),
        }
    }

    /// Value of the pivot minor within a sextuple.
    pub fn value_in(self, m: &MinorSextuple) -> f64 {
        match self {
            Pivot::M12 => m.m12,
            Pivot::M13 => m.m13,
            Pivot::M14 => m.m14,
            Pivot::M23 => m.m23,
            Pivot::M24 => m.m24,
            Pivot::M34 => m.m34,
        }
    }
}

impl fmt::Display for Pivot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.columns();
        write!(f, "{i}{j}")
    }
}

/// Failed parse of a pivot name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePivotError;

impl fmt::Display for ParsePivotError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected one of 12, 13, 14, 23, 24, 34")
    }
}

impl std::error::Error for ParsePivotError {}

impl FromStr for Pivot {
    type Err = ParsePivotError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "12" => Ok(Pivot::M12),
            "13" => Ok(Pivot::M13),
            "14" => Ok(Pivot::M14),
            "23" => Ok(Pivot::M23),
            "24" => Ok(Pivot::M24),
            "34" => Ok(Pivot::M34),
            _ => Err(ParsePivotError),
        }
    }
}

/// A non-singular 2×2 change-of-basis matrix `S`; `B = S * A` relates
/// linearly equivalent matrices, and `det S` is the proportionality factor
/// between their minor sextuples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform2x2 {
    pub s11: f64,
    pub s12: f64,
    pub s21: f64,
    pub s22: f64,
}

impl Transform2x2 {
    /// Requires finite entries and a determinant above the tolerance at the
    /// determinant's natural scale (degree 2 in the entries).
    pub fn new(s11: f64, s12: f64, s21: f64, s22: f64, tol: Tolerance) -> Result<Self, Error> {
        let s = Self { s11, s12, s21, s22 };
        if ![s11, s12, s21, s22].iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("transform entry"));
        }
        let scale = s.max_abs();
        if s.det().abs() <= tol.threshold(scale * scale) {
            return Err(Error::SingularTransform { det: s.det() });
        }
        Ok(s)
    }

    pub fn identity() -> Self {
        Self {
            s11: 1.0,
            s12: 0.0,
            s21: 0.0,
            s22: 1.0,
        }
    }

    pub fn det(&self) -> f64 {
        self.s11 * self.s22 - self.s12 * self.s21
    }

    pub fn max_abs(&self) -> f64 {
        [self.s11, self.s12, self.s21, self.s22]
            .iter()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    pub fn to_rows(&self) -> [[f64; 2]; 2] {
        [[self.s11, self.s12], [self.s21, self.s22]]
    }

    /// The product `S * A`.
    pub fn apply(&self, a: &Matrix2x4) -> Matrix2x4 {
        let r1 = a.row(0);
        let r2 = a.row(1);
        let mut rows = [[0.0; 4]; 2];
        for c in 0..4 {
            rows[0][c] = self.s11 * r1[c] + self.s12 * r2[c];
            rows[1][c] = self.s21 * r1[c] + self.s22 * r2[c];
        }
        Matrix2x4::from_rows_unchecked(rows)
    }
}

/// The pivot whose minor has the largest absolute value; ties break toward
/// storage order. Maximizing the pivot keeps the normalizing divisions in
/// reconstruction well conditioned.
pub fn select_pivot(m: &MinorSextuple, tol: Tolerance) -> Result<Pivot, Error> {
    if m.max_abs() <= tol.abs() {
        return Err(Error::DegenerateInput);
    }
    let mut best = Pivot::M12;
    let mut best_abs = m.m12.abs();
    for pivot in &Pivot::ALL[1..] {
        let abs = pivot.value_in(m).abs();
        if abs > best_abs {
            best = *pivot;
            best_abs = abs;
        }
    }
    Ok(best)
}

/// Row templates, one per pivot. `first` supplies the symbols of row 1,
/// `second` those of row 2, and `slot` fills the position that carries the
/// pivot scale. With `first = second = m/pivot` and `slot = 1` the rows are
/// the canonical representative; with `first = m`, `second = m/pivot`,
/// `slot = pivot` the minors of the rows reproduce `m` itself. Each row
/// annihilates the pivot's pair of span-membership equations; closure of the
/// remaining minors uses the Plücker relation.
fn template_rows(
    pivot: Pivot,
    first: &MinorSextuple,
    second: &MinorSextuple,
    slot: f64,
) -> [[f64; 4]; 2] {
    let f = first;
    let s = second;
    match pivot {
        Pivot::M12 => [[slot, 0.0, -f.m23, -f.m24], [0.0, 1.0, s.m13, s.m14]],
        Pivot::M13 => [[slot, f.m23, 0.0, -f.m34], [0.0, s.m12, 1.0, s.m14]],
        Pivot::M14 => [[slot, f.m24, f.m34, 0.0], [0.0, s.m12, s.m13, 1.0]],
        Pivot::M23 => [[f.m13, slot, 0.0, -f.m34], [-s.m12, 0.0, 1.0, s.m24]],
        Pivot::M24 => [[f.m14, slot, f.m34, 0.0], [-s.m12, 0.0, s.m23, 1.0]],
        Pivot::M34 => [[f.m14, f.m24, slot, 0.0], [-s.m13, -s.m23, 0.0, 1.0]],
    }
}

fn checked_normalized(
    m: &MinorSextuple,
    pivot: Pivot,
    tol: Tolerance,
) -> Result<(MinorSextuple, f64), Error> {
    let pivot_value = pivot.value_in(m);
    let threshold = tol.threshold(m.max_abs());
    if pivot_value.abs() <= threshold {
        return Err(Error::PivotTooSmall {
            pivot,
            magnitude: pivot_value.abs(),
            threshold,
        });
    }
    if !m.satisfies_plucker(tol) {
        let scale = m.max_abs();
        return Err(Error::PluckerViolated {
            defect: m.plucker_defect(),
            threshold: tol.threshold(scale * scale),
        });
    }
    let normalized = MinorSextuple {
        m12: m.m12 / pivot_value,
        m13: m.m13 / pivot_value,
        m14: m.m14 / pivot_value,
        m23: m.m23 / pivot_value,
        m24: m.m24 / pivot_value,
        m34: m.m34 / pivot_value,
    };
    Ok((normalized, pivot_value))
}

/// A matrix whose minors equal `m / m_pivot` (pivot minor normalized to 1).
/// The result is linearly equivalent to any matrix whose minors are `m`,
/// with proportionality factor `1 / m_pivot`.
pub fn reconstruct_canonical(
    m: &MinorSextuple,
    pivot: Pivot,
    tol: Tolerance,
) -> Result<Matrix2x4, Error> {
    let (normalized, _) = checked_normalized(m, pivot, tol)?;
    let rows = template_rows(pivot, &normalized, &normalized, 1.0)
        .map(|row| row.map(flush_zero_sign));
    Ok(Matrix2x4::from_rows_unchecked(rows))
}

/// A matrix whose minors equal `m` itself: the canonical template with row 1
/// carrying the pivot scale, so no proportionality constant remains.
pub fn reconstruct_exact(
    m: &MinorSextuple,
    pivot: Pivot,
    tol: Tolerance,
) -> Result<Matrix2x4, Error> {
    let (normalized, pivot_value) = checked_normalized(m, pivot, tol)?;
    let rows =
        template_rows(pivot, m, &normalized, pivot_value).map(|row| row.map(flush_zero_sign));
    Ok(Matrix2x4::from_rows_unchecked(rows))
}

fn require_rank2(a: &Matrix2x4, side: MatrixSide, tol: Tolerance) -> Result<(), Error> {
    let rank = a.rank(tol);
    if rank != 2 {
        return Err(Error::RankDeficient { side, rank });
    }
    Ok(())
}

/// Whether two rank-2 matrices are linearly equivalent, i.e. their minor
/// sextuples are proportional with a nonzero factor. Proportionality is
/// tested on the fifteen 2×2 cross determinants of the two sextuples, which
/// avoids dividing by small minors.
pub fn are_equivalent(a: &Matrix2x4, b: &Matrix2x4, tol: Tolerance) -> Result<bool, Error> {
    require_rank2(a, MatrixSide::A, tol)?;
    require_rank2(b, MatrixSide::B, tol)?;
    let ma = a.minors().to_array();
    let mb = b.minors().to_array();
    let scale_a = ma.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let scale_b = mb.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let threshold = tol.threshold(scale_a * scale_b);
    for i in 0..6 {
        for j in (i + 1)..6 {
            if (ma[i] * mb[j] - ma[j] * mb[i]).abs() > threshold {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The change of basis `S` with `B = S * A`, for linearly equivalent `a`
/// and `b`. Solves on the column pair of the largest minor of `a` and then
/// verifies the residual over all four columns; a residual above tolerance
/// means the matrices were not equivalent after all.
pub fn recover_transform(
    a: &Matrix2x4,
    b: &Matrix2x4,
    tol: Tolerance,
) -> Result<Transform2x2, Error> {
    require_rank2(a, MatrixSide::A, tol)?;
    require_rank2(b, MatrixSide::B, tol)?;
    let ma = a.minors();
    let pivot = select_pivot(&ma, tol).map_err(|_| Error::RankDeficient {
        side: MatrixSide::A,
        rank: a.rank(tol),
    })?;
    let (i, j) = pivot.columns();
    let (ci, cj) = (i - 1, j - 1);
    let det = pivot.value_in(&ma);

    // S = B[:, (i, j)] * inverse(A[:, (i, j)]); the inverse by adjugate over
    // det = A_ij.
    let (a1i, a1j) = (a.entry(0, ci), a.entry(0, cj));
    let (a2i, a2j) = (a.entry(1, ci), a.entry(1, cj));
    let (b1i, b1j) = (b.entry(0, ci), b.entry(0, cj));
    let (b2i, b2j) = (b.entry(1, ci), b.entry(1, cj));
    let s11 = flush_zero_sign((b1i * a2j - b1j * a2i) / det);
    let s12 = flush_zero_sign((b1j * a1i - b1i * a1j) / det);
    let s21 = flush_zero_sign((b2i * a2j - b2j * a2i) / det);
    let s22 = flush_zero_sign((b2j * a1i - b2i * a1j) / det);

    let candidate = Transform2x2 { s11, s12, s21, s22 };
    let product = candidate.apply(a);
    let mut residual = 0.0f64;
    for r in 0..2 {
        for c in 0..4 {
            residual = residual.max((product.entry(r, c) - b.entry(r, c)).abs());
        }
    }
    let scale = (2.0 * candidate.max_abs() * a.max_abs_entry()).max(b.max_abs_entry());
    if residual > tol.threshold(scale) {
        return Err(Error::NotEquivalent { residual });
    }
    Transform2x2::new(s11, s12, s21, s22, tol)
}
