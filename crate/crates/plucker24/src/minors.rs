//! Minor sextuples, the Plücker relation, and the span-membership system.

use crate::error::Error;
use crate::tolerance::Tolerance;

/// Turns `-0.0` into `+0.0` so derived values serialize stably; every other
/// value (including NaN) passes through unchanged.
pub(crate) fn flush_zero_sign(v: f64) -> f64 {
    v + 0.0
}

/// The six independent minors (A12, A13, A14, A23, A24, A34) of a 2×4
/// matrix, in this fixed storage order. These are the Plücker coordinates of
/// the matrix's row span. Reversed-index minors `A_ji = -A_ij` are derived on
/// demand by [`MinorSextuple::minor`], never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinorSextuple {
    pub m12: f64,
    pub m13: f64,
    pub m14: f64,
    pub m23: f64,
    pub m24: f64,
    pub m34: f64,
}

impl MinorSextuple {
    pub fn new(m12: f64, m13: f64, m14: f64, m23: f64, m24: f64, m34: f64) -> Result<Self, Error> {
        let m = Self {
            m12,
            m13,
            m14,
            m23,
            m24,
            m34,
        };
        if m.is_finite() {
            Ok(m)
        } else {
            Err(Error::NonFinite("minor"))
        }
    }

    /// Storage order (m12, m13, m14, m23, m24, m34).
    pub fn from_array(values: [f64; 6]) -> Result<Self, Error> {
        let [m12, m13, m14, m23, m24, m34] = values;
        Self::new(m12, m13, m14, m23, m24, m34)
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.m12, self.m13, self.m14, self.m23, self.m24, self.m34]
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }

    /// The signed minor `A_ij` for any 1-based pair, using `A_ji = -A_ij`;
    /// zero when `i == j`.
    pub fn minor(&self, i: usize, j: usize) -> f64 {
        assert!(
            (1..=4).contains(&i) && (1..=4).contains(&j),
            "column indices are 1-based in 1..=4"
        );
        match (i, j) {
            (1, 2) => self.m12,
            (2, 1) => -self.m12,
            (1, 3) => self.m13,
            (3, 1) => -self.m13,
            (1, 4) => self.m14,
            (4, 1) => -self.m14,
            (2, 3) => self.m23,
            (3, 2) => -self.m23,
            (2, 4) => self.m24,
            (4, 2) => -self.m24,
            (3, 4) => self.m34,
            (4, 3) => -self.m34,
            _ => 0.0,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array()
            .iter()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    /// Componentwise scaling.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            m12: self.m12 * factor,
            m13: self.m13 * factor,
            m14: self.m14 * factor,
            m23: self.m23 * factor,
            m24: self.m24 * factor,
            m34: self.m34 * factor,
        }
    }

    /// The signed left side of the Plücker relation,
    /// `m12*m34 - m13*m24 + m14*m23`. Zero exactly when the sextuple is the
    /// minor sextuple of some rank-2 matrix.
    pub fn plucker_defect(&self) -> f64 {
        self.m12 * self.m34 - self.m13 * self.m24 + self.m14 * self.m23
    }

    /// Whether the defect vanishes at the defect's natural scale, which is
    /// degree 2 in the minors.
    pub fn satisfies_plucker(&self, tol: Tolerance) -> bool {
        let scale = self.max_abs();
        self.plucker_defect().abs() <= tol.threshold(scale * scale)
    }

    /// Residuals of the four span-membership equations at `x`:
    ///
    /// ```text
    /// r1 = m23*x1 - m13*x2 + m12*x3
    /// r2 = m24*x1 - m14*x2 + m12*x4
    /// r3 = m34*x1 - m14*x3 + m13*x4
    /// r4 = m34*x2 - m24*x3 + m23*x4
    /// ```
    ///
    /// All four vanish exactly when `x` lies in the row span of a matrix
    /// with these minors.
    pub fn span_residuals(&self, x: [f64; 4]) -> [f64; 4] {
        let [x1, x2, x3, x4] = x;
        [
            self.m23 * x1 - self.m13 * x2 + self.m12 * x3,
            self.m24 * x1 - self.m14 * x2 + self.m12 * x4,
            self.m34 * x1 - self.m14 * x3 + self.m13 * x4,
            self.m34 * x2 - self.m24 * x3 + self.m23 * x4,
        ]
    }

    /// Whether `x` lies in the row span described by this sextuple. The
    /// sextuple must come from a rank-2 matrix (not all minors zero and the
    /// Plücker relation satisfied).
    pub fn span_contains(&self, x: [f64; 4], tol: Tolerance) -> Result<bool, Error> {
        if self.max_abs() <= tol.abs() {
            return Err(Error::DegenerateInput);
        }
        let x_scale = x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let threshold = tol.threshold(self.max_abs() * x_scale);
        Ok(self
            .span_residuals(x)
            .iter()
            .all(|r| r.abs() <= threshold))
    }
}
