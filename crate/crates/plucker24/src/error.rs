//! Error type shared by every fallible operation in the crate.

use std::fmt;

use crate::reconstruct::Pivot;

/// Which input matrix a rank failure refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixSide {
    A,
    B,
}

impl fmt::Display for MatrixSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixSide::A => write!(f, "A"),
            MatrixSide::B => write!(f, "B"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A value that must be finite was NaN or infinite.
    NonFinite(&'static str),
    /// Tolerance construction rejected the thresholds.
    InvalidTolerance { rel: f64, abs: f64 },
    /// All six minors vanish within tolerance; the row span is undefined.
    DegenerateInput,
    /// The requested pivot minor is too small to normalize by.
    PivotTooSmall {
        pivot: Pivot,
        magnitude: f64,
        threshold: f64,
    },
    /// The sextuple violates the Plücker relation beyond tolerance.
    PluckerViolated { defect: f64, threshold: f64 },
    /// An input matrix does not have rank 2.
    RankDeficient { side: MatrixSide, rank: usize },
    /// No non-singular change of basis maps one matrix onto the other.
    NotEquivalent { residual: f64 },
    /// The nearest point on the quadric is not unique (|p| = 1).
    DegenerateProjection { p: f64 },
    /// Projection of the all-zero sextuple is undefined.
    AllZeroInput,
    /// A change-of-basis matrix must be non-singular.
    SingularTransform { det: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Error::InvalidTolerance { rel, abs } => {
                write!(f, "invalid tolerance: need rel > 0 and abs >= 0, got rel = {rel:e}, abs = {abs:e}")
            }
            Error::DegenerateInput => {
                write!(f, "all six minors are below the absolute tolerance; the row span is undefined")
            }
            Error::PivotTooSmall {
                pivot,
                magnitude,
                threshold,
            } => write!(
                f,
                "pivot minor m{pivot} has magnitude {magnitude:e}, at or below threshold {threshold:e}"
            ),
            Error::PluckerViolated { defect, threshold } => write!(
                f,
                "minor sextuple violates the Plücker relation: defect {defect:e} exceeds threshold {threshold:e}"
            ),
            Error::RankDeficient { side, rank } => {
                write!(f, "matrix {side} has rank {rank}, expected rank 2")
            }
            Error::NotEquivalent { residual } => write!(
                f,
                "matrices are not linearly equivalent (residual {residual:e})"
            ),
            Error::DegenerateProjection { p } => write!(
                f,
                "nearest points on the quadric are not unique (p = {p})"
            ),
            Error::AllZeroInput => {
                write!(f, "all six minors are zero within absolute tolerance")
            }
            Error::SingularTransform { det } => {
                write!(f, "change-of-basis matrix is singular (det = {det:e})")
            }
        }
    }
}

impl std::error::Error for Error {}
