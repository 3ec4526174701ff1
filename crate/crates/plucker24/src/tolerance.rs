//! Relative/absolute thresholds for approximate comparisons.

use crate::error::Error;

/// Tolerance used by every approximate comparison in the crate.
///
/// A comparison of a quantity with natural magnitude `scale` passes when the
/// discrepancy does not exceed `abs + rel * scale`. The scale is degree-2 in
/// the matrix entries for minors, and degree-2 in the minors for the Plücker
/// defect, so that exactly-zero-in-exact-arithmetic quantities round no
/// larger than the threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    rel: f64,
    abs: f64,
}

impl Tolerance {
    /// Requires `rel > 0` and `abs >= 0`, both finite.
    pub fn new(rel: f64, abs: f64) -> Result<Self, Error> {
        if rel.is_finite() && abs.is_finite() && rel > 0.0 && abs >= 0.0 {
            Ok(Self { rel, abs })
        } else {
            Err(Error::InvalidTolerance { rel, abs })
        }
    }

    pub fn rel(&self) -> f64 {
        self.rel
    }

    pub fn abs(&self) -> f64 {
        self.abs
    }

    /// The acceptance threshold for a quantity of the given natural magnitude.
    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale
    }
}

impl Default for Tolerance {
    /// `rel = 1e-9`, `abs = 1e-12`: double-precision headroom at desk-scale
    /// magnitudes.
    fn default() -> Self {
        Self {
            rel: 1e-9,
            abs: 1e-12,
        }
    }
}
