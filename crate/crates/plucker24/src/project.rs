//! Correction of noisy minor sextuples by orthogonal projection onto the
//! Plücker quadric.
//!
//! Measured minors rarely satisfy the Plücker relation exactly. In quadric
//! coordinates the relation is `x1*x2 + x3*x4 + x5*x6 = 0`, and the normal
//! direction at an on-surface point `X` is `X*` (the star involution), so the
//! nearest on-surface point to a noisy `Y` satisfies
//!
//! ```text
//! Y = X + p * X*          (residual along the normal)
//! (X, X*) = 0             (on the surface)
//! ```
//!
//! Eliminating `X` gives `X = (Y - p * Y*) / (1 - p^2)` with `p` the root of
//! `p^2 - 2p (Y,Y)/(Y,Y*) + 1 = 0` that satisfies `|p| <= 1`.

use crate::error::Error;
use crate::minors::{flush_zero_sign, MinorSextuple};
use crate::tolerance::Tolerance;

/// Outcome of one projection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionResult {
    /// The corrected sextuple; its defect vanishes within tolerance.
    pub corrected: MinorSextuple,
    /// The normal-direction parameter; zero when the input already satisfied
    /// the relation, strictly inside (-1, 1) otherwise.
    pub p: f64,
    pub defect_before: f64,
    pub defect_after: f64,
}

/// Projects a noisy sextuple onto the Plücker quadric.
///
/// Inputs already satisfying the relation are returned unchanged with
/// `p = 0`. When the two nearest on-surface points are equidistant
/// (`|p| -> 1`, the quadric's cone of symmetry) there is no meaningful
/// correction and [`Error::DegenerateProjection`] is returned instead of an
/// arbitrary choice.
pub fn project(noisy: &MinorSextuple, tol: Tolerance) -> Result<ProjectionResult, Error> {
    if !noisy.is_finite() {
        return Err(Error::NonFinite("minor"));
    }
    if noisy.max_abs() <= tol.abs() {
        return Err(Error::AllZeroInput);
    }
    let defect_before = noisy.plucker_defect();
    if noisy.satisfies_plucker(tol) {
        return Ok(ProjectionResult {
            corrected: *noisy,
            p: 0.0,
            defect_before,
            defect_after: defect_before,
        });
    }

    let y = noisy.to_plucker();
    let ys = y.star();
    let yy = y.dot(y);
    let yys = y.dot(ys);

    // The |p| <= 1 root of the quadratic, written with the radical in the
    // denominator so small (Y, Y*) does not cancel. The discriminant is
    // non-negative by Cauchy-Schwarz (|Y*| = |Y|); clamp rounding noise.
    let disc = (yy * yy - yys * yys).max(0.0);
    let p = yys / (yy + disc.sqrt());

    let denom = 1.0 - p * p;
    if denom.abs() <= tol.threshold(1.0) {
        return Err(Error::DegenerateProjection { p });
    }

    let x = (y - ys * p) / denom;
    let corrected = MinorSextuple::from_plucker(x);
    let corrected = MinorSextuple {
        m12: flush_zero_sign(corrected.m12),
        m13: flush_zero_sign(corrected.m13),
        m14: flush_zero_sign(corrected.m14),
        m23: flush_zero_sign(corrected.m23),
        m24: flush_zero_sign(corrected.m24),
        m34: flush_zero_sign(corrected.m34),
    };
    let defect_after = corrected.plucker_defect();
    Ok(ProjectionResult {
        corrected,
        p,
        defect_before,
        defect_after,
    })
}
