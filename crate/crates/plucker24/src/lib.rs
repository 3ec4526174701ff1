//! Plücker coordinates of real 2×4 matrices.
//!
//! A rank-2 real 2×4 matrix is determined, up to left multiplication by a
//! non-singular 2×2 matrix, by its six 2×2 column minors — its Plücker
//! coordinates on the Grassmannian Gr(2, 4). A sextuple of numbers arises
//! this way exactly when it satisfies the Plücker relation
//! `A12*A34 - A13*A24 + A14*A23 = 0`.
//!
//! The crate covers the full round trip:
//!
//! - [`Matrix2x4::minors`] extracts the sextuple; [`MinorSextuple`] carries
//!   the Plücker defect, the relation check, and span membership.
//! - [`reconstruct_canonical`] and [`reconstruct_exact`] rebuild a matrix
//!   from a consistent sextuple; [`are_equivalent`] and
//!   [`recover_transform`] decide linear equivalence and produce the change
//!   of basis.
//! - [`project`] corrects a noisy sextuple by orthogonal projection onto the
//!   Plücker quadric, for measured data that misses the relation.
//!
//! All operations are pure functions on immutable `Copy` values and are safe
//! to call concurrently.
//!
//! ```
//! use plucker24::{project, reconstruct_exact, select_pivot, MinorSextuple, Tolerance};
//!
//! let tol = Tolerance::default();
//! let noisy = MinorSextuple::new(2.0, 0.0, 0.0, 0.0, 0.0, 1.0)?;
//! let corrected = project(&noisy, tol)?.corrected;
//! let pivot = select_pivot(&corrected, tol)?;
//! let matrix = reconstruct_exact(&corrected, pivot, tol)?;
//! assert_eq!(matrix.minors(), corrected);
//! # Ok::<(), plucker24::Error>(())
//! ```

pub mod error;
pub mod matrix;
pub mod minors;
pub mod plucker;
pub mod project;
pub mod reconstruct;
pub mod tolerance;

pub use error::{Error, MatrixSide};
pub use matrix::Matrix2x4;
pub use minors::MinorSextuple;
pub use plucker::PluckerVector;
pub use project::{project, ProjectionResult};
pub use reconstruct::{
    are_equivalent, reconstruct_canonical, reconstruct_exact, recover_transform, select_pivot,
    ParsePivotError, Pivot, Transform2x2,
};
pub use tolerance::Tolerance;
