//! Quadric coordinates for minor sextuples.
//!
//! The change of variables
//!
//! ```text
//! (x1, x2, x3, x4, x5, x6) = (A12, A34, A13, -A24, A14, A23)
//! ```
//!
//! turns the Plücker relation `A12*A34 - A13*A24 + A14*A23 = 0` into the
//! quadric `x1*x2 + x3*x4 + x5*x6 = 0` in 6-space. The sign on `x4` lives in
//! this module only; nothing else in the crate reorders or re-signs minors.

use std::ops::{Add, Div, Mul, Sub};

use crate::error::Error;
use crate::minors::MinorSextuple;

/// A point of the 6-space carrying the quadric `x1*x2 + x3*x4 + x5*x6 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PluckerVector {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
    pub x5: f64,
    pub x6: f64,
}

impl PluckerVector {
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64, x5: f64, x6: f64) -> Result<Self, Error> {
        let v = Self {
            x1,
            x2,
            x3,
            x4,
            x5,
            x6,
        };
        if v.to_array().iter().all(|c| c.is_finite()) {
            Ok(v)
        } else {
            Err(Error::NonFinite("quadric coordinate"))
        }
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.x1, self.x2, self.x3, self.x4, self.x5, self.x6]
    }

    /// The pairwise coordinate swap `X* = (x2, x1, x4, x3, x6, x5)`.
    ///
    /// An involution: `star(star(v)) == v` bit-exactly. At any point `X` on
    /// the quadric, `X*` is normal to the quadric.
    pub fn star(self) -> Self {
        Self {
            x1: self.x2,
            x2: self.x1,
            x3: self.x4,
            x4: self.x3,
            x5: self.x6,
            x6: self.x5,
        }
    }

    /// Standard Euclidean inner product on 6-space.
    pub fn dot(self, other: Self) -> f64 {
        self.x1 * other.x1
            + self.x2 * other.x2
            + self.x3 * other.x3
            + self.x4 * other.x4
            + self.x5 * other.x5
            + self.x6 * other.x6
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    /// The quadric form `x1*x2 + x3*x4 + x5*x6`; equals half of
    /// `dot(v, v.star())` and equals the Plücker defect of the corresponding
    /// sextuple.
    pub fn quadric_form(self) -> f64 {
        self.x1 * self.x2 + self.x3 * self.x4 + self.x5 * self.x6
    }
}

impl Add for PluckerVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            x1: self.x1 + rhs.x1,
            x2: self.x2 + rhs.x2,
            x3: self.x3 + rhs.x3,
            x4: self.x4 + rhs.x4,
            x5: self.x5 + rhs.x5,
            x6: self.x6 + rhs.x6,
        }
    }
}

impl Sub for PluckerVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            x1: self.x1 - rhs.x1,
            x2: self.x2 - rhs.x2,
            x3: self.x3 - rhs.x3,
            x4: self.x4 - rhs.x4,
            x5: self.x5 - rhs.x5,
            x6: self.x6 - rhs.x6,
        }
    }
}

impl Mul<f64> for PluckerVector {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self {
            x1: self.x1 * rhs,
            x2: self.x2 * rhs,
            x3: self.x3 * rhs,
            x4: self.x4 * rhs,
            x5: self.x5 * rhs,
            x6: self.x6 * rhs,
        }
    }
}

impl Div<f64> for PluckerVector {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        Self {
            x1: self.x1 / rhs,
            x2: self.x2 / rhs,
            x3: self.x3 / rhs,
            x4: self.x4 / rhs,
            x5: self.x5 / rhs,
            x6: self.x6 / rhs,
        }
    }
}

impl From<MinorSextuple> for PluckerVector {
    fn from(m: MinorSextuple) -> Self {
        Self {
            x1: m.m12,
            x2: m.m34,
            x3: m.m13,
            x4: -m.m24,
            x5: m.m14,
            x6: m.m23,
        }
    }
}

impl From<PluckerVector> for MinorSextuple {
    fn from(v: PluckerVector) -> Self {
        Self {
            m12: v.x1,
            m13: v.x3,
            m14: v.x5,
            m23: v.x6,
            m24: -v.x4,
            m34: v.x2,
        }
    }
}

impl MinorSextuple {
    /// The quadric-space coordinates of this sextuple.
    pub fn to_plucker(self) -> PluckerVector {
        self.into()
    }

    /// Inverse of [`MinorSextuple::to_plucker`]; the round trip is the
    /// identity bit-exactly.
    pub fn from_plucker(v: PluckerVector) -> Self {
        v.into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_swaps_pairs() {
        let v = PluckerVector::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0).unwrap();
        assert_eq!(v.star().to_array(), [2.0, 1.0, 4.0, 3.0, 6.0, 5.0]);
        assert_eq!(v.star().star(), v);

        let fixed = PluckerVector::new(7.0, 7.0, -2.0, -2.0, 0.5, 0.5).unwrap();
        assert_eq!(fixed.star(), fixed);

        let e1 = PluckerVector::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(e1.star().to_array(), [0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn dot_examples() {
        let e1 = PluckerVector::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0).unwrap();
        let e2 = PluckerVector::new(0.0, 1.0, 0.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(e1.dot(e2), 0.0);

        let y = PluckerVector::new(2.0, 1.0, 0.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(y.dot(y.star()), 4.0);
        assert_eq!(y.dot(y.star()), 2.0 * y.quadric_form());
    }

    #[test]
    fn sign_map_and_round_trip() {
        let m = MinorSextuple::new(2.0, 3.0, 5.0, 7.0, 11.0, -1.0).unwrap();
        let v = m.to_plucker();
        assert_eq!(v.to_array(), [2.0, -1.0, 3.0, -11.0, 5.0, 7.0]);
        assert_eq!(MinorSextuple::from_plucker(v), m);
        // The defect survives the change of variables.
        assert_eq!(v.quadric_form(), m.plucker_defect());
    }

    #[test]
    fn round_trip_preserves_zero_signs() {
        let m = MinorSextuple::new(0.0, -0.0, 0.0, -0.0, 0.0, 0.0).unwrap();
        let back = MinorSextuple::from_plucker(m.to_plucker());
        for (a, b) in m.to_array().iter().zip(back.to_array()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }
}
