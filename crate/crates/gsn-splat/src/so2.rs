//! In-plane rotation angle about a camera principal axis.

use crate::scalar::Real;

/// Rotation angle in `[0, 2π)` about the camera principal axis.
///
/// Positive angles rotate the camera-frame `x` axis toward `y`; the same
/// convention drives image rotation so that rendering and splat rotation
/// commute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct So2Rotation<T: Real> {
    angle: T,
}

impl<T: Real> So2Rotation<T> {
    /// Wrap an arbitrary angle into `[0, 2π)`.
    pub fn new(angle: T) -> Self {
        let tau = T::of(std::f64::consts::TAU);
        let mut a = angle % tau;
        if a < T::zero() {
            a = a + tau;
        }
        // `%` can round to exactly tau for inputs just below a multiple.
        if a >= tau {
            a = a - tau;
        }
        Self { angle: a }
    }

    pub fn from_degrees(deg: T) -> Self {
        Self::new(deg.to_radians())
    }

    pub fn identity() -> Self {
        Self { angle: T::zero() }
    }

    pub fn angle(&self) -> T {
        self.angle
    }

    pub fn degrees(&self) -> T {
        self.angle.to_degrees()
    }

    /// Group composition: θ₁ then θ₂ is θ₁ + θ₂ (mod 2π).
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.angle + other.angle)
    }

    pub fn inverse(&self) -> Self {
        Self::new(-self.angle)
    }

    /// True when the angle is an exact multiple of 90°, within `tol` radians.
    pub fn quarter_turns(&self, tol: T) -> Option<u8> {
        let quarter = T::of(std::f64::consts::FRAC_PI_2);
        for k in 0u8..4 {
            let target = quarter * T::of_usize(k as usize);
            if (self.angle - target).abs() <= tol {
                return Some(k);
            }
        }
        // 2π wraps back to 0.
        if (self.angle - T::of(std::f64::consts::TAU)).abs() <= tol {
            return Some(0);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    #[test]
    fn composition_adds_angles_mod_tau() {
        let a = So2Rotation::new(1.5 * PI);
        let b = So2Rotation::new(0.75 * PI);
        let c = a.compose(&b);
        assert!((c.angle() - (2.25 * PI - TAU)).abs() < 1e-12);
    }

    #[test]
    fn negative_angles_wrap() {
        let a = So2Rotation::new(-FRAC_PI_2);
        assert!((a.angle() - 1.5 * PI).abs() < 1e-12);
    }

    #[test]
    fn quarter_turn_detection() {
        assert_eq!(So2Rotation::new(FRAC_PI_2).quarter_turns(1e-9), Some(1));
        assert_eq!(So2Rotation::new(PI).quarter_turns(1e-9), Some(2));
        assert_eq!(So2Rotation::new(0.0).quarter_turns(1e-9), Some(0));
        assert_eq!(So2Rotation::new(0.4).quarter_turns(1e-9), None);
    }
}
