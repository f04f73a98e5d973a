//! Gaussian primitive and splat value types.

use crate::error::SplatError;
use crate::linalg::Vec3;
use crate::quat::quat_norm;
use crate::scalar::Real;
use crate::Result;

/// Tolerance on `‖rot‖ = 1` accepted by validation.
pub const ROT_NORM_TOL: f64 = 1e-6;

/// One anisotropic 3D Gaussian: position, per-axis standard deviation,
/// orientation quaternion `(w, x, y, z)`, RGB color and opacity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianPrimitive<T: Real> {
    pub mu: Vec3<T>,
    pub scale: Vec3<T>,
    pub rot: [T; 4],
    pub color: Vec3<T>,
    pub opacity: T,
}

impl<T: Real> GaussianPrimitive<T> {
    /// Check the type invariants: positive scale, unit quaternion, color and
    /// opacity in `[0, 1]`, all components finite.
    pub fn validate(&self) -> Result<()> {
        for v in self
            .mu
            .iter()
            .chain(self.scale.iter())
            .chain(self.rot.iter())
            .chain(self.color.iter())
            .chain(std::iter::once(&self.opacity))
        {
            if !v.is_finite() {
                return Err(SplatError::invalid("non-finite gaussian component"));
            }
        }
        if self.scale.iter().any(|&s| s <= T::zero()) {
            return Err(SplatError::invalid(format!(
                "scale components must be strictly positive, got {:?}",
                self.scale
            )));
        }
        let n = quat_norm(self.rot).to_f64();
        if (n - 1.0).abs() > ROT_NORM_TOL {
            return Err(SplatError::invalid(format!(
                "rotation quaternion must be unit length, ‖r‖ = {n}"
            )));
        }
        let unit = |v: T| v >= T::zero() && v <= T::one();
        if !self.color.iter().all(|&c| unit(c)) || !unit(self.opacity) {
            return Err(SplatError::invalid(
                "color and opacity must lie in [0, 1]".to_string(),
            ));
        }
        Ok(())
    }
}

/// An ordered, non-empty collection of Gaussian primitives.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianSplat<T: Real> {
    gaussians: Vec<GaussianPrimitive<T>>,
}

impl<T: Real> GaussianSplat<T> {
    /// Build a splat, enforcing the per-primitive invariants and `N > 0`.
    pub fn new(gaussians: Vec<GaussianPrimitive<T>>) -> Result<Self> {
        if gaussians.is_empty() {
            return Err(SplatError::invalid("splat must contain at least one gaussian"));
        }
        for (i, g) in gaussians.iter().enumerate() {
            g.validate()
                .map_err(|e| SplatError::invalid(format!("gaussian {i}: {e}")))?;
        }
        Ok(Self { gaussians })
    }

    /// Build without validation. Used on hot paths and by gradient checks,
    /// where finite-difference perturbations may leave quaternions slightly
    /// off unit length.
    pub fn from_gaussians_unchecked(gaussians: Vec<GaussianPrimitive<T>>) -> Self {
        debug_assert!(!gaussians.is_empty());
        Self { gaussians }
    }

    pub fn len(&self) -> usize {
        self.gaussians.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaussians.is_empty()
    }

    pub fn gaussians(&self) -> &[GaussianPrimitive<T>] {
        &self.gaussians
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GaussianPrimitive<T>> {
        self.gaussians.iter()
    }

    pub fn into_gaussians(self) -> Vec<GaussianPrimitive<T>> {
        self.gaussians
    }

    /// Positions of all Gaussians, in order.
    pub fn positions(&self) -> Vec<Vec3<T>> {
        self.gaussians.iter().map(|g| g.mu).collect()
    }

    /// Convert the scalar type (e.g. widen `f32` to `f64` for checks).
    pub fn cast<U: Real>(&self) -> GaussianSplat<U> {
        let conv3 = |v: Vec3<T>| [U::of(v[0].to_f64()), U::of(v[1].to_f64()), U::of(v[2].to_f64())];
        GaussianSplat {
            gaussians: self
                .gaussians
                .iter()
                .map(|g| GaussianPrimitive {
                    mu: conv3(g.mu),
                    scale: conv3(g.scale),
                    rot: [
                        U::of(g.rot[0].to_f64()),
                        U::of(g.rot[1].to_f64()),
                        U::of(g.rot[2].to_f64()),
                        U::of(g.rot[3].to_f64()),
                    ],
                    color: conv3(g.color),
                    opacity: U::of(g.opacity.to_f64()),
                })
                .collect(),
        }
    }
}

impl<'a, T: Real> IntoIterator for &'a GaussianSplat<T> {
    type Item = &'a GaussianPrimitive<T>;
    type IntoIter = std::slice::Iter<'a, GaussianPrimitive<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.gaussians.iter()
    }
}
