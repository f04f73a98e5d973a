//! The canonical cube of base Gaussians and deviation application.
//!
//! The sculpting network does not predict Gaussians directly; it predicts
//! deviations from this fixed lattice. The lattice is a volumetric
//! `n × n × n` grid (interior included) so the network can reach geometry
//! inside the object, with one shared isotropic base scale.

use crate::error::SplatError;
use crate::linalg::Vec3;
use crate::scalar::Real;
use crate::types::{GaussianPrimitive, GaussianSplat};
use crate::Result;

/// Position of the cube relative to the world origin.
///
/// `ZeroCentered` places the lattice centroid at the origin (the default;
/// the ablation's winning variant). `OffCentered` shifts the cube one unit
/// along +z, modelling a camera at the origin with the cube one unit ahead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Centering {
    ZeroCentered,
    OffCentered,
}

impl Centering {
    pub fn offset<T: Real>(self) -> Vec3<T> {
        match self {
            Centering::ZeroCentered => [T::zero(); 3],
            Centering::OffCentered => [T::zero(), T::zero(), T::one()],
        }
    }
}

/// Fixed lattice of base Gaussians.
#[derive(Debug, Clone)]
pub struct CanonicalCube<T: Real> {
    base_mu: Vec<Vec3<T>>,
    base_scale: Vec3<T>,
    lattice_n: usize,
    extent: T,
    centering: Centering,
}

/// Build an `n³` lattice spanning `extent` per axis.
///
/// `base_cov` is the isotropic base covariance; the per-axis base scale is
/// its square root so that `M · diag(s²) · Mᵀ = base_cov · I`.
pub fn make_canonical_cube<T: Real>(
    lattice_n: usize,
    extent: T,
    base_cov: T,
    centering: Centering,
) -> Result<CanonicalCube<T>> {
    if lattice_n < 2 {
        return Err(SplatError::invalid(format!(
            "lattice_n must be at least 2, got {lattice_n}"
        )));
    }
    if !(base_cov > T::zero()) || !base_cov.is_finite() {
        return Err(SplatError::invalid("base covariance must be positive"));
    }
    if !(extent > T::zero()) || !extent.is_finite() {
        return Err(SplatError::invalid("extent must be positive"));
    }
    let offset = centering.offset::<T>();
    let half = extent * T::of(0.5);
    let step = extent / T::of_usize(lattice_n - 1);
    let coord = |i: usize| -half + step * T::of_usize(i);
    let mut base_mu = Vec::with_capacity(lattice_n * lattice_n * lattice_n);
    for i in 0..lattice_n {
        for j in 0..lattice_n {
            for k in 0..lattice_n {
                base_mu.push([
                    coord(i) + offset[0],
                    coord(j) + offset[1],
                    coord(k) + offset[2],
                ]);
            }
        }
    }
    let s = base_cov.sqrt();
    Ok(CanonicalCube {
        base_mu,
        base_scale: [s, s, s],
        lattice_n,
        extent,
        centering,
    })
}

impl<T: Real> CanonicalCube<T> {
    pub fn len(&self) -> usize {
        self.base_mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base_mu.is_empty()
    }

    pub fn base_mu(&self) -> &[Vec3<T>] {
        &self.base_mu
    }

    pub fn base_scale(&self) -> Vec3<T> {
        self.base_scale
    }

    pub fn lattice_n(&self) -> usize {
        self.lattice_n
    }

    pub fn extent(&self) -> T {
        self.extent
    }

    pub fn centering(&self) -> Centering {
        self.centering
    }

    pub fn center(&self) -> Vec3<T> {
        self.centering.offset()
    }

    pub fn cast<U: Real>(&self) -> CanonicalCube<U> {
        CanonicalCube {
            base_mu: self
                .base_mu
                .iter()
                .map(|m| [U::of(m[0].to_f64()), U::of(m[1].to_f64()), U::of(m[2].to_f64())])
                .collect(),
            base_scale: [
                U::of(self.base_scale[0].to_f64()),
                U::of(self.base_scale[1].to_f64()),
                U::of(self.base_scale[2].to_f64()),
            ],
            lattice_n: self.lattice_n,
            extent: U::of(self.extent.to_f64()),
            centering: self.centering,
        }
    }
}

/// Per-Gaussian deviations after the activation heads have run.
///
/// `delta_mu` and `delta_scale` are additive deviations from the base
/// lattice; `rot`, `color`, `opacity` are final attribute values already in
/// their valid ranges (unit quaternions, `[0,1]` color/opacity).
#[derive(Debug, Clone)]
pub struct ActivatedDeltas<T: Real> {
    pub delta_mu: Vec<Vec3<T>>,
    pub delta_scale: Vec<Vec3<T>>,
    pub rot: Vec<[T; 4]>,
    pub color: Vec<Vec3<T>>,
    pub opacity: Vec<T>,
}

/// Compose the predicted splat: `(μ̄ᵢ + Δμᵢ, s̄ᵢ + Δsᵢ, rᵢ, cᵢ, αᵢ)`.
pub fn apply_deltas<T: Real>(
    cube: &CanonicalCube<T>,
    deltas: &ActivatedDeltas<T>,
) -> Result<GaussianSplat<T>> {
    let n = cube.len();
    let lens = [
        deltas.delta_mu.len(),
        deltas.delta_scale.len(),
        deltas.rot.len(),
        deltas.color.len(),
        deltas.opacity.len(),
    ];
    if lens.iter().any(|&l| l != n) {
        return Err(SplatError::invalid(format!(
            "delta length mismatch: cube has {n} gaussians, deltas have {lens:?}"
        )));
    }
    let mut gaussians = Vec::with_capacity(n);
    for i in 0..n {
        let mu = crate::linalg::add3(cube.base_mu[i], deltas.delta_mu[i]);
        let scale = crate::linalg::add3(cube.base_scale, deltas.delta_scale[i]);
        gaussians.push(GaussianPrimitive {
            mu,
            scale,
            rot: deltas.rot[i],
            color: deltas.color[i],
            opacity: deltas.opacity[i],
        });
    }
    GaussianSplat::new(gaussians)
}
