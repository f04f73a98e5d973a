//! Core domain types for 3D Gaussian splats.
//!
//! A splat is an ordered collection of anisotropic 3D Gaussians, each carrying
//! position, per-axis scale, orientation (unit quaternion, `(w, x, y, z)`),
//! RGB color and opacity. This crate owns the value-level representation:
//! construction and validation, quaternion/covariance math, the canonical
//! cube the sculpting network deviates from, rigid transforms about a camera
//! principal axis, and the binary splat file format.
//!
//! Everything here is generic over [`Real`] so the same math runs in `f32`
//! for training and `f64` for finite-difference gradient checks.

pub mod camera;
pub mod cube;
pub mod error;
pub mod io;
pub mod linalg;
pub mod quat;
pub mod scalar;
pub mod so2;
pub mod transform;
pub mod types;

pub use camera::Camera;
pub use cube::{apply_deltas, make_canonical_cube, ActivatedDeltas, CanonicalCube, Centering};
pub use error::SplatError;
pub use io::{splat_read, splat_write};
pub use linalg::{Mat3, Vec3};
pub use quat::{covariance_from, quat_to_rotmat};
pub use scalar::Real;
pub use so2::So2Rotation;
pub use transform::rotate_splat_about_principal_axis;
pub use types::{GaussianPrimitive, GaussianSplat};

/// Convenience alias used throughout the workspace.
pub type Result<T, E = SplatError> = std::result::Result<T, E>;
