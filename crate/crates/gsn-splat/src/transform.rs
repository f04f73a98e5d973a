//! Rigid rotation of a splat about a camera's principal axis.
//!
//! This is the `T` operator of the rotation-equivariance loss: positions
//! rotate about the line through the camera center along its viewing
//! direction, orientations are left-composed with the axis rotation, and
//! scale/color/opacity are untouched.

use crate::camera::Camera;
use crate::linalg::{add3, mat_vec3, sub3, Mat3, Vec3};
use crate::quat::{quat_from_axis_angle, quat_mul, quat_normalize, rotmat_unchecked};
use crate::scalar::Real;
use crate::so2::So2Rotation;
use crate::types::{GaussianPrimitive, GaussianSplat};

/// The world-frame rotation about the camera principal axis.
///
/// Returns the rotation matrix `A`, the equivalent quaternion, and a point
/// on the axis (the camera center), so callers can apply
/// `x ↦ A (x - p) + p`. Positive angles rotate the camera-frame `x` axis
/// toward `y`.
pub fn principal_axis_rotation<T: Real>(
    cam: &Camera<T>,
    theta: So2Rotation<T>,
) -> (Mat3<T>, [T; 4], Vec3<T>) {
    let axis = cam.principal_axis_dir();
    let q = quat_from_axis_angle(axis, theta.angle());
    (rotmat_unchecked(q), q, cam.position())
}

/// Rotate every Gaussian of `splat` about the camera principal axis by
/// `theta`.
pub fn rotate_splat_about_principal_axis<T: Real>(
    splat: &GaussianSplat<T>,
    cam: &Camera<T>,
    theta: So2Rotation<T>,
) -> GaussianSplat<T> {
    let (a, q, p) = principal_axis_rotation(cam, theta);
    let gaussians = splat
        .iter()
        .map(|g| GaussianPrimitive {
            mu: add3(mat_vec3(&a, sub3(g.mu, p)), p),
            scale: g.scale,
            rot: quat_normalize(quat_mul(q, g.rot)),
            color: g.color,
            opacity: g.opacity,
        })
        .collect();
    GaussianSplat::from_gaussians_unchecked(gaussians)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::quat_norm;
    use std::f64::consts::FRAC_PI_2;

    fn test_camera(eye: Vec3<f64>) -> Camera<f64> {
        Camera::look_at(eye, [0.0, 0.0, 0.0], [0.0, 1.0, 0.0], 100.0, 100.0, 64, 64).unwrap()
    }

    fn single(mu: Vec3<f64>) -> GaussianSplat<f64> {
        GaussianSplat::new(vec![GaussianPrimitive {
            mu,
            scale: [0.1, 0.1, 0.1],
            rot: [1.0, 0.0, 0.0, 0.0],
            color: [0.5, 0.5, 0.5],
            opacity: 0.7,
        }])
        .unwrap()
    }

    #[test]
    fn zero_angle_is_identity() {
        let cam = test_camera([0.4, -0.3, -1.2]);
        let s = single([0.2, 0.1, -0.05]);
        let r = rotate_splat_about_principal_axis(&s, &cam, So2Rotation::identity());
        for (a, b) in r.iter().zip(s.iter()) {
            for i in 0..3 {
                assert!((a.mu[i] - b.mu[i]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn rotation_composes_with_its_inverse() {
        let cam = test_camera([0.7, 0.2, -1.0]);
        let s = single([0.15, -0.2, 0.1]);
        let theta = So2Rotation::new(0.83);
        let fwd = rotate_splat_about_principal_axis(&s, &cam, theta);
        let back = rotate_splat_about_principal_axis(&fwd, &cam, theta.inverse());
        for (a, b) in back.iter().zip(s.iter()) {
            for i in 0..3 {
                assert!((a.mu[i] - b.mu[i]).abs() < 1e-9);
            }
            for i in 0..4 {
                assert!((a.rot[i] - b.rot[i]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn quarter_turn_about_z_moves_x_to_y_axis() {
        // Camera on the z axis looking at the origin: the principal axis is
        // the z axis, so a 90° turn maps (0.2, 0, 0) onto the y axis at the
        // same radius.
        let cam = test_camera([0.0, 0.0, -1.3]);
        let s = single([0.2, 0.0, 0.0]);
        let r = rotate_splat_about_principal_axis(&s, &cam, So2Rotation::new(FRAC_PI_2));
        let mu = r.gaussians()[0].mu;
        assert!(mu[0].abs() < 1e-12, "x should vanish, got {mu:?}");
        assert!((mu[1].abs() - 0.2).abs() < 1e-12, "radius preserved, got {mu:?}");
        assert!(mu[2].abs() < 1e-12);
    }

    #[test]
    fn rotation_keeps_quaternions_unit() {
        let cam = test_camera([0.3, 0.8, -0.9]);
        let s = single([0.1, 0.05, 0.2]);
        let r = rotate_splat_about_principal_axis(&s, &cam, So2Rotation::new(2.1));
        assert!((quat_norm(r.gaussians()[0].rot) - 1.0).abs() < 1e-12);
    }
}
