//! Quaternion math for Gaussian orientations.
//!
//! Quaternions are stored `(w, x, y, z)`. `q` and `-q` encode the same
//! rotation (double cover).

use crate::error::SplatError;
use crate::linalg::{m_diag_mt3, Mat3, Vec3};
use crate::scalar::Real;
use crate::types::ROT_NORM_TOL;
use crate::Result;

#[inline]
pub fn quat_norm<T: Real>(q: [T; 4]) -> T {
    (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt()
}

/// Rotation matrix of a quaternion, without any validation or
/// renormalization.
///
/// R = | 1-2(y²+z²)   2(xy-wz)    2(xz+wy)  |
///     | 2(xy+wz)     1-2(x²+z²)  2(yz-wx)  |
///     | 2(xz-wy)     2(yz+wx)    1-2(x²+y²)|
///
/// The polynomial is well defined for any input; callers that need the
/// orthonormality guarantee go through [`quat_to_rotmat`]. The renderer
/// backward differentiates through this exact polynomial.
#[inline]
pub fn rotmat_unchecked<T: Real>(q: [T; 4]) -> Mat3<T> {
    let two = T::of(2.0);
    let (w, x, y, z) = (q[0], q[1], q[2], q[3]);
    [
        [
            T::one() - two * (y * y + z * z),
            two * (x * y - w * z),
            two * (x * z + w * y),
        ],
        [
            two * (x * y + w * z),
            T::one() - two * (x * x + z * z),
            two * (y * z - w * x),
        ],
        [
            two * (x * z - w * y),
            two * (y * z + w * x),
            T::one() - two * (x * x + y * y),
        ],
    ]
}

/// Convert a unit quaternion to a 3×3 rotation matrix.
///
/// `r` and `-r` map to the same matrix. Rejects non-finite input and
/// quaternions whose norm deviates from 1 by more than `1e-6`.
pub fn quat_to_rotmat<T: Real>(q: [T; 4]) -> Result<Mat3<T>> {
    if q.iter().any(|v| !v.is_finite()) {
        return Err(SplatError::invalid("non-finite quaternion"));
    }
    let n = quat_norm(q).to_f64();
    if (n - 1.0).abs() > ROT_NORM_TOL {
        return Err(SplatError::invalid(format!(
            "quaternion must be unit length, ‖q‖ = {n}"
        )));
    }
    Ok(rotmat_unchecked(q))
}

/// Hamilton product `a ⊗ b`.
#[inline]
pub fn quat_mul<T: Real>(a: [T; 4], b: [T; 4]) -> [T; 4] {
    let (aw, ax, ay, az) = (a[0], a[1], a[2], a[3]);
    let (bw, bx, by, bz) = (b[0], b[1], b[2], b[3]);
    [
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    ]
}

/// Quaternion for a rotation of `angle` about the (unit) `axis`,
/// right-hand rule.
#[inline]
pub fn quat_from_axis_angle<T: Real>(axis: Vec3<T>, angle: T) -> [T; 4] {
    let half = angle * T::of(0.5);
    let s = half.sin();
    [half.cos(), axis[0] * s, axis[1] * s, axis[2] * s]
}

/// The 4×4 matrix `L(a)` with `a ⊗ b = L(a) · b` (quaternions as column
/// vectors `(w, x, y, z)`). Left-composition by a fixed quaternion is linear,
/// which is what lets the rotation-equivariance loss run on the autodiff
/// tape as a plain matrix product.
pub fn quat_left_matrix<T: Real>(a: [T; 4]) -> [[T; 4]; 4] {
    let (w, x, y, z) = (a[0], a[1], a[2], a[3]);
    [
        [w, -x, -y, -z],
        [x, w, -z, y],
        [y, z, w, -x],
        [z, -y, x, w],
    ]
}

#[inline]
pub fn quat_normalize<T: Real>(q: [T; 4]) -> [T; 4] {
    let n = quat_norm(q);
    [q[0] / n, q[1] / n, q[2] / n, q[3] / n]
}

/// Covariance `Σ = M · diag(scale²) · Mᵀ` with `M = quat_to_rotmat(rot)`.
///
/// Rejects non-positive scales; the result is symmetric positive definite.
pub fn covariance_from<T: Real>(scale: Vec3<T>, rot: [T; 4]) -> Result<Mat3<T>> {
    if scale.iter().any(|&s| !s.is_finite() || s <= T::zero()) {
        return Err(SplatError::invalid(format!(
            "scale components must be strictly positive and finite, got {scale:?}"
        )));
    }
    let m = quat_to_rotmat(rot)?;
    Ok(m_diag_mt3(&m, [scale[0] * scale[0], scale[1] * scale[1], scale[2] * scale[2]]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_quaternion_gives_identity_matrix() {
        let m = quat_to_rotmat([1.0f64, 0.0, 0.0, 0.0]).unwrap();
        let eye = crate::linalg::identity3::<f64>();
        assert!(crate::linalg::max_abs_diff3(&m, &eye) < 1e-15);
    }

    #[test]
    fn double_cover_maps_to_same_matrix() {
        let q = quat_normalize([0.3f64, -0.5, 0.7, 0.2]);
        let neg = [-q[0], -q[1], -q[2], -q[3]];
        let a = quat_to_rotmat(q).unwrap();
        let b = quat_to_rotmat(neg).unwrap();
        assert!(crate::linalg::max_abs_diff3(&a, &b) < 1e-12);
    }

    #[test]
    fn rejects_non_finite_and_non_unit() {
        assert!(quat_to_rotmat([f64::NAN, 0.0, 0.0, 0.0]).is_err());
        assert!(quat_to_rotmat([0.9f64, 0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn covariance_isotropic_case() {
        let a = 0.37f64;
        let q = quat_normalize([0.2, 0.9, -0.1, 0.4]);
        let cov = covariance_from([a, a, a], q).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { a * a } else { 0.0 };
                assert!((cov[i][j] - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn covariance_identity_rotation_is_diag_of_squares() {
        let cov = covariance_from([1.0f64, 2.0, 3.0], [1.0, 0.0, 0.0, 0.0]).unwrap();
        let want = [[1.0, 0.0, 0.0], [0.0, 4.0, 0.0], [0.0, 0.0, 9.0]];
        assert!(crate::linalg::max_abs_diff3(&cov, &want) < 1e-14);
    }

    #[test]
    fn covariance_rejects_bad_scale() {
        assert!(covariance_from([0.0f64, 1.0, 1.0], [1.0, 0.0, 0.0, 0.0]).is_err());
        assert!(covariance_from([-1.0f64, 1.0, 1.0], [1.0, 0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn left_matrix_matches_hamilton_product() {
        let a = quat_normalize([0.8f64, 0.1, -0.3, 0.5]);
        let b = quat_normalize([-0.2f64, 0.6, 0.4, 0.1]);
        let l = quat_left_matrix(a);
        let direct = quat_mul(a, b);
        for i in 0..4 {
            let via: f64 = (0..4).map(|j| l[i][j] * b[j]).sum();
            assert!((via - direct[i]).abs() < 1e-15);
        }
    }
}
