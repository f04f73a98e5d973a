//! Pinhole camera with world→camera extrinsics.

use crate::error::SplatError;
use crate::linalg::{cross3, det3, identity3, mat_mul3, mat_t_vec3, mat_vec3, max_abs_diff3, normalize3, sub3, transpose3, Mat3, Vec3};
use crate::scalar::Real;
use crate::Result;

const ORTHO_TOL: f64 = 1e-6;

/// Camera extrinsics and pinhole intrinsics.
///
/// `rotation` maps world to camera coordinates: `t = R (x - position)`.
/// Camera frame: `x` along image `u` (columns), `y` along image `v` (rows,
/// increasing downward in storage), `z` along the viewing direction; points
/// in front of the camera have `t_z > 0`. Pixel `(col, row)` has center
/// `(col + 0.5, row + 0.5)` in the `(u, v)` plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Camera<T: Real> {
    position: Vec3<T>,
    rotation: Mat3<T>,
    pub fx: T,
    pub fy: T,
    pub cx: T,
    pub cy: T,
    pub width: usize,
    pub height: usize,
}

impl<T: Real> Camera<T> {
    /// Validate and build: `RᵀR = I` within `1e-6`, `det R = +1`,
    /// positive focal lengths and a non-empty image plane.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        position: Vec3<T>,
        rotation: Mat3<T>,
        fx: T,
        fy: T,
        cx: T,
        cy: T,
        width: usize,
        height: usize,
    ) -> Result<Self> {
        for v in position.iter().chain(rotation.iter().flatten()) {
            if !v.is_finite() {
                return Err(SplatError::invalid("non-finite camera parameter"));
            }
        }
        let rtr = mat_mul3(&transpose3(&rotation), &rotation);
        let dev = max_abs_diff3(&rtr, &identity3()).to_f64();
        if dev > ORTHO_TOL {
            return Err(SplatError::invalid(format!(
                "camera rotation is not orthonormal (max |RᵀR - I| = {dev:.3e})"
            )));
        }
        let det = det3(&rotation).to_f64();
        if (det - 1.0).abs() > ORTHO_TOL {
            return Err(SplatError::invalid(format!(
                "camera rotation must have det +1, got {det}"
            )));
        }
        if fx <= T::zero() || fy <= T::zero() {
            return Err(SplatError::invalid("focal lengths must be positive"));
        }
        if width == 0 || height == 0 {
            return Err(SplatError::invalid("image dimensions must be positive"));
        }
        Ok(Self {
            position,
            rotation,
            fx,
            fy,
            cx,
            cy,
            width,
            height,
        })
    }

    /// Camera at `eye` looking at `target`, roll fixed by `up`.
    ///
    /// Rows of `R` are the camera axes in world coordinates:
    /// `z = normalize(target - eye)`, `x = normalize(z × up)`,
    /// `y = z × x`, which guarantees `det R = +1`. Falls back to the world
    /// x axis when the view direction is parallel to `up`.
    #[allow(clippy::too_many_arguments)]
    pub fn look_at(
        eye: Vec3<T>,
        target: Vec3<T>,
        up: Vec3<T>,
        fx: T,
        fy: T,
        width: usize,
        height: usize,
    ) -> Result<Self> {
        let eps = T::of(1e-9);
        let z = normalize3(sub3(target, eye), eps)
            .ok_or_else(|| SplatError::invalid("look_at eye and target coincide"))?;
        let x = match normalize3(cross3(z, up), T::of(1e-8)) {
            Some(x) => x,
            None => normalize3(cross3(z, [T::one(), T::zero(), T::zero()]), T::of(1e-8))
                .ok_or_else(|| SplatError::invalid("degenerate look_at configuration"))?,
        };
        let y = cross3(z, x);
        let rotation = [x, y, z];
        let half = T::of(0.5);
        Camera::new(
            eye,
            rotation,
            fx,
            fy,
            T::of_usize(width) * half,
            T::of_usize(height) * half,
            width,
            height,
        )
    }

    pub fn position(&self) -> Vec3<T> {
        self.position
    }

    pub fn rotation(&self) -> &Mat3<T> {
        &self.rotation
    }

    /// World→camera transform of a point.
    #[inline]
    pub fn to_camera_frame(&self, p: Vec3<T>) -> Vec3<T> {
        mat_vec3(&self.rotation, sub3(p, self.position))
    }

    /// Camera→world transform of a camera-frame point.
    #[inline]
    pub fn to_world_frame(&self, t: Vec3<T>) -> Vec3<T> {
        crate::linalg::add3(mat_t_vec3(&self.rotation, t), self.position)
    }

    /// Viewing direction (the principal axis direction) in world coordinates.
    #[inline]
    pub fn principal_axis_dir(&self) -> Vec3<T> {
        self.rotation[2]
    }

    pub fn cast<U: Real>(&self) -> Camera<U> {
        let c3 = |v: Vec3<T>| [U::of(v[0].to_f64()), U::of(v[1].to_f64()), U::of(v[2].to_f64())];
        Camera {
            position: c3(self.position),
            rotation: [c3(self.rotation[0]), c3(self.rotation[1]), c3(self.rotation[2])],
            fx: U::of(self.fx.to_f64()),
            fy: U::of(self.fy.to_f64()),
            cx: U::of(self.cx.to_f64()),
            cy: U::of(self.cy.to_f64()),
            width: self.width,
            height: self.height,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::norm3;

    #[test]
    fn look_at_views_the_target() {
        let cam = Camera::look_at([0.3f64, -0.8, 1.1], [0.0, 0.0, 0.0], [0.0, 1.0, 0.0], 100.0, 100.0, 64, 64)
            .unwrap();
        // The ray from the camera along its principal axis passes through the
        // target: target - eye is parallel to the axis direction.
        let d = cam.principal_axis_dir();
        let to_target = sub3([0.0, 0.0, 0.0], cam.position());
        let cross = cross3(d, to_target);
        assert!(norm3(cross) < 1e-9);
        // Target sits in front of the camera.
        let t = cam.to_camera_frame([0.0, 0.0, 0.0]);
        assert!(t[2] > 0.0);
    }

    #[test]
    fn rejects_improper_rotation() {
        // Reflection: det = -1.
        let m = [[1.0f64, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]];
        assert!(Camera::new([0.0, 0.0, 0.0], m, 10.0, 10.0, 5.0, 5.0, 10, 10).is_err());
    }

    #[test]
    fn rejects_bad_focal() {
        let m = identity3::<f64>();
        assert!(Camera::new([0.0, 0.0, 0.0], m, 0.0, 10.0, 5.0, 5.0, 10, 10).is_err());
    }

    #[test]
    fn world_camera_round_trip() {
        let cam = Camera::look_at([1.0f64, 2.0, -0.5], [0.0, 0.1, 0.0], [0.0, 1.0, 0.0], 80.0, 80.0, 32, 32)
            .unwrap();
        let p = [0.2, -0.7, 0.4];
        let back = cam.to_world_frame(cam.to_camera_frame(p));
        for i in 0..3 {
            assert!((back[i] - p[i]).abs() < 1e-12);
        }
    }
}
