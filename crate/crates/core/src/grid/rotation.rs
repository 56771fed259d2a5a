//! Rotations, reflections, and tangent frames on the sphere.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};

/// Check orthogonality and det = +1 to 1e-12.
pub fn validate_rotation(r: &Matrix3<f64>) -> Result<()> {
    let defect = (r.transpose() * r - Matrix3::identity()).abs().max();
    let det = r.determinant();
    if defect > 1e-12 || (det - 1.0).abs() > 1e-12 {
        return Err(Error::NotARotation { defect, det });
    }
    Ok(())
}

/// Rotation taking the unit vector `axis` to the north pole e3.
///
/// Deterministic: rotates about the normalized `axis x e3` by the angle
/// between them; for axis within 1e-14 of +-e3 returns the identity or the
/// half-turn about e1.
pub fn rotation_to_pole(axis: [f64; 3]) -> Matrix3<f64> {
    let y = Vector3::new(axis[0], axis[1], axis[2]);
    let e3 = Vector3::new(0.0, 0.0, 1.0);
    let c = y.dot(&e3);
    if c > 1.0 - 1e-14 {
        return Matrix3::identity();
    }
    if c < -1.0 + 1e-14 {
        // half turn about e1
        return Matrix3::new(1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, -1.0);
    }
    let axis_rot = y.cross(&e3).normalize();
    rotation_about(axis_rot, c.clamp(-1.0, 1.0).acos())
}

/// Rodrigues rotation about a unit axis by `angle`.
pub fn rotation_about(axis: Vector3<f64>, angle: f64) -> Matrix3<f64> {
    let (s, c) = angle.sin_cos();
    let k = Matrix3::new(
        0.0, -axis.z, axis.y, axis.z, 0.0, -axis.x, -axis.y, axis.x, 0.0,
    );
    Matrix3::identity() + k * s + k * k * (1.0 - c)
}

/// Reflection of `x` through the plane with unit normal `y`.
#[inline]
pub fn reflect_point(x: [f64; 3], y: [f64; 3]) -> [f64; 3] {
    let d = 2.0 * (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]);
    [x[0] - d * y[0], x[1] - d * y[1], x[2] - d * y[2]]
}

/// Deterministic orthonormal tangent frame (a, b) at the unit vector `y`
/// with a x b = y, so that t -> cos(t) a + sin(t) b traverses the great
/// circle C_y counterclockwise when viewed from y.
pub fn circle_frame(y: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let yv = Vector3::new(y[0], y[1], y[2]);
    // helper axis least aligned with y
    let abs = [y[0].abs(), y[1].abs(), y[2].abs()];
    let h = if abs[0] <= abs[1] && abs[0] <= abs[2] {
        Vector3::new(1.0, 0.0, 0.0)
    } else if abs[1] <= abs[2] {
        Vector3::new(0.0, 1.0, 0.0)
    } else {
        Vector3::new(0.0, 0.0, 1.0)
    };
    let a = (h - yv * h.dot(&yv)).normalize();
    let b = yv.cross(&a);
    ([a.x, a.y, a.z], [b.x, b.y, b.z])
}

#[inline]
pub fn apply(r: &Matrix3<f64>, p: [f64; 3]) -> [f64; 3] {
    let v = r * Vector3::new(p[0], p[1], p[2]);
    [v.x, v.y, v.z]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_to_pole_sends_axis_to_e3() {
        for axis in [
            [0.6, -0.48, 0.64],
            [0.0, 1.0, 0.0],
            [0.0, 0.0, 1.0],
            [0.0, 0.0, -1.0],
            [-0.999999, 0.001, 0.0],
        ] {
            let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
            let a = [axis[0] / n, axis[1] / n, axis[2] / n];
            let r = rotation_to_pole(a);
            validate_rotation(&r).unwrap();
            let im = apply(&r, a);
            assert!((im[0]).abs() < 1e-12 && (im[1]).abs() < 1e-12 && (im[2] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn circle_frame_is_right_handed() {
        for y in [[0.0, 0.0, 1.0], [0.36, 0.48, 0.8], [1.0, 0.0, 0.0]] {
            let (a, b) = circle_frame(y);
            let cross = [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ];
            for i in 0..3 {
                assert!((cross[i] - y[i]).abs() < 1e-14);
            }
            let adoty: f64 = a.iter().zip(&y).map(|(p, q)| p * q).sum();
            assert!(adoty.abs() < 1e-14);
        }
    }

    #[test]
    fn reflection_is_involutive() {
        let y = [0.36, 0.48, 0.8];
        let x = [0.1, -0.7, 0.3];
        let twice = reflect_point(reflect_point(x, y), y);
        for i in 0..3 {
            assert!((twice[i] - x[i]).abs() < 1e-15);
        }
    }
}
