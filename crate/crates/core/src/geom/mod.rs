//! Pointwise shape-operator algebra for the associate family and the
//! space curves traced by geodesics under associate immersions.
//!
//! All matrices are expressed in an orthonormal tangent frame. The complex
//! structure of the frame is the counterclockwise quarter turn
//! `J = [[0, -1], [1, 0]]`; choosing the opposite orientation would relabel
//! the family by `theta -> -theta`.

mod frenet;

pub use frenet::{frenet_integrate, FrenetState};

use nalgebra::{Matrix2, Vector2};

use crate::error::{Error, Result};

/// Tolerance on `|dir| - 1` accepted by [`geodesic_curvature_torsion`].
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// Below this value of `k^2 + tau^2` a helix is treated as a straight segment.
pub const STRAIGHT_THRESHOLD: f64 = 1e-14;

/// The complex structure `J` on the tangent plane.
pub fn complex_structure() -> Matrix2<f64> {
    Matrix2::new(0.0, -1.0, 1.0, 0.0)
}

/// A symmetric 2x2 shape operator together with its mean curvature.
///
/// The mean curvature is the average of the principal curvatures, so the
/// trace of the operator is `2 * h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeOperatorSample {
    a11: f64,
    a12: f64,
    a22: f64,
    h: f64,
}

impl ShapeOperatorSample {
    pub fn new(a11: f64, a12: f64, a22: f64) -> Self {
        Self {
            a11,
            a12,
            a22,
            h: 0.5 * (a11 + a22),
        }
    }

    /// Principal-frame operator `diag(k1, k2)`.
    pub fn diagonal(k1: f64, k2: f64) -> Self {
        Self::new(k1, 0.0, k2)
    }

    /// Shape operator along the neck circle of a Delaunay surface with
    /// `H = 1`: `diag(r, 2 - r)`.
    pub fn neck(r: f64) -> Self {
        Self::diagonal(r, 2.0 - r)
    }

    pub fn matrix(&self) -> Matrix2<f64> {
        Matrix2::new(self.a11, self.a12, self.a12, self.a22)
    }

    pub fn mean_curvature(&self) -> f64 {
        self.h
    }

    pub fn gaussian_curvature(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a12
    }

    /// Traceless part `A - H I`.
    pub fn traceless(&self) -> Matrix2<f64> {
        self.matrix() - Matrix2::identity() * self.h
    }
}

/// Shape operator of the `theta`-associate immersion:
/// `A_theta = cos(theta) (A - HI) + sin(theta) J (A - HI) + HI`.
///
/// Evaluated as `A + (cos(theta) - 1)(A - HI) + sin(theta) J (A - HI)` so that
/// `theta = 0` returns `A` bit for bit.
pub fn associate_shape_operator(a: &ShapeOperatorSample, theta: f64) -> Matrix2<f64> {
    let traceless = a.traceless();
    let (sin, cos) = theta.sin_cos();
    a.matrix() + traceless * (cos - 1.0) + complex_structure() * traceless * sin
}

/// Curvature and torsion of the image, under the `theta`-associate
/// immersion, of a unit-speed geodesic with tangent `dir`:
/// `k = <A_theta v, v>`, `tau = -<A_theta v, J v>`.
///
/// The curvature is signed.
pub fn geodesic_curvature_torsion(
    a: &ShapeOperatorSample,
    theta: f64,
    dir: Vector2<f64>,
) -> Result<(f64, f64)> {
    let norm = dir.norm();
    if !((norm - 1.0).abs() <= UNIT_TOLERANCE) {
        return Err(Error::NonUnitDirection(norm));
    }
    let a_theta = associate_shape_operator(a, theta);
    let image = a_theta * dir;
    let k = image.dot(&dir);
    let tau = -image.dot(&(complex_structure() * dir));
    Ok((k, tau))
}

/// A space curve of constant curvature and torsion, of finite length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelixArc {
    pub k: f64,
    pub tau: f64,
    pub len: f64,
}

impl HelixArc {
    pub fn new(k: f64, tau: f64, len: f64) -> Result<Self> {
        if !(len > 0.0 && len.is_finite()) {
            return Err(Error::NonPositiveLength(len));
        }
        Ok(Self { k, tau, len })
    }

    pub fn is_straight(&self) -> bool {
        self.k * self.k + self.tau * self.tau < STRAIGHT_THRESHOLD
    }

    /// Radius of the cylinder the helix winds on, `|k| / (k^2 + tau^2)`.
    /// For a planar arc this is the circle radius `1/|k|`; infinite for a line.
    pub fn radius(&self) -> f64 {
        if self.is_straight() {
            f64::INFINITY
        } else {
            self.k.abs() / (self.k * self.k + self.tau * self.tau)
        }
    }

    /// Total turning angle about the helix axis, `omega * len`.
    pub fn turning(&self) -> f64 {
        (self.k * self.k + self.tau * self.tau).sqrt() * self.len
    }

    pub fn endpoint_gap(&self) -> f64 {
        helix_endpoint_gap(self)
    }
}

/// Distance between the two endpoints of a constant-curvature,
/// constant-torsion arc.
///
/// With `omega = sqrt(k^2 + tau^2)`, the arc winds on a helix of radius
/// `a = k / omega^2` and rise `b = tau / omega^2` per radian, through a total
/// angle `omega * len`, so the chord is
/// `sqrt((2 a sin(omega len / 2))^2 + (b omega len)^2)`.
pub fn helix_endpoint_gap(arc: &HelixArc) -> f64 {
    if arc.is_straight() {
        return arc.len;
    }
    let omega2 = arc.k * arc.k + arc.tau * arc.tau;
    let omega = omega2.sqrt();
    let a = arc.k.abs() / omega2;
    let b = arc.tau / omega2;
    let horizontal = 2.0 * a * (0.5 * omega * arc.len).sin();
    let vertical = b * omega * arc.len;
    horizontal.hypot(vertical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn a31() -> ShapeOperatorSample {
        ShapeOperatorSample::diagonal(3.0, -1.0)
    }

    #[test]
    fn identity_at_zero_angle() {
        let a = ShapeOperatorSample::new(0.3, -1.7, 2.9);
        assert_eq!(associate_shape_operator(&a, 0.0), a.matrix());
        assert_eq!(associate_shape_operator(&a31(), 0.0), Matrix2::new(3.0, 0.0, 0.0, -1.0));
    }

    #[test]
    fn half_turn_reflects_about_mean() {
        let a_pi = associate_shape_operator(&a31(), PI);
        let expected = Matrix2::new(-1.0, 0.0, 0.0, 3.0);
        assert_abs_diff_eq!(a_pi, expected, epsilon = 1e-15);
    }

    #[test]
    fn quarter_turn_mixes_in_j() {
        // A - HI = diag(2, -2), J (A - HI) = [[0, 2], [2, 0]]
        let a = associate_shape_operator(&a31(), PI / 2.0);
        assert_abs_diff_eq!(a, Matrix2::new(1.0, 2.0, 2.0, 1.0), epsilon = 1e-15);
    }

    #[test]
    fn neck_curvature_torsion_closed_form() {
        let r = 3.0;
        let a = ShapeOperatorSample::neck(r);
        for i in 0..64 {
            let theta = i as f64 * 0.1;
            let (k, tau) = geodesic_curvature_torsion(&a, theta, Vector2::x()).unwrap();
            assert_abs_diff_eq!(k, theta.cos() * 2.0 + 1.0, epsilon = 1e-14);
            assert_abs_diff_eq!(tau, -2.0 * theta.sin(), epsilon = 1e-14);
        }
    }

    #[test]
    fn zero_angle_reads_matrix_entries() {
        let a = ShapeOperatorSample::new(0.4, 1.25, -3.0);
        let (k, tau) = geodesic_curvature_torsion(&a, 0.0, Vector2::x()).unwrap();
        assert_eq!(k, 0.4);
        assert_eq!(tau, -1.25);
    }

    #[test]
    fn quarter_turn_geodesic() {
        let (k, tau) = geodesic_curvature_torsion(&a31(), PI / 2.0, Vector2::x()).unwrap();
        assert_abs_diff_eq!(k, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(tau, -2.0, epsilon = 1e-15);
    }

    #[test]
    fn rejects_non_unit_direction() {
        let err = geodesic_curvature_torsion(&a31(), 0.0, Vector2::new(1.0, 1e-3));
        assert!(matches!(err, Err(Error::NonUnitDirection(_))));
    }

    #[test]
    fn gap_examples() {
        let circle = HelixArc::new(1.0, 0.0, 2.0 * PI).unwrap();
        assert_abs_diff_eq!(circle.endpoint_gap(), 0.0, epsilon = 1e-15);
        let line = HelixArc::new(0.0, 0.0, PI).unwrap();
        assert_eq!(line.endpoint_gap(), PI);
        let third = HelixArc::new(1.0, 0.0, 2.0 * PI / 3.0).unwrap();
        assert_abs_diff_eq!(third.endpoint_gap(), 3f64.sqrt(), epsilon = 1e-15);
        // sign of the curvature does not matter
        let flipped = HelixArc::new(-1.0, 0.0, 2.0 * PI / 3.0).unwrap();
        assert_eq!(flipped.endpoint_gap(), third.endpoint_gap());
    }

    #[test]
    fn rejects_nonpositive_length() {
        assert!(HelixArc::new(1.0, 0.0, 0.0).is_err());
        assert!(HelixArc::new(1.0, 0.0, -2.0).is_err());
        assert!(HelixArc::new(1.0, 0.0, f64::NAN).is_err());
    }

    #[test]
    fn radius_is_inverse_curvature_for_planar_arcs() {
        // half turn of the r = 3 neck: curvature 2 - r = -1
        let arc = HelixArc::new(-1.0, 0.0, 2.0 * PI / 3.0).unwrap();
        assert_eq!(arc.radius(), 1.0);
        let arc = HelixArc::new(-4.0, 0.0, 1.0).unwrap();
        assert_eq!(arc.radius(), 0.25);
        assert!(HelixArc::new(0.0, 0.0, 1.0).unwrap().radius().is_infinite());
    }
}
