use nalgebra::Vector3;

use crate::error::{Error, Result};

/// Position and Frenet frame of a space curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetState {
    pub position: Vector3<f64>,
    pub tangent: Vector3<f64>,
    pub normal: Vector3<f64>,
    pub binormal: Vector3<f64>,
}

impl FrenetState {
    /// Origin with the standard frame.
    pub fn identity() -> Self {
        Self {
            position: Vector3::zeros(),
            tangent: Vector3::x(),
            normal: Vector3::y(),
            binormal: Vector3::z(),
        }
    }

    /// Largest deviation of the frame's Gram matrix from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let f = [self.tangent, self.normal, self.binormal];
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((f[i].dot(&f[j]) - target).abs());
            }
        }
        worst
    }

    fn derivative(&self, k: f64, tau: f64) -> Self {
        Self {
            position: self.tangent,
            tangent: self.normal * k,
            normal: self.tangent * -k + self.binormal * tau,
            binormal: self.normal * -tau,
        }
    }

    fn axpy(&self, h: f64, d: &Self) -> Self {
        Self {
            position: self.position + d.position * h,
            tangent: self.tangent + d.tangent * h,
            normal: self.normal + d.normal * h,
            binormal: self.binormal + d.binormal * h,
        }
    }

    fn reorthonormalize(&mut self) {
        self.tangent.normalize_mut();
        self.normal -= self.tangent * self.tangent.dot(&self.normal);
        self.normal.normalize_mut();
        self.binormal = self.tangent.cross(&self.normal);
    }
}

/// Integrates the Frenet-Serret equations with constant curvature and
/// torsion from the identity frame at the origin over arclength `len`.
///
/// Classical RK4 with the step shrunk to divide `len` evenly; the frame is
/// Gram-Schmidt re-orthonormalized after every step.
pub fn frenet_integrate(k: f64, tau: f64, len: f64, step: f64) -> Result<FrenetState> {
    if !(len > 0.0 && len.is_finite()) {
        return Err(Error::NonPositiveLength(len));
    }
    if !(step > 0.0 && step <= len) {
        return Err(Error::BadStep { step, span: len });
    }
    let n = (len / step).ceil() as usize;
    let h = len / n as f64;
    let mut state = FrenetState::identity();
    for _ in 0..n {
        let k1 = state.derivative(k, tau);
        let k2 = state.axpy(0.5 * h, &k1).derivative(k, tau);
        let k3 = state.axpy(0.5 * h, &k2).derivative(k, tau);
        let k4 = state.axpy(h, &k3).derivative(k, tau);
        state = state
            .axpy(h / 6.0, &k1)
            .axpy(h / 3.0, &k2)
            .axpy(h / 3.0, &k3)
            .axpy(h / 6.0, &k4);
        state.reorthonormalize();
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn straight_line() {
        let end = frenet_integrate(0.0, 0.0, 5.0, 0.1).unwrap();
        assert!((end.position - Vector3::new(5.0, 0.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn full_circle_closes() {
        let end = frenet_integrate(1.0, 0.0, 2.0 * PI, 1e-3).unwrap();
        assert!(end.position.norm() < 1e-8, "{}", end.position.norm());
        assert!((end.tangent - Vector3::x()).norm() < 1e-8);
    }

    #[test]
    fn third_of_circle_chord() {
        let end = frenet_integrate(1.0, 0.0, 2.0 * PI / 3.0, 1e-3).unwrap();
        assert!((end.position.norm() - 3f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn frame_stays_orthonormal() {
        let end = frenet_integrate(4.3, -2.1, 20.0, 1e-2).unwrap();
        assert!(end.orthonormality_defect() < 1e-9);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(matches!(frenet_integrate(1.0, 0.0, 0.0, 0.1), Err(Error::NonPositiveLength(_))));
        assert!(matches!(frenet_integrate(1.0, 0.0, 1.0, 0.0), Err(Error::BadStep { .. })));
        assert!(matches!(frenet_integrate(1.0, 0.0, 1.0, 2.0), Err(Error::BadStep { .. })));
    }
}
