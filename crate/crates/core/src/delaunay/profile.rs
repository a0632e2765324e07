use std::f64::consts::TAU;

use nalgebra::Vector3;

use super::DelaunayShape;
use crate::error::{Error, Result};
use crate::io::MeshPatch;

/// Default arclength step of the profile integrator.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Largest tolerated drift of the first integral along a profile.
pub const DRIFT_BOUND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileSample {
    pub s: f64,
    pub x: f64,
    pub y: f64,
    pub psi: f64,
}

/// Meridian curve of a Delaunay surface: axial coordinate `x`, distance
/// from the axis `y`, inclination `psi`, by arclength `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileCurve {
    pub samples: Vec<ProfileSample>,
    /// Conserved quantity `y^2 - y cos(psi)`.
    pub force: f64,
}

impl ProfileCurve {
    pub fn first_integral_drift(&self) -> f64 {
        self.samples
            .iter()
            .map(|p| (p.y * p.y - p.y * p.psi.cos() - self.force).abs())
            .fold(0.0, f64::max)
    }

    pub fn radial_range(&self) -> (f64, f64) {
        self.samples
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.y), hi.max(p.y)))
    }

    /// `n` samples at evenly spaced indices, always keeping both ends.
    pub fn resample(&self, n: usize) -> ProfileCurve {
        let len = self.samples.len();
        let n = n.clamp(2.min(len), len);
        let samples = (0..n)
            .map(|i| {
                let idx = if n == 1 { 0 } else { (i * (len - 1) + (n - 1) / 2) / (n - 1) };
                self.samples[idx]
            })
            .collect();
        ProfileCurve {
            samples,
            force: self.force,
        }
    }
}

#[derive(Clone, Copy)]
struct State {
    x: f64,
    y: f64,
    psi: f64,
}

impl State {
    // H = 1: x' = cos psi, y' = sin psi, psi' = -2 + cos psi / y
    fn rhs(&self) -> State {
        let (sin, cos) = self.psi.sin_cos();
        State {
            x: cos,
            y: sin,
            psi: -2.0 + cos / self.y,
        }
    }

    fn axpy(&self, h: f64, d: &State) -> State {
        State {
            x: self.x + h * d.x,
            y: self.y + h * d.y,
            psi: self.psi + h * d.psi,
        }
    }

    fn rk4(&self, h: f64) -> State {
        let k1 = self.rhs();
        let k2 = self.axpy(0.5 * h, &k1).rhs();
        let k3 = self.axpy(0.5 * h, &k2).rhs();
        let k4 = self.axpy(h, &k3).rhs();
        State {
            x: self.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
            y: self.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
            psi: self.psi + h / 6.0 * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi),
        }
    }
}

fn neck_state(shape: &DelaunayShape) -> State {
    State {
        x: 0.0,
        y: 1.0 / shape.r(),
        psi: 0.0,
    }
}

/// Integrates the profile from the neck (`y = 1/r`, `psi = 0`) over
/// arclength `span` with fixed RK4 steps no longer than `step`.
///
/// Fails if the curve reaches the axis or the first integral drifts by more
/// than [`DRIFT_BOUND`].
pub fn profile_solve(shape: &DelaunayShape, span: f64, step: f64) -> Result<ProfileCurve> {
    if !(span > 0.0 && span.is_finite()) {
        return Err(Error::NonPositiveLength(span));
    }
    if !(step > 0.0 && step <= span) {
        return Err(Error::BadStep { step, span });
    }
    let n = (span / step).ceil() as usize;
    let h = span / n as f64;
    let mut state = neck_state(shape);
    let mut samples = Vec::with_capacity(n + 1);
    samples.push(ProfileSample {
        s: 0.0,
        x: state.x,
        y: state.y,
        psi: state.psi,
    });
    for i in 1..=n {
        state = state.rk4(h);
        let s = i as f64 * h;
        if !(state.y > 0.0 && state.y.is_finite() && state.psi.is_finite()) {
            return Err(Error::AxisReached(s));
        }
        samples.push(ProfileSample {
            s,
            x: state.x,
            y: state.y,
            psi: state.psi,
        });
    }
    let curve = ProfileCurve {
        samples,
        force: shape.force(),
    };
    let drift = curve.first_integral_drift();
    if drift > DRIFT_BOUND {
        return Err(Error::FirstIntegralDrift {
            drift,
            bound: DRIFT_BOUND,
        });
    }
    Ok(curve)
}

/// Arclength after which the profile repeats, or `None` for the cylinder.
///
/// For negative force (`r > 1`) the inclination oscillates and the period
/// ends at its second return to zero; for nonnegative force it winds down
/// and the period ends at `psi = -2 pi`. Crossings are located by linear
/// interpolation inside the step.
pub fn profile_period(shape: &DelaunayShape, step: f64) -> Result<Option<f64>> {
    if shape.r() == 2.0 {
        return Ok(None);
    }
    if !(step > 0.0) {
        return Err(Error::BadStep { step, span: 0.0 });
    }
    const MAX_STEPS: usize = 50_000_000;
    let oscillating = shape.force() < 0.0;
    let target = if oscillating { 0.0 } else { -TAU };
    let mut state = neck_state(shape);
    let mut crossings = 0;
    for i in 0..MAX_STEPS {
        let next = state.rk4(step);
        let s = (i + 1) as f64 * step;
        if !(next.y > 0.0 && next.y.is_finite()) {
            return Err(Error::AxisReached(s));
        }
        let (a, b) = (state.psi - target, next.psi - target);
        if i > 0 && a != 0.0 && (a > 0.0) != (b > 0.0) {
            crossings += 1;
            if !oscillating || crossings == 2 {
                return Ok(Some(s - step + step * a / (a - b)));
            }
        }
        state = next;
    }
    Ok(None)
}

/// Surface of revolution about the `x` axis, `n_angular` vertices per
/// parallel, closed in the angular direction, with exact normals.
pub fn revolve_to_mesh(p: &ProfileCurve, n_angular: usize) -> Result<MeshPatch> {
    if p.samples.len() < 2 {
        return Err(Error::DegenerateProfile);
    }
    if n_angular < 8 {
        return Err(Error::TooFew {
            what: "angular samples",
            min: 8,
            got: n_angular,
        });
    }
    let angles: Vec<(f64, f64)> = (0..n_angular)
        .map(|j| (TAU * j as f64 / n_angular as f64).sin_cos())
        .collect();
    let mut vertices = Vec::with_capacity(p.samples.len() * n_angular);
    let mut normals = Vec::with_capacity(vertices.capacity());
    for q in &p.samples {
        let (sin_psi, cos_psi) = q.psi.sin_cos();
        for &(sin, cos) in &angles {
            vertices.push(Vector3::new(q.x, q.y * cos, q.y * sin));
            normals.push(Vector3::new(-sin_psi, cos_psi * cos, cos_psi * sin));
        }
    }
    let mut mesh = MeshPatch::grid(p.samples.len(), n_angular, vertices, true);
    mesh.normals = Some(normals);
    Ok(mesh
        .with_meta("profile_samples", p.samples.len())
        .with_meta("angular_samples", n_angular)
        .with_meta("force", p.force))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delaunay::shape_from_neck_curvature;

    #[test]
    fn cylinder_is_a_fixed_point() {
        let shape = shape_from_neck_curvature(2.0).unwrap();
        let p = profile_solve(&shape, 5.0, DEFAULT_STEP).unwrap();
        for q in &p.samples {
            assert!((q.y - 0.5).abs() < 1e-12);
            assert_eq!(q.psi, 0.0);
        }
        assert_eq!(profile_period(&shape, DEFAULT_STEP).unwrap(), None);
    }

    #[test]
    fn unduloid_radius_oscillates_between_roots() {
        // y^2 - y = -2/9 at psi = 0 has roots 1/3 and 2/3
        let shape = shape_from_neck_curvature(3.0).unwrap();
        let period = profile_period(&shape, DEFAULT_STEP).unwrap().unwrap();
        let p = profile_solve(&shape, period, DEFAULT_STEP).unwrap();
        let (lo, hi) = p.radial_range();
        assert!((lo - 1.0 / 3.0).abs() < 1e-6);
        assert!((hi - 2.0 / 3.0).abs() < 1e-6);
        let end = p.samples.last().unwrap();
        assert!((end.y - 1.0 / 3.0).abs() < 1e-6 && end.psi.abs() < 1e-3);
    }

    #[test]
    fn nodoid_winds_through_a_full_turn() {
        let shape = shape_from_neck_curvature(0.5).unwrap();
        let period = profile_period(&shape, DEFAULT_STEP).unwrap().unwrap();
        let p = profile_solve(&shape, period, DEFAULT_STEP).unwrap();
        let end = p.samples.last().unwrap();
        assert!((end.psi + TAU).abs() < 1e-3);
        assert!((end.y - 2.0).abs() < 1e-6);
        assert!(p.radial_range().0 > 0.0);
    }

    #[test]
    fn sphere_chain_reaches_the_axis() {
        let shape = shape_from_neck_curvature(1.0).unwrap();
        assert!(matches!(profile_solve(&shape, 3.0, DEFAULT_STEP), Err(Error::AxisReached(_))));
    }

    #[test]
    fn coarse_steps_trip_the_drift_check() {
        let shape = shape_from_neck_curvature(8.0).unwrap();
        assert!(matches!(
            profile_solve(&shape, 4.0, 0.05),
            Err(Error::FirstIntegralDrift { .. })
        ));
    }

    #[test]
    fn resample_keeps_ends() {
        let shape = shape_from_neck_curvature(3.0).unwrap();
        let p = profile_solve(&shape, 1.0, 1e-3).unwrap();
        let q = p.resample(11);
        assert_eq!(q.samples.len(), 11);
        assert_eq!(q.samples[0], p.samples[0]);
        assert_eq!(q.samples[10], *p.samples.last().unwrap());
    }

    #[test]
    fn mesh_shape() {
        let shape = shape_from_neck_curvature(2.0).unwrap();
        let p = profile_solve(&shape, 2.0, 1e-2).unwrap();
        let mesh = revolve_to_mesh(&p, 64).unwrap();
        assert_eq!(mesh.vertices.len(), p.samples.len() * 64);
        assert_eq!(mesh.faces.len(), 2 * (p.samples.len() - 1) * 64);
        for v in &mesh.vertices {
            assert!((v.y.hypot(v.z) - 0.5).abs() < 1e-12);
        }
        mesh.validate(1e-14).unwrap();
        assert!(revolve_to_mesh(&p, 7).is_err());
        let single = ProfileCurve {
            samples: vec![p.samples[0]],
            force: p.force,
        };
        assert!(matches!(revolve_to_mesh(&single, 8), Err(Error::DegenerateProfile)));
    }

    #[test]
    fn normals_are_continuous_across_the_seam() {
        let shape = shape_from_neck_curvature(3.0).unwrap();
        let p = profile_solve(&shape, 1.0, 1e-2).unwrap();
        let n = 32;
        let mesh = revolve_to_mesh(&p, n).unwrap();
        let normals = mesh.normals.as_ref().unwrap();
        for i in 0..p.samples.len() {
            let radial = |j: usize| {
                let v = mesh.vertices[i * n + j];
                normals[i * n + j].dot(&Vector3::new(0.0, v.y, v.z))
            };
            // neighbours across the seam differ no more than interior neighbours
            let seam = (radial(n - 1) - radial(0)).abs();
            let inner = (radial(1) - radial(0)).abs();
            assert!(seam <= inner + 1e-12);
        }
        // the seam is stitched: some face uses both column n-1 and column 0
        assert!(mesh.faces.iter().any(|f| f.contains(&(n - 1)) && f.contains(&0)));
    }
}
