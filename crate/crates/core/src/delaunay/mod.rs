//! Delaunay surfaces (CMC surfaces of revolution) normalized to mean
//! curvature `H = 1` and parametrized by the principal curvature `r` of the
//! neck circle. The other principal curvature there is `s = 2 - r`.
//!
//! Surfaces at another mean curvature `H` are the same shapes with every
//! length divided by `H`; see [`DelaunayShape::neck_at`].

mod profile;

pub use profile::{profile_period, profile_solve, revolve_to_mesh, ProfileCurve, ProfileSample, DEFAULT_STEP, DRIFT_BOUND};

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{helix_endpoint_gap, HelixArc};
use crate::roots::brent;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DelaunayFamily {
    Unduloid,
    Cylinder,
    Nodoid,
}

impl fmt::Display for DelaunayFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Unduloid => "unduloid",
            Self::Cylinder => "cylinder",
            Self::Nodoid => "nodoid",
        })
    }
}

/// A CMC-1 surface of revolution given by its neck principal curvature.
///
/// `r > 2` is an unduloid, `r = 2` the cylinder and `0 < r < 2` is treated
/// as a nodoid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DelaunayShape {
    family: DelaunayFamily,
    r: f64,
}

/// Neck geometry at mean curvature `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeckData {
    pub radius: f64,
    pub length: f64,
    pub circle_curvature: f64,
    pub meridian_curvature: f64,
}

impl DelaunayShape {
    pub fn family(&self) -> DelaunayFamily {
        self.family
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn s(&self) -> f64 {
        2.0 - self.r
    }

    pub fn neck_radius(&self) -> f64 {
        1.0 / self.r
    }

    pub fn neck_length(&self) -> f64 {
        2.0 * PI / self.r
    }

    /// First integral `y^2 - y cos(psi)` of the profile, evaluated at the neck.
    pub fn force(&self) -> f64 {
        1.0 / (self.r * self.r) - 1.0 / self.r
    }

    pub fn neck_at(&self, h: f64) -> NeckData {
        NeckData {
            radius: self.neck_radius() / h,
            length: self.neck_length() / h,
            circle_curvature: self.r * h,
            meridian_curvature: self.s() * h,
        }
    }
}

pub fn shape_from_neck_curvature(r: f64) -> Result<DelaunayShape> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::BadNeckCurvature(r));
    }
    let family = if r > 2.0 {
        DelaunayFamily::Unduloid
    } else if r == 2.0 {
        DelaunayFamily::Cylinder
    } else {
        DelaunayFamily::Nodoid
    };
    Ok(DelaunayShape { family, r })
}

/// Image of the lifted neck circle under the `theta`-associate immersion:
/// curvature `cos(theta)(r - 1) + 1`, torsion `sin(theta)(1 - r)`, length
/// `2 pi / r`.
pub fn neck_image_curve(shape: &DelaunayShape, theta: f64) -> HelixArc {
    let r = shape.r;
    let (sin, cos) = theta.sin_cos();
    HelixArc {
        k: cos * (r - 1.0) + 1.0,
        tau: sin * (1.0 - r),
        len: shape.neck_length(),
    }
}

/// Endpoint gap of the neck image at one associate angle.
pub fn neck_gap(shape: &DelaunayShape, theta: f64) -> f64 {
    helix_endpoint_gap(&neck_image_curve(shape, theta))
}

/// Interior nodes `pi * 2j / n`, `j = 1..n-1`, of an `n`-fold division of
/// the circle, with `pi` inserted when `n` is odd. `pi` is always exact.
pub fn theta_grid(n: usize) -> Vec<f64> {
    let mut grid: Vec<f64> = (1..n).map(|j| PI * ((2 * j) as f64 / n as f64)).collect();
    if n % 2 == 1 {
        let at = grid.partition_point(|&t| t < PI);
        grid.insert(at, PI);
    }
    grid
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapSweep {
    pub rows: Vec<(f64, f64)>,
    pub min_theta: f64,
    pub min_gap: f64,
}

impl GapSweep {
    pub fn gap_at(&self, theta: f64) -> Option<f64> {
        self.rows.iter().find(|(t, _)| *t == theta).map(|(_, g)| *g)
    }
}

/// Endpoint gap over [`theta_grid`]`(n_theta)` and its minimum.
pub fn rigidity_gap_sweep(shape: &DelaunayShape, n_theta: usize) -> Result<GapSweep> {
    if n_theta < 8 {
        return Err(Error::TooFew {
            what: "theta grid size",
            min: 8,
            got: n_theta,
        });
    }
    let rows: Vec<(f64, f64)> = theta_grid(n_theta)
        .into_iter()
        .map(|t| (t, neck_gap(shape, t)))
        .collect();
    let (min_theta, min_gap) = rows
        .iter()
        .copied()
        .fold((f64::NAN, f64::INFINITY), |best, row| if row.1 < best.1 { row } else { best });
    Ok(GapSweep {
        rows,
        min_theta,
        min_gap,
    })
}

/// Signed chord of the planar `theta = pi` neck image, `2 sin(k L / 2) / k`
/// with `k = 2 - r` and `L = 2 pi / r`. Its absolute value is the endpoint
/// gap; unlike the gap it changes sign at every closure.
pub fn half_turn_chord(r: f64) -> f64 {
    let k = 2.0 - r;
    let len = 2.0 * PI / r;
    if k.abs() < 1e-7 {
        // series of 2 sin(kL/2)/k about k = 0
        return len * (1.0 - (k * len).powi(2) / 24.0);
    }
    2.0 * (0.5 * k * len).sin() / k
}

/// Neck curvature `r` in `(0, 2)` of the nodoid whose `pi`-associate neck
/// image closes after exactly `m` turns.
///
/// Scans `u = 1/r` upward from `1/2` (the cylinder) in steps of `1/16`,
/// counting sign changes of [`half_turn_chord`], and polishes the `m`-th
/// bracket with Brent's method.
pub fn nodoid_closure_solve(m: u32) -> Result<f64> {
    if m == 0 {
        return Err(Error::ZeroClosureIndex);
    }
    const DU: f64 = 1.0 / 16.0;
    const MAX_STEPS: usize = 1 << 26;
    let chord = |u: f64| half_turn_chord(1.0 / u);
    let mut u_prev = 0.5;
    let mut f_prev = chord(u_prev);
    let mut seen = 0;
    for j in 1..=MAX_STEPS {
        let u = 0.5 + j as f64 * DU;
        let f = chord(u);
        if (f >= 0.0) != (f_prev >= 0.0) {
            seen += 1;
            if seen == m {
                let root = brent(chord, u_prev, u, 1e-15, 200).ok_or(Error::RootNotBracketed(m))?;
                return Ok(1.0 / root);
            }
        }
        u_prev = u;
        f_prev = f;
    }
    Err(Error::RootNotBracketed(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{frenet_integrate, geodesic_curvature_torsion, ShapeOperatorSample};
    use nalgebra::Vector2;

    #[test]
    fn classification() {
        let cyl = shape_from_neck_curvature(2.0).unwrap();
        assert_eq!(cyl.family(), DelaunayFamily::Cylinder);
        assert_eq!(cyl.s(), 0.0);
        let und = shape_from_neck_curvature(3.0).unwrap();
        assert_eq!(und.family(), DelaunayFamily::Unduloid);
        assert_eq!(und.s(), -1.0);
        let nod = shape_from_neck_curvature(1.0).unwrap();
        assert_eq!(nod.family(), DelaunayFamily::Nodoid);
        assert_eq!(nod.s(), 1.0);
        assert!(shape_from_neck_curvature(0.0).is_err());
        assert!(shape_from_neck_curvature(-1.0).is_err());
        assert!(shape_from_neck_curvature(f64::INFINITY).is_err());
    }

    #[test]
    fn neck_conversions() {
        let s = shape_from_neck_curvature(3.0).unwrap();
        assert_eq!(s.neck_radius(), 1.0 / 3.0);
        assert!((s.force() - (1.0 / 9.0 - 1.0 / 3.0)).abs() < 1e-16);
        let at2 = s.neck_at(2.0);
        assert_eq!(at2.radius, 1.0 / 6.0);
        assert_eq!(at2.circle_curvature, 6.0);
        assert_eq!(at2.meridian_curvature, -2.0);
    }

    #[test]
    fn neck_image_examples() {
        let s3 = shape_from_neck_curvature(3.0).unwrap();
        let arc = neck_image_curve(&s3, 0.0);
        assert_eq!((arc.k, arc.tau, arc.len), (3.0, 0.0, 2.0 * PI / 3.0));
        assert!(arc.endpoint_gap() < 1e-15);
        let arc = neck_image_curve(&s3, PI);
        assert!((arc.k + 1.0).abs() < 1e-15 && arc.tau.abs() < 1e-15);
        let s2 = shape_from_neck_curvature(2.0).unwrap();
        let arc = neck_image_curve(&s2, PI);
        assert!(arc.k.abs() < 1e-15 && arc.tau.abs() < 1e-15);
        assert_eq!(arc.len, PI);
    }

    #[test]
    fn neck_image_agrees_with_shape_operator() {
        for &r in &[0.4, 1.0, 2.0, 3.0, 7.5] {
            let shape = shape_from_neck_curvature(r).unwrap();
            let a = ShapeOperatorSample::neck(r);
            for i in 0..50 {
                let theta = 0.13 * i as f64;
                let arc = neck_image_curve(&shape, theta);
                let (k, tau) = geodesic_curvature_torsion(&a, theta, Vector2::x()).unwrap();
                assert!((arc.k - k).abs() <= 4.0 * f64::EPSILON * r);
                assert!((arc.tau - tau).abs() <= 4.0 * f64::EPSILON * r);
            }
        }
    }

    #[test]
    fn theta_grid_shape() {
        let g = theta_grid(8);
        assert_eq!(g.len(), 7);
        assert_eq!(g[3], PI);
        assert!(g[0] > 0.0 && *g.last().unwrap() < 2.0 * PI);
        let g = theta_grid(9);
        assert_eq!(g.len(), 9);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(g.contains(&PI));
    }

    #[test]
    fn sweep_gaps_at_half_turn() {
        let sweep = rigidity_gap_sweep(&shape_from_neck_curvature(3.0).unwrap(), 360).unwrap();
        assert!((sweep.gap_at(PI).unwrap() - 3f64.sqrt()).abs() < 1e-14);
        assert!(sweep.min_gap > 0.0);
        let sweep = rigidity_gap_sweep(&shape_from_neck_curvature(2.0).unwrap(), 360).unwrap();
        assert_eq!(sweep.gap_at(PI).unwrap(), PI);
        assert!(rigidity_gap_sweep(&shape_from_neck_curvature(2.0).unwrap(), 7).is_err());
    }

    #[test]
    fn quarter_turn_gap_matches_frenet() {
        let shape = shape_from_neck_curvature(3.0).unwrap();
        let arc = neck_image_curve(&shape, PI / 2.0);
        assert!((arc.k - 1.0).abs() < 1e-15 && (arc.tau + 2.0).abs() < 1e-15);
        let end = frenet_integrate(arc.k, arc.tau, arc.len, 1e-4).unwrap();
        assert!((end.position.norm() - arc.endpoint_gap()).abs() < 1e-8);
        assert!(arc.endpoint_gap() > 0.0);
    }

    #[test]
    fn closure_chord_matches_gap() {
        for &r in &[0.3, 0.9, 1.7, 2.0, 2.0 + 1e-9, 4.0] {
            let shape = shape_from_neck_curvature(r).unwrap();
            assert!((half_turn_chord(r).abs() - neck_gap(&shape, PI)).abs() < 1e-12, "r = {r}");
        }
    }

    #[test]
    fn nodoid_closure_roots() {
        for (m, expected) in [(1, 1.0), (2, 2.0 / 3.0), (5, 1.0 / 3.0)] {
            let r = nodoid_closure_solve(m).unwrap();
            assert!((r - expected).abs() < 1e-12, "m = {m}: {r}");
        }
        assert!(matches!(nodoid_closure_solve(0), Err(Error::ZeroClosureIndex)));
    }

    #[test]
    fn nodoid_closure_high_index() {
        let r = nodoid_closure_solve(1000).unwrap();
        assert!((r - 2.0 / 1001.0).abs() < 1e-12);
    }
}
