use std::f64::consts::TAU;

use nalgebra::Vector3;
use num_complex::Complex64;

use super::{associate_points, immerse, WeierstrassSurface};
use crate::error::{Error, Result};
use crate::io::MeshPatch;

/// Row-major grid of parameter points.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamGrid {
    pub rows: usize,
    pub cols: usize,
    pub points: Vec<Complex64>,
}

impl ParamGrid {
    /// `res x res` points on the square `center + [-half, half]^2`.
    pub fn square(center: Complex64, half: f64, res: usize) -> Result<Self> {
        check_res(res)?;
        let t = |i: usize| -half + 2.0 * half * i as f64 / (res - 1) as f64;
        let points = (0..res)
            .flat_map(|i| (0..res).map(move |j| center + Complex64::new(t(j), t(i))))
            .collect();
        Ok(Self {
            rows: res,
            cols: res,
            points,
        })
    }

    /// Polar grid about the origin: rows by radius in `[r0, r1]`, columns by
    /// angle in `[-span/2, span/2]`. The span must stay below a full turn so
    /// no point lands on the slit.
    pub fn polar(r0: f64, r1: f64, span: f64, res: usize) -> Result<Self> {
        check_res(res)?;
        if !(r0 > 0.0 && r1 > r0) {
            return Err(Error::InvalidLoop("polar grid needs 0 < r0 < r1"));
        }
        if !(span > 0.0 && span < TAU) {
            return Err(Error::InvalidLoop("polar grid span must lie in (0, 2 pi)"));
        }
        let lerp = |a: f64, b: f64, i: usize| a + (b - a) * i as f64 / (res - 1) as f64;
        let points = (0..res)
            .flat_map(|i| {
                let r = lerp(r0, r1, i);
                (0..res).map(move |j| Complex64::from_polar(r, lerp(-span / 2.0, span / 2.0, j)))
            })
            .collect();
        Ok(Self {
            rows: res,
            cols: res,
            points,
        })
    }
}

fn check_res(res: usize) -> Result<()> {
    if res < 2 {
        return Err(Error::TooFew {
            what: "grid resolution",
            min: 2,
            got: res,
        });
    }
    Ok(())
}

/// Unit normal from the Gauss map by inverse stereographic projection.
pub fn gauss_normal(g: Complex64) -> Vector3<f64> {
    let m = g.norm_sqr();
    if !m.is_finite() {
        return Vector3::new(0.0, 0.0, 1.0);
    }
    Vector3::new(2.0 * g.re, 2.0 * g.im, m - 1.0) / (m + 1.0)
}

/// Triangle mesh of `f_theta` over a parameter grid, with Gauss-map normals.
pub fn associate_mesh(s: &WeierstrassSurface, theta: f64, grid: &ParamGrid) -> Result<MeshPatch> {
    let vertices = associate_points(s, theta, &grid.points)?;
    let normals = grid.points.iter().map(|&z| gauss_normal(s.gauss_map(z))).collect();
    let mut mesh = MeshPatch::grid(grid.rows, grid.cols, vertices, false);
    mesh.normals = Some(normals);
    Ok(mesh
        .with_meta("surface", s.name())
        .with_meta("theta", theta)
        .with_meta("rows", grid.rows)
        .with_meta("cols", grid.cols))
}

/// First fundamental form `(E, F, G)` of `f_theta` at `z` by central
/// differences of step `h` in the coordinates `x`, `y`. All four stencil
/// points are reached by extending the default path to `z`, so the result
/// is local even where `f_theta` has periods.
pub fn first_fundamental_form(s: &WeierstrassSurface, theta: f64, z: Complex64, h: f64) -> Result<[f64; 3]> {
    let at = |w: Complex64| immerse(s, theta, &s.default_path(z).then(w));
    let fx = (at(z + h)? - at(z - h)?) / (2.0 * h);
    let dy = Complex64::new(0.0, h);
    let fy = (at(z + dy)? - at(z - dy)?) / (2.0 * h);
    Ok([fx.dot(&fx), fx.dot(&fy), fy.dot(&fy)])
}
