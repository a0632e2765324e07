use std::f64::consts::TAU;

use nalgebra::Vector3;
use num_complex::Complex64;

use super::congruence::{congruence_fit, CongruenceResult};
use crate::error::Result;
use crate::weierstrass::{primitives, CVec3, WeierstrassSurface};

/// Default number of grid angles scanned before local refinement.
pub const DEFAULT_THETA_GRID: usize = 720;

fn associate(h: &[CVec3], theta: f64) -> Vec<Vector3<f64>> {
    let (sin, cos) = theta.sin_cos();
    h.iter().map(|v| v.map(|c| cos * c.re - sin * c.im)).collect()
}

/// Associate angle `theta` for which `f_theta` best matches `target` up to
/// a proper rigid motion.
///
/// `target` pairs parameter points with observed positions; `f_theta` is
/// evaluated at the same parameters along the surface's default paths. The
/// residual is scanned on `theta_grid` equally spaced angles and the best
/// cell is refined by golden-section search. `recovered_theta` is `None`
/// when the residual does not depend on `theta`.
pub fn recover_theta(
    s: &WeierstrassSurface,
    target: &[(Complex64, Vector3<f64>)],
    theta_grid: usize,
) -> Result<CongruenceResult> {
    let params: Vec<Complex64> = target.iter().map(|(z, _)| *z).collect();
    let points: Vec<Vector3<f64>> = target.iter().map(|(_, p)| *p).collect();
    let h = primitives(s, &params)?;
    let fit = |theta: f64| congruence_fit(&associate(&h, theta), &points, false);

    let n = theta_grid.max(3);
    let step = TAU / n as f64;
    let mut best = (0usize, f64::INFINITY);
    let mut worst = 0.0f64;
    for j in 0..n {
        let r = fit(j as f64 * step)?.rms_residual;
        if r < best.1 {
            best = (j, r);
        }
        worst = worst.max(r);
    }
    if worst - best.1 <= 1e-12 * (1.0 + worst) {
        return Ok(CongruenceResult {
            recovered_theta: None,
            ..fit(0.0)?
        });
    }

    let center = best.0 as f64 * step;
    let theta = golden_section(|t| fit(t).map(|f| f.rms_residual).unwrap_or(f64::INFINITY), center - step, center + step, 1e-12);
    let refined = fit(theta)?;
    let (theta, result) = if refined.rms_residual < best.1 {
        (theta, refined)
    } else {
        (center, fit(center)?)
    };
    Ok(CongruenceResult {
        recovered_theta: Some(theta.rem_euclid(TAU)),
        ..result
    })
}

fn golden_section(mut f: impl FnMut(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}
