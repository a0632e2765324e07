use nalgebra::Vector3;
use num_complex::Complex64;

use super::loops::{segment_distance, segment_meets_negative_axis};
use super::{CVec3, Domain, LoopKind, LoopSpec, Polyline, WeierstrassSurface, PUNCTURE_CLEARANCE};
use crate::error::{Error, Result};
use crate::quadrature::{adaptive, GaussLegendre, Integrand, QuadratureConfig};

/// Integral of the Weierstrass forms with its quadrature error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodEstimate {
    pub value: CVec3,
    pub error: f64,
}

/// Flux of a loop: the imaginary part of its period. `real_part` must vanish
/// for the immersion to be single-valued around the loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxVector {
    pub v: Vector3<f64>,
    pub real_part: Vector3<f64>,
    pub quadrature_error: f64,
}

/// Outcome of the flux test over a homology basis.
#[derive(Debug, Clone, PartialEq)]
pub struct WellDefinedness {
    pub well_defined: bool,
    /// First basis loop with nonzero flux, by index.
    pub witness: Option<(usize, FluxVector)>,
    pub fluxes: Vec<FluxVector>,
}

fn check_segment(s: &WeierstrassSurface, a: Complex64, b: Complex64) -> Result<()> {
    for &p in s.punctures() {
        let d = segment_distance(p, a, b);
        if d < PUNCTURE_CLEARANCE {
            return Err(Error::NearPuncture {
                puncture: p,
                distance: d,
            });
        }
    }
    if s.is_log_cover() && segment_meets_negative_axis(a, b) {
        return Err(Error::CrossesBranchCut);
    }
    if let Domain::Annulus { center, inner, .. } = s.domain() {
        if segment_distance(center, a, b) <= inner {
            return Err(Error::OutsideDomain(center));
        }
    }
    Ok(())
}

fn check_path(s: &WeierstrassSurface, vertices: &[Complex64]) -> Result<()> {
    for &z in vertices {
        s.check_point(z)?;
    }
    for w in vertices.windows(2) {
        check_segment(s, w[0], w[1])?;
    }
    Ok(())
}

fn check_loop(s: &WeierstrassSurface, lp: &LoopSpec) -> Result<()> {
    match &lp.kind {
        LoopKind::Polygon(v) => check_path(s, v),
        LoopKind::Circle { center, radius } => {
            for &p in s.punctures() {
                let d = lp.distance_to(p);
                if d < PUNCTURE_CLEARANCE {
                    return Err(Error::NearPuncture {
                        puncture: p,
                        distance: d,
                    });
                }
            }
            if s.is_log_cover() && lp.meets_negative_axis() {
                return Err(Error::CrossesBranchCut);
            }
            let offset = |c: Complex64| (center - c).norm();
            let inside = match s.domain() {
                Domain::Plane => true,
                Domain::Disk { center: c, radius: r } => offset(c) + radius < r,
                Domain::Annulus { center: c, inner, outer } => {
                    let d = offset(c);
                    d + radius < outer && (d - radius).abs() > inner
                }
            };
            if inside {
                Ok(())
            } else {
                Err(Error::OutsideDomain(*center))
            }
        }
    }
}

fn integrate_segment(
    s: &WeierstrassSurface,
    rule: &GaussLegendre,
    config: &QuadratureConfig,
    a: Complex64,
    b: Complex64,
) -> Result<PeriodEstimate> {
    let dz = b - a;
    let est = adaptive(rule, 0.0, 1.0, 1, config, |t| s.forms(a + dz * t).map(|c| c * dz))?;
    Ok(PeriodEstimate {
        value: est.value,
        error: est.error,
    })
}

fn integrate_polyline(
    s: &WeierstrassSurface,
    vertices: &[Complex64],
    config: &QuadratureConfig,
) -> Result<PeriodEstimate> {
    let rule = GaussLegendre::new(config.nodes);
    let mut total = PeriodEstimate {
        value: CVec3::zero(),
        error: 0.0,
    };
    for w in vertices.windows(2) {
        let seg = integrate_segment(s, &rule, config, w[0], w[1])?;
        total.value += seg.value;
        total.error += seg.error;
    }
    Ok(total)
}

/// Complex primitive `int_path phi` from `path.start()` to `path.end()`.
pub fn primitive(s: &WeierstrassSurface, path: &Polyline) -> Result<PeriodEstimate> {
    primitive_with(s, path, &QuadratureConfig::default())
}

pub fn primitive_with(
    s: &WeierstrassSurface,
    path: &Polyline,
    config: &QuadratureConfig,
) -> Result<PeriodEstimate> {
    check_path(s, path.vertices())?;
    integrate_polyline(s, path.vertices(), config)
}

/// Associate immersion `f_theta(z) = Re(e^{i theta} int_base^z phi)` with
/// base point `path.start()` and `z = path.end()`.
///
/// The value is path-independent whenever the real periods vanish, which
/// holds for the catalog surfaces on their simply-connected slit domains.
pub fn immerse(s: &WeierstrassSurface, theta: f64, path: &Polyline) -> Result<Vector3<f64>> {
    immerse_with(s, theta, path, &QuadratureConfig::default())
}

pub fn immerse_with(
    s: &WeierstrassSurface,
    theta: f64,
    path: &Polyline,
    config: &QuadratureConfig,
) -> Result<Vector3<f64>> {
    let h = primitive_with(s, path, config)?.value;
    Ok(rotate_real(&h, theta))
}

/// Primitives along [`WeierstrassSurface::default_path`] for each
/// parameter point.
pub fn primitives(s: &WeierstrassSurface, params: &[Complex64]) -> Result<Vec<CVec3>> {
    params
        .iter()
        .map(|&z| primitive(s, &s.default_path(z)).map(|p| p.value))
        .collect()
}

/// `f_theta` at each parameter point, via the default paths.
pub fn associate_points(s: &WeierstrassSurface, theta: f64, params: &[Complex64]) -> Result<Vec<Vector3<f64>>> {
    Ok(primitives(s, params)?.iter().map(|h| rotate_real(h, theta)).collect())
}

/// `Re(e^{i theta} h)`.
pub(crate) fn rotate_real(h: &CVec3, theta: f64) -> Vector3<f64> {
    let (sin, cos) = theta.sin_cos();
    h.map(|c| cos * c.re - sin * c.im)
}

/// Period `oint phi` over a closed loop.
pub fn period(s: &WeierstrassSurface, lp: &LoopSpec) -> Result<PeriodEstimate> {
    period_with(s, lp, &QuadratureConfig::default())
}

pub fn period_with(s: &WeierstrassSurface, lp: &LoopSpec, config: &QuadratureConfig) -> Result<PeriodEstimate> {
    check_loop(s, lp)?;
    let natural = match &lp.kind {
        LoopKind::Polygon(v) => integrate_polyline(s, v, config)?,
        LoopKind::Circle { center, radius } => {
            let rule = GaussLegendre::new(config.nodes);
            let (center, radius) = (*center, *radius);
            let est = adaptive(&rule, 0.0, std::f64::consts::TAU, 4, config, |t| {
                let e = Complex64::from_polar(radius, t);
                let dz = Complex64::i() * e;
                s.forms(center + e).map(|c| c * dz)
            })?;
            PeriodEstimate {
                value: est.value,
                error: est.error,
            }
        }
    };
    if lp.counterclockwise {
        Ok(natural)
    } else {
        Ok(PeriodEstimate {
            value: -natural.value,
            error: natural.error,
        })
    }
}

/// Flux of the conormal along the loop, `Im oint phi`.
pub fn flux(s: &WeierstrassSurface, lp: &LoopSpec) -> Result<FluxVector> {
    flux_with(s, lp, &QuadratureConfig::default())
}

pub fn flux_with(s: &WeierstrassSurface, lp: &LoopSpec, config: &QuadratureConfig) -> Result<FluxVector> {
    let p = period_with(s, lp, config)?;
    Ok(FluxVector {
        v: p.value.map(|c| c.im),
        real_part: p.value.map(|c| c.re),
        quadrature_error: p.error,
    })
}

/// The associate family is well defined on the surface iff every loop of a
/// homology basis has zero flux. The caller supplies the basis.
pub fn associate_well_defined(s: &WeierstrassSurface, basis: &[LoopSpec], tol: f64) -> Result<WellDefinedness> {
    let mut fluxes = Vec::with_capacity(basis.len());
    let mut witness = None;
    for (i, lp) in basis.iter().enumerate() {
        let f = flux(s, lp)?;
        if witness.is_none() && f.v.norm() > tol {
            witness = Some((i, f));
        }
        fluxes.push(f);
    }
    Ok(WellDefinedness {
        well_defined: witness.is_none(),
        witness,
        fluxes,
    })
}
