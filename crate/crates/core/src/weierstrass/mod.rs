//! Minimal immersions from Weierstrass data `(g, dh)` on planar domains.
//!
//! The holomorphic 1-forms are
//! `phi_1 = (1/g - g) dh / 2`, `phi_2 = i (1/g + g) dh / 2`, `phi_3 = dh`,
//! and the associate immersions are `f_theta = Re(e^{i theta} int phi)`.

mod catalog;
mod loops;
mod mesh;
mod periods;

use std::fmt;
use std::sync::Arc;

use nalgebra::Vector3;
use num_complex::Complex64;

pub use catalog::{catalog, CatalogSurface};
pub use loops::{LoopKind, LoopSpec, Polyline};
pub use mesh::{associate_mesh, first_fundamental_form, gauss_normal, ParamGrid};
pub use periods::{
    associate_points, associate_well_defined, flux, primitives, flux_with, immerse, immerse_with, period, period_with,
    primitive, primitive_with, FluxVector, PeriodEstimate, WellDefinedness,
};

use crate::error::{Error, Result};

/// Minimum distance a path or loop must keep from a puncture.
pub const PUNCTURE_CLEARANCE: f64 = 1e-6;

/// Complex 3-vector of form values or periods.
pub type CVec3 = Vector3<Complex64>;

/// Holomorphic data generating a minimal immersion.
///
/// `forms` has a default in terms of the Gauss map and the height density;
/// implementors with closed forms can override it, which also lets zeros of
/// `g` cancel against zeros of `dh`.
pub trait HolomorphicData: Send + Sync {
    fn gauss_map(&self, z: Complex64) -> Complex64;

    /// Density `eta` of the height differential `dh = eta(z) dz`.
    fn height_density(&self, z: Complex64) -> Complex64;

    fn forms(&self, z: Complex64) -> CVec3 {
        let g = self.gauss_map(z);
        let eta = self.height_density(z);
        let inv = g.inv();
        Vector3::new(
            0.5 * (inv - g) * eta,
            Complex64::i() * 0.5 * (inv + g) * eta,
            eta,
        )
    }
}

/// Weierstrass data given by two closures.
pub struct FnData<G, E> {
    gauss: G,
    height: E,
}

impl<G, E> FnData<G, E>
where
    G: Fn(Complex64) -> Complex64 + Send + Sync,
    E: Fn(Complex64) -> Complex64 + Send + Sync,
{
    pub fn new(gauss: G, height: E) -> Self {
        Self { gauss, height }
    }
}

impl<G, E> HolomorphicData for FnData<G, E>
where
    G: Fn(Complex64) -> Complex64 + Send + Sync,
    E: Fn(Complex64) -> Complex64 + Send + Sync,
{
    fn gauss_map(&self, z: Complex64) -> Complex64 {
        (self.gauss)(z)
    }
    fn height_density(&self, z: Complex64) -> Complex64 {
        (self.height)(z)
    }
}

/// Homothety of existing data: `dh` is multiplied by `factor`.
struct Scaled {
    inner: Arc<dyn HolomorphicData>,
    factor: f64,
}

impl HolomorphicData for Scaled {
    fn gauss_map(&self, z: Complex64) -> Complex64 {
        self.inner.gauss_map(z)
    }
    fn height_density(&self, z: Complex64) -> Complex64 {
        self.inner.height_density(z) * self.factor
    }
    fn forms(&self, z: Complex64) -> CVec3 {
        self.inner.forms(z).map(|c| c * self.factor)
    }
}

/// Planar parameter region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Plane,
    Disk { center: Complex64, radius: f64 },
    Annulus { center: Complex64, inner: f64, outer: f64 },
}

impl Domain {
    fn contains(&self, z: Complex64) -> bool {
        match *self {
            Domain::Plane => z.re.is_finite() && z.im.is_finite(),
            Domain::Disk { center, radius } => (z - center).norm() < radius,
            Domain::Annulus {
                center,
                inner,
                outer,
            } => {
                let d = (z - center).norm();
                d > inner && d < outer
            }
        }
    }
}

/// Holomorphic data on a punctured planar domain.
#[derive(Clone)]
pub struct WeierstrassSurface {
    name: String,
    domain: Domain,
    punctures: Vec<Complex64>,
    log_cover: bool,
    base: Complex64,
    data: Arc<dyn HolomorphicData>,
}

impl fmt::Debug for WeierstrassSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeierstrassSurface")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .field("punctures", &self.punctures)
            .field("log_cover", &self.log_cover)
            .field("base", &self.base)
            .finish_non_exhaustive()
    }
}

impl WeierstrassSurface {
    pub fn new(
        name: impl Into<String>,
        domain: Domain,
        punctures: Vec<Complex64>,
        data: impl HolomorphicData + 'static,
    ) -> Self {
        let base = match domain {
            Domain::Plane => Complex64::new(0.0, 0.0),
            Domain::Disk { center, .. } => center,
            Domain::Annulus { center, inner, outer } => center + 0.5 * (inner + outer),
        };
        let mut s = Self {
            name: name.into(),
            domain,
            punctures,
            log_cover: false,
            base,
            data: Arc::new(data),
        };
        if s.check_point(base).is_err() {
            s.base = base + 1.0;
        }
        s
    }

    /// Base point of [`WeierstrassSurface::default_path`].
    pub fn with_base(mut self, base: Complex64) -> Self {
        self.base = base;
        self
    }

    pub fn base(&self) -> Complex64 {
        self.base
    }

    /// Path used to immerse sample points: a straight segment from the base
    /// point, or for punctured and slit domains a radial segment from the
    /// base followed by an arc about the origin (see [`Polyline::polar`]).
    pub fn default_path(&self, z: Complex64) -> Polyline {
        if self.log_cover || !self.punctures.is_empty() {
            let base = self.base.norm();
            Polyline::polar(base, z.norm(), z.arg()).then(z)
        } else {
            Polyline::straight(self.base, z)
        }
    }

    /// Marks the surface as the universal cover of its punctured domain,
    /// realized on the plane slit along the negative real axis.
    pub fn with_log_cover(mut self) -> Self {
        self.log_cover = true;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn punctures(&self) -> &[Complex64] {
        &self.punctures
    }

    pub fn is_log_cover(&self) -> bool {
        self.log_cover
    }

    /// Simply-connected parameter domain (no loop can enclose a puncture).
    pub fn is_simply_connected(&self) -> bool {
        self.log_cover || (self.punctures.is_empty() && !matches!(self.domain, Domain::Annulus { .. }))
    }

    pub fn gauss_map(&self, z: Complex64) -> Complex64 {
        self.data.gauss_map(z)
    }

    pub fn forms(&self, z: Complex64) -> CVec3 {
        self.data.forms(z)
    }

    /// Same surface scaled by `factor` about the origin.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            name: self.name.clone(),
            domain: self.domain,
            punctures: self.punctures.clone(),
            log_cover: self.log_cover,
            base: self.base,
            data: Arc::new(Scaled {
                inner: Arc::clone(&self.data),
                factor,
            }),
        }
    }

    /// A constant Gauss map means the immersion is planar.
    pub fn is_flat(&self, probes: &[Complex64]) -> bool {
        let mut values = probes
            .iter()
            .filter(|z| self.check_point(**z).is_ok())
            .map(|z| self.gauss_map(*z));
        let Some(first) = values.next() else {
            return false;
        };
        values.all(|g| (g - first).norm() <= 1e-12 * (1.0 + first.norm()))
    }

    pub(crate) fn check_point(&self, z: Complex64) -> Result<()> {
        if !self.domain.contains(z) {
            return Err(Error::OutsideDomain(z));
        }
        for &p in &self.punctures {
            let d = (z - p).norm();
            if d < PUNCTURE_CLEARANCE {
                return Err(Error::NearPuncture {
                    puncture: p,
                    distance: d,
                });
            }
        }
        if self.log_cover && z.im == 0.0 && z.re <= 0.0 {
            return Err(Error::CrossesBranchCut);
        }
        Ok(())
    }

    /// Checks the immersion condition on a sample set: the forms are finite
    /// and the conformal factor is positive.
    pub fn validate(&self, samples: &[Complex64]) -> Result<()> {
        for &z in samples {
            if self.check_point(z).is_err() {
                continue;
            }
            metric_factor(self, z)?;
        }
        Ok(())
    }

    /// Default probe set: a grid over `[-2, 2]^2` (clipped to the domain)
    /// and circles of radius 1e-3 and 1e-1 about every puncture.
    pub fn default_probes(&self) -> Vec<Complex64> {
        let mut probes = Vec::new();
        let (center, half) = match self.domain {
            Domain::Plane => (Complex64::new(0.0, 0.0), 2.0),
            Domain::Disk { center, radius } => (center, radius),
            Domain::Annulus { center, outer, .. } => (center, outer),
        };
        let n = 17;
        for i in 0..n {
            for j in 0..n {
                // offset keeps the grid off the axes
                let x = -half + 2.0 * half * (i as f64 + 0.37) / n as f64;
                let y = -half + 2.0 * half * (j as f64 + 0.61) / n as f64;
                probes.push(center + Complex64::new(x, y));
            }
        }
        for &p in &self.punctures {
            for radius in [1e-3, 1e-1] {
                for k in 0..16 {
                    let t = std::f64::consts::TAU * (k as f64 + 0.5) / 16.0;
                    probes.push(p + Complex64::from_polar(radius, t));
                }
            }
        }
        probes
    }
}

/// Conformal factor `lambda = (|g| + 1/|g|) |eta| / 2` of the induced
/// metric, computed as `sqrt(sum |phi_k|^2 / 2)`, which is the same quantity
/// but stays finite where a zero of `g` is cancelled by a zero of `dh`.
///
/// It does not depend on the associate angle.
pub fn metric_factor(s: &WeierstrassSurface, z: Complex64) -> Result<f64> {
    s.check_point(z)?;
    let phi = s.forms(z);
    let lambda = (phi.iter().map(|c| c.norm_sqr()).sum::<f64>() / 2.0).sqrt();
    if lambda.is_finite() && lambda > 0.0 {
        Ok(lambda)
    } else {
        Err(Error::Singular(z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn metric_factor_examples() {
        let enneper = catalog("enneper").unwrap();
        assert!((metric_factor(&enneper, c(1.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        // (1 + |z|^2)^2 / 2 at the origin, where g and dh vanish together
        assert!((metric_factor(&enneper, c(0.0, 0.0)).unwrap() - 0.5).abs() < 1e-15);
        let catenoid = catalog("catenoid").unwrap();
        assert!((metric_factor(&catenoid, c(1.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!(matches!(
            metric_factor(&catenoid, c(1e-9, 0.0)),
            Err(Error::NearPuncture { .. })
        ));
    }

    #[test]
    fn metric_factor_matches_direct_formula() {
        let catenoid = catalog("catenoid").unwrap();
        for z in [c(0.3, 0.4), c(-2.0, 1.0), c(0.1, -0.05)] {
            let direct = 0.5 * (z.norm() + 1.0 / z.norm()) / z.norm();
            assert!((metric_factor(&catenoid, z).unwrap() - direct).abs() < 1e-12 * direct);
        }
    }

    #[test]
    fn closure_data_uses_default_forms() {
        let s = WeierstrassSurface::new(
            "enneper-by-closures",
            Domain::Plane,
            vec![],
            FnData::new(|z| z, |z| z),
        );
        let reference = catalog("enneper").unwrap();
        let z = c(0.7, -1.1);
        assert!((s.forms(z) - reference.forms(z)).norm() < 1e-14);
    }

    #[test]
    fn catalog_surfaces_are_immersions() {
        for name in ["catenoid", "helicoid", "enneper"] {
            let s = catalog(name).unwrap();
            s.validate(&s.default_probes()).unwrap();
        }
    }

    #[test]
    fn validate_flags_branch_point() {
        // g = z with dh = dz: phi_1 and phi_2 have poles at the origin
        let s = WeierstrassSurface::new("bad", Domain::Plane, vec![], FnData::new(|z| z, |_| Complex64::new(1.0, 0.0)));
        assert!(matches!(metric_factor(&s, c(0.0, 0.0)), Err(Error::Singular(_))));
    }

    #[test]
    fn flatness_probe() {
        let plane = WeierstrassSurface::new(
            "plane",
            Domain::Plane,
            vec![],
            FnData::new(|_| Complex64::new(1.0, 0.0), |_| Complex64::new(0.0, 0.0)),
        );
        let probes = [c(0.1, 0.2), c(1.0, -1.0), c(3.0, 0.5)];
        assert!(plane.is_flat(&probes));
        assert!(!catalog("enneper").unwrap().is_flat(&probes));
    }
}
