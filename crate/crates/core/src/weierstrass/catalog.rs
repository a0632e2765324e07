use std::fmt;
use std::str::FromStr;

use nalgebra::Vector3;
use num_complex::Complex64;

use super::{CVec3, Domain, HolomorphicData, WeierstrassSurface};
use crate::error::{Error, Result};

/// Classical minimal surfaces with closed-form Weierstrass data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogSurface {
    /// `g = z`, `dh = dz / z` on the plane punctured at the origin.
    Catenoid,
    /// `g = z`, `dh = -i dz / z` on the universal cover of the punctured
    /// plane. The sign makes the `pi/2` associate immersion coincide with
    /// the catenoid on the same parameter points.
    Helicoid,
    /// `g = z`, `dh = z dz` on the plane.
    Enneper,
}

impl CatalogSurface {
    pub const ALL: [CatalogSurface; 3] = [Self::Catenoid, Self::Helicoid, Self::Enneper];

    pub fn name(self) -> &'static str {
        match self {
            Self::Catenoid => "catenoid",
            Self::Helicoid => "helicoid",
            Self::Enneper => "enneper",
        }
    }

    pub fn surface(self) -> WeierstrassSurface {
        let origin = Complex64::new(0.0, 0.0);
        match self {
            Self::Catenoid => WeierstrassSurface::new(self.name(), Domain::Plane, vec![origin], Catenoid),
            Self::Helicoid => {
                WeierstrassSurface::new(self.name(), Domain::Plane, vec![origin], Helicoid).with_log_cover()
            }
            Self::Enneper => WeierstrassSurface::new(self.name(), Domain::Plane, vec![], Enneper),
        }
    }
}

impl fmt::Display for CatalogSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogSurface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "catenoid" => Ok(Self::Catenoid),
            "helicoid" => Ok(Self::Helicoid),
            "enneper" => Ok(Self::Enneper),
            _ => Err(Error::UnknownSurface(s.to_owned())),
        }
    }
}

pub fn catalog(name: &str) -> Result<WeierstrassSurface> {
    Ok(name.parse::<CatalogSurface>()?.surface())
}

struct Catenoid;
struct Helicoid;
struct Enneper;

impl HolomorphicData for Catenoid {
    fn gauss_map(&self, z: Complex64) -> Complex64 {
        z
    }
    fn height_density(&self, z: Complex64) -> Complex64 {
        z.inv()
    }
    fn forms(&self, z: Complex64) -> CVec3 {
        let w = z.inv();
        let w2 = w * w;
        Vector3::new(0.5 * (w2 - 1.0), Complex64::i() * 0.5 * (w2 + 1.0), w)
    }
}

impl HolomorphicData for Helicoid {
    fn gauss_map(&self, z: Complex64) -> Complex64 {
        z
    }
    fn height_density(&self, z: Complex64) -> Complex64 {
        -Complex64::i() * z.inv()
    }
    fn forms(&self, z: Complex64) -> CVec3 {
        Catenoid.forms(z).map(|c| -Complex64::i() * c)
    }
}

impl HolomorphicData for Enneper {
    fn gauss_map(&self, z: Complex64) -> Complex64 {
        z
    }
    fn height_density(&self, z: Complex64) -> Complex64 {
        z
    }
    fn forms(&self, z: Complex64) -> CVec3 {
        let z2 = z * z;
        Vector3::new(0.5 * (1.0 - z2), Complex64::i() * 0.5 * (1.0 + z2), z)
    }
}
