//! Computational core for rigidity arguments about constant-mean-curvature
//! surfaces in three-space.
//!
//! - [`geom`]: shape operators of the associate family and the helices traced
//!   by geodesics under associate immersions.
//! - [`weierstrass`]: minimal immersions from holomorphic data, their
//!   associate family, periods and flux.
//! - [`delaunay`]: CMC-1 surfaces of revolution, neck image curves, the
//!   endpoint-gap sweep and nodoid closure.
//! - [`rigidity`]: rigidity certificates and congruence fitting.
//! - [`io`]: mesh and report formats.

pub mod delaunay;
pub mod error;
pub mod geom;
pub mod io;
pub mod quadrature;
pub mod rigidity;
pub mod roots;
pub mod weierstrass;

pub use error::{Error, Result};
