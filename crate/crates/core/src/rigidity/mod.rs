//! Rigidity certificates and congruence tests.

mod certify;
mod congruence;
mod theta;

pub use certify::{
    certify_delaunay, certify_minimal, certify_minimal_with, Obstruction, RigidityReport, Subject, Tolerances, Verdict, DEFAULT_ZERO_TOL,
};
pub use congruence::{congruence_fit, CongruenceResult};
pub use theta::{recover_theta, DEFAULT_THETA_GRID};
