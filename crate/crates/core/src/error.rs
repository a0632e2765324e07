use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("tangent direction must be a unit vector (norm = {0})")]
    NonUnitDirection(f64),
    #[error("arclength must be positive (got {0})")]
    NonPositiveLength(f64),
    #[error("integration step must be positive and no larger than the span (step = {step}, span = {span})")]
    BadStep { step: f64, span: f64 },

    #[error("unknown catalog surface `{0}`")]
    UnknownSurface(String),
    #[error("path leaves the surface domain near {0}")]
    OutsideDomain(Complex64),
    #[error("path passes within {distance:e} of the puncture at {puncture}")]
    NearPuncture { puncture: Complex64, distance: f64 },
    #[error("path crosses the branch cut along the negative real axis")]
    CrossesBranchCut,
    #[error("invalid loop: {0}")]
    InvalidLoop(&'static str),
    #[error("adaptive quadrature did not converge (error estimate {estimate:e}, tolerance {tolerance:e})")]
    QuadratureDiverged { estimate: f64, tolerance: f64 },
    #[error("Weierstrass data is singular at {0}")]
    Singular(Complex64),

    #[error("neck curvature must be positive and finite (got {0})")]
    BadNeckCurvature(f64),
    #[error("profile reached the rotation axis at arclength {0}")]
    AxisReached(f64),
    #[error("first integral drifted by {drift:e} (bound {bound:e})")]
    FirstIntegralDrift { drift: f64, bound: f64 },
    #[error("closure index must be at least 1")]
    ZeroClosureIndex,
    #[error("no sign change found for closure index {0}")]
    RootNotBracketed(u32),
    #[error("profile needs at least 2 samples")]
    DegenerateProfile,
    #[error("{what} must be at least {min} (got {got})")]
    TooFew { what: &'static str, min: usize, got: usize },

    #[error("point sets have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("point set is degenerate (collinear or coincident)")]
    DegeneratePointSet,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of a numerical procedure, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::QuadratureDiverged { .. }
                | Error::AxisReached(_)
                | Error::FirstIntegralDrift { .. }
                | Error::RootNotBracketed(_)
                | Error::Singular(_)
        )
    }
}
