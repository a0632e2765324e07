use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::delaunay::{rigidity_gap_sweep, DelaunayShape};
use crate::quadrature::QuadratureConfig;
use crate::weierstrass::{flux_with, FluxVector, LoopSpec, WeierstrassSurface};

/// Zero threshold for flux and gap witnesses.
pub const DEFAULT_ZERO_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Rigid,
    NonRigid,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Rigid => "Rigid",
            Verdict::NonRigid => "NonRigid",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Subject {
    pub kind: String,
    pub name: String,
    pub parameters: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Obstruction {
    /// A basis loop and its flux; `flux` nonzero makes the witness.
    Flux {
        loop_index: usize,
        #[serde(rename = "loop")]
        loop_spec: LoopSpec,
        flux: [f64; 3],
        real_period: [f64; 3],
        quadrature_error: f64,
    },
    /// Endpoint gap of the neck image over the associate angles.
    GapTable {
        rows: Vec<(f64, f64)>,
        min_theta: f64,
        min_gap: f64,
    },
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub zero: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RigidityReport {
    pub subject: Subject,
    pub verdict: Verdict,
    pub obstruction: Obstruction,
    /// Associate angles at which every tested obstruction vanished.
    pub candidates: Vec<f64>,
    pub tolerances: Tolerances,
    pub diagnostic: Option<String>,
}

fn flux_obstruction(index: usize, lp: &LoopSpec, f: &FluxVector) -> Obstruction {
    Obstruction::Flux {
        loop_index: index,
        loop_spec: lp.clone(),
        flux: f.v.into(),
        real_period: f.real_part.into(),
        quadrature_error: f.quadrature_error,
    }
}

/// Flux certificate for a minimal surface.
///
/// `basis` should generate the first homology of the parameter domain.
/// Nonzero flux on some loop gives `Rigid`. All fluxes vanishing on a
/// non-flat surface with a basis that covers every puncture gives
/// `NonRigid` (the associate family exists). Anything else, including
/// quadrature failures, is `Inconclusive`.
pub fn certify_minimal(s: &WeierstrassSurface, basis: &[LoopSpec], tol: f64) -> RigidityReport {
    certify_minimal_with(s, basis, tol, &QuadratureConfig::default())
}

pub fn certify_minimal_with(
    s: &WeierstrassSurface,
    basis: &[LoopSpec],
    tol: f64,
    config: &QuadratureConfig,
) -> RigidityReport {
    let mut report = RigidityReport {
        subject: Subject {
            kind: "minimal".into(),
            name: s.name().to_owned(),
            parameters: BTreeMap::new(),
        },
        verdict: Verdict::Inconclusive,
        obstruction: Obstruction::None,
        candidates: Vec::new(),
        tolerances: Tolerances { zero: tol },
        diagnostic: None,
    };

    let mut fluxes = Vec::with_capacity(basis.len());
    for (i, lp) in basis.iter().enumerate() {
        match flux_with(s, lp, config) {
            Ok(f) => fluxes.push(f),
            Err(e) => {
                report.diagnostic = Some(format!("loop {i}: {e}"));
                return report;
            }
        }
    }

    if let Some((i, f)) = fluxes.iter().enumerate().find(|(_, f)| f.v.norm() > tol) {
        report.verdict = Verdict::Rigid;
        report.obstruction = flux_obstruction(i, &basis[i], f);
        return report;
    }
    if let Some((i, f)) = fluxes.iter().enumerate().find(|(_, f)| f.real_part.norm() > tol) {
        report.obstruction = flux_obstruction(i, &basis[i], f);
        report.diagnostic = Some(format!("loop {i} has a nonzero real period; the immersion is not single-valued"));
        return report;
    }
    if let Some((i, f)) = fluxes.iter().enumerate().max_by(|a, b| a.1.v.norm().total_cmp(&b.1.v.norm())) {
        report.obstruction = flux_obstruction(i, &basis[i], f);
    }

    let probes = [
        Complex64::new(0.37, 0.21),
        Complex64::new(-0.83, 0.55),
        Complex64::new(1.4, -0.9),
        Complex64::new(-0.2, -1.7),
    ];
    if s.is_flat(&probes) {
        report.diagnostic = Some("flat surface: every associate immersion is congruent".into());
        return report;
    }
    if !s.is_log_cover() && basis.len() < s.punctures().len() {
        report.diagnostic = Some(format!(
            "{} loop(s) cannot generate homology around {} puncture(s)",
            basis.len(),
            s.punctures().len()
        ));
        return report;
    }
    report.verdict = Verdict::NonRigid;
    report.candidates = vec![std::f64::consts::FRAC_PI_2];
    report
}

/// Endpoint-gap certificate for a Delaunay surface: `Rigid` iff the neck
/// image stays open for every grid angle. Angles where it closes are listed
/// as non-rigidity candidates and the verdict is `Inconclusive`.
pub fn certify_delaunay(shape: &DelaunayShape, n_theta: usize, tol: f64) -> RigidityReport {
    let mut report = RigidityReport {
        subject: Subject {
            kind: "delaunay".into(),
            name: shape.family().to_string(),
            parameters: BTreeMap::from([("r".to_owned(), shape.r()), ("s".to_owned(), shape.s())]),
        },
        verdict: Verdict::Inconclusive,
        obstruction: Obstruction::None,
        candidates: Vec::new(),
        tolerances: Tolerances { zero: tol },
        diagnostic: None,
    };
    let sweep = match rigidity_gap_sweep(shape, n_theta) {
        Ok(sweep) => sweep,
        Err(e) => {
            report.diagnostic = Some(e.to_string());
            return report;
        }
    };
    report.candidates = sweep.rows.iter().filter(|(_, g)| *g <= tol).map(|(t, _)| *t).collect();
    if sweep.min_gap > tol {
        report.verdict = Verdict::Rigid;
    } else {
        report.diagnostic = Some("neck image closes at the listed associate angles".into());
    }
    report.obstruction = Obstruction::GapTable {
        rows: sweep.rows,
        min_theta: sweep.min_theta,
        min_gap: sweep.min_gap,
    };
    report
}
