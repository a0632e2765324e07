use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, Subcommand};
use cmc_core::delaunay::shape_from_neck_curvature;
use cmc_core::io::{ReportBody, ReportDocument};
use cmc_core::rigidity::{certify_delaunay, certify_minimal_with, RigidityReport, DEFAULT_ZERO_TOL};
use cmc_core::weierstrass::{catalog, flux_with, LoopSpec, WeierstrassSurface};

use crate::args::{parse_loop, parse_positive, QuadArgs};
use crate::NumericalFailure;
use crate::output::{describe_loop, emit, num};

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(subcommand)]
    subject: CertifySubject,
    /// Report path; the JSON document goes to stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Zero threshold for flux and gap witnesses.
    #[arg(long, global = true, default_value_t = DEFAULT_ZERO_TOL, value_parser = parse_positive)]
    tol: f64,
}

#[derive(Debug, Subcommand)]
enum CertifySubject {
    /// Catalog minimal surface, by flux over a loop basis.
    Minimal {
        name: String,
        /// Basis loop cx,cy,r (repeatable). Defaults to a unit circle about
        /// each puncture, or no loops on simply-connected domains.
        #[arg(long = "loop", value_parser = parse_loop)]
        loops: Vec<LoopSpec>,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Delaunay surface with neck curvature r (H = 1), by endpoint gaps.
    Delaunay {
        #[arg(value_parser = parse_positive)]
        r: f64,
        /// Theta grid size.
        #[arg(long, default_value_t = 4096)]
        n: usize,
    },
}

fn default_basis(s: &WeierstrassSurface) -> Result<Vec<LoopSpec>> {
    if s.is_simply_connected() {
        return Ok(Vec::new());
    }
    Ok(s.punctures()
        .iter()
        .map(|&p| LoopSpec::circle(p, 1.0))
        .collect::<cmc_core::Result<_>>()?)
}

pub fn run(a: &CertifyArgs) -> Result<()> {
    let mut failure = None;
    let mut inputs = BTreeMap::from([("tol".to_owned(), num(a.tol))]);
    let report: RigidityReport = match &a.subject {
        CertifySubject::Minimal { name, loops, quad } => {
            let s = catalog(name)?;
            let basis = if loops.is_empty() { default_basis(&s)? } else { loops.clone() };
            inputs.insert("subject".into(), "minimal".into());
            inputs.insert("name".into(), s.name().to_owned());
            let described: Vec<String> = basis.iter().map(describe_loop).collect();
            inputs.insert("basis".into(), described.join("; "));
            let config = quad.config();
            inputs.insert("quad_tol".into(), num(config.tol));
            inputs.insert("max_depth".into(), config.max_depth.to_string());
            // the certifier folds errors into its diagnostic; keep the first
            // numerical one for the exit status
            failure = basis
                .iter()
                .find_map(|lp| flux_with(&s, lp, &config).err())
                .filter(cmc_core::Error::is_numerical)
                .map(|e| NumericalFailure(e.to_string()));
            certify_minimal_with(&s, &basis, a.tol, &config)
        }
        CertifySubject::Delaunay { r, n } => {
            let shape = shape_from_neck_curvature(*r)?;
            inputs.insert("subject".into(), "delaunay".into());
            inputs.insert("r".into(), num(*r));
            inputs.insert("n".into(), n.to_string());
            if *n < 8 {
                anyhow::bail!("--n must be at least 8, got {n}");
            }
            certify_delaunay(&shape, *n, a.tol)
        }
    };
    let verdict = report.verdict;
    let doc = ReportDocument::new(env!("CARGO_PKG_VERSION"), inputs, ReportBody::Rigidity(report));
    let text = doc.to_json()?;
    match &a.out {
        Some(path) => {
            emit(Some(path), &text)?;
            println!("verdict {verdict}");
            println!("report {}", path.display());
        }
        None => emit(None, &text)?,
    }
    match failure {
        Some(f) => Err(f.into()),
        None => Ok(()),
    }
}
