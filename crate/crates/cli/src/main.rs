//! `cmc`: flux, rigidity certificates, meshes and gap tables for associate
//! families of minimal and Delaunay surfaces.

mod args;
mod certify;
mod flux;
mod invariants;
mod mesh;
mod nodoid;
mod output;
mod sweep;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

/// Exit status for a computation that ran but did not converge or failed a
/// numerical check.
#[derive(Debug)]
pub struct NumericalFailure(pub String);

impl std::fmt::Display for NumericalFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for NumericalFailure {}

#[derive(Debug, Parser)]
#[command(name = "cmc", version, about = "Rigidity of associate families of minimal and CMC surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Flux and real period of a catalog surface around a circle.
    Flux(flux::FluxArgs),
    /// Rigidity certificate as a JSON report.
    Certify(certify::CertifyArgs),
    /// OBJ mesh of an associate immersion or a Delaunay surface.
    Mesh(mesh::MeshArgs),
    /// Table of endpoint gaps (Delaunay) or real periods (minimal) over theta.
    ThetaSweep(sweep::SweepArgs),
    /// Neck curvatures of the nodoids whose half-turn neck image closes.
    NodoidSolve(nodoid::NodoidArgs),
    /// Randomized check of the pointwise invariants.
    Invariants(invariants::InvariantArgs),
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.downcast_ref::<NumericalFailure>().is_some() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<cmc_core::Error>() {
            return if e.is_numerical() { 2 } else { 1 };
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match cli.command {
        Command::Flux(a) => flux::run(&a),
        Command::Certify(a) => certify::run(&a),
        Command::Mesh(a) => mesh::run(&a),
        Command::ThetaSweep(a) => sweep::run(&a),
        Command::NodoidSolve(a) => nodoid::run(&a),
        Command::Invariants(a) => invariants::run(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
