use anyhow::Result;
use clap::Args;
use cmc_core::rigidity::DEFAULT_ZERO_TOL;
use cmc_core::weierstrass::{catalog, flux_with, LoopSpec};

use crate::args::{parse_loop, parse_positive, QuadArgs};
use crate::output::{describe_loop, num, vec3};

#[derive(Debug, Args)]
pub struct FluxArgs {
    /// Catalog surface: catenoid, helicoid or enneper.
    #[arg(long)]
    surface: String,
    /// Circle as cx,cy,r.
    #[arg(long = "loop", value_parser = parse_loop)]
    loop_spec: LoopSpec,
    /// Traverse the loop clockwise.
    #[arg(long)]
    clockwise: bool,
    /// Zero threshold for flux and real period.
    #[arg(long, default_value_t = DEFAULT_ZERO_TOL, value_parser = parse_positive)]
    tol: f64,
    #[command(flatten)]
    quad: QuadArgs,
}

pub fn run(a: &FluxArgs) -> Result<()> {
    let s = catalog(&a.surface)?;
    let lp = if a.clockwise { a.loop_spec.clone().reversed() } else { a.loop_spec.clone() };
    let f = flux_with(&s, &lp, &a.quad.config())?;
    let verdict = if f.real_part.norm() > a.tol {
        "Inconclusive (real period does not vanish)"
    } else if f.v.norm() > a.tol {
        "Rigid (nonzero flux)"
    } else {
        "ZeroFlux"
    };
    println!("surface {}", s.name());
    println!("loop {}", describe_loop(&lp));
    println!("flux {}", vec3(&f.v));
    println!("real_period {}", vec3(&f.real_part));
    println!("quadrature_error {}", num(f.quadrature_error));
    println!("tol {}", num(a.tol));
    println!("verdict {verdict}");
    Ok(())
}
