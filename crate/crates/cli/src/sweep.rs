use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use cmc_core::delaunay::{rigidity_gap_sweep, shape_from_neck_curvature, theta_grid};
use cmc_core::weierstrass::{catalog, period_with, LoopSpec};
use num_complex::Complex64;

use crate::args::{parse_loop, parse_positive, QuadArgs};
use crate::output::{describe_loop, emit, num};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepSubject {
    Delaunay,
    Catenoid,
    Helicoid,
    Enneper,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    subject: SweepSubject,
    /// Neck curvature of the Delaunay surface.
    #[arg(long, default_value_t = 3.0, value_parser = parse_positive)]
    r: f64,
    /// Theta grid size.
    #[arg(long, default_value_t = 360)]
    n: usize,
    /// Loop cx,cy,r for minimal surfaces (default: unit circle).
    #[arg(long = "loop", value_parser = parse_loop)]
    loop_spec: Option<LoopSpec>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    quad: QuadArgs,
}

pub fn run(a: &SweepArgs) -> Result<()> {
    if a.n < 8 {
        bail!("--n must be at least 8, got {}", a.n);
    }
    let mut text = String::new();
    match a.subject {
        SweepSubject::Delaunay => {
            let shape = shape_from_neck_curvature(a.r)?;
            let sweep = rigidity_gap_sweep(&shape, a.n)?;
            writeln!(text, "# theta-sweep delaunay r={} n={} family={}", num(a.r), a.n, shape.family())?;
            writeln!(text, "# min_gap {} at theta {}", num(sweep.min_gap), num(sweep.min_theta))?;
            writeln!(text, "# theta gap")?;
            for (t, g) in &sweep.rows {
                writeln!(text, "{} {}", num(*t), num(*g))?;
            }
        }
        subject => {
            let name = match subject {
                SweepSubject::Catenoid => "catenoid",
                SweepSubject::Helicoid => "helicoid",
                _ => "enneper",
            };
            let s = catalog(name)?;
            let lp = match &a.loop_spec {
                Some(lp) => lp.clone(),
                None => LoopSpec::circle(Complex64::new(0.0, 0.0), 1.0)?,
            };
            let p = period_with(&s, &lp, &a.quad.config())?.value;
            writeln!(text, "# theta-sweep {name} loop={} n={}", describe_loop(&lp), a.n)?;
            writeln!(text, "# theta |Re(e^(i theta) period)|")?;
            for t in theta_grid(a.n) {
                let (sin, cos) = t.sin_cos();
                let v = p.map(|c| cos * c.re - sin * c.im);
                writeln!(text, "{} {}", num(t), num(v.norm()))?;
            }
        }
    }
    emit(a.out.as_deref(), &text)
}
