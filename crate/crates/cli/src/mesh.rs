use std::f64::consts::{PI, TAU};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use cmc_core::delaunay::{profile_period, profile_solve, revolve_to_mesh, shape_from_neck_curvature, DEFAULT_STEP};
use cmc_core::io::MeshPatch;
use cmc_core::weierstrass::{associate_mesh, catalog, ParamGrid};
use num_complex::Complex64;

use crate::args::parse_positive;
use crate::output::{emit, num};

/// Vertex budget per mesh.
const MAX_VERTICES: usize = 10_000_000;
/// Radii of the polar parameter grid for the catenoid and helicoid.
const POLAR_RADII: (f64, f64) = (0.5, 2.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeshSubject {
    Enneper,
    Catenoid,
    Helicoid,
    Delaunay,
}

#[derive(Debug, Args)]
pub struct MeshArgs {
    subject: MeshSubject,
    /// Associate angle.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    theta: f64,
    /// Grid resolution per direction (profile and angular samples for
    /// Delaunay surfaces).
    #[arg(long, default_value_t = 64)]
    res: usize,
    /// Neck curvature of the Delaunay surface.
    #[arg(long, default_value_t = 3.0, value_parser = parse_positive)]
    r: f64,
    /// Half width of the Enneper parameter square.
    #[arg(long, default_value_t = 1.0, value_parser = parse_positive)]
    extent: f64,
    /// Angular span of the catenoid/helicoid parameter grid; must be less
    /// than a full turn.
    #[arg(long, default_value_t = 1.9 * PI, value_parser = parse_positive)]
    span: f64,
    /// Write N meshes at theta = 2 pi j / N instead of one; needs --out.
    #[arg(long)]
    sweep: Option<usize>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn build(a: &MeshArgs, theta: f64) -> Result<MeshPatch> {
    match a.subject {
        MeshSubject::Enneper => {
            let s = catalog("enneper")?;
            let grid = ParamGrid::square(Complex64::new(0.0, 0.0), a.extent, a.res)?;
            Ok(associate_mesh(&s, theta, &grid)?.with_meta("extent", num(a.extent)))
        }
        MeshSubject::Catenoid | MeshSubject::Helicoid => {
            if a.span >= TAU {
                bail!(
                    "--span {} reaches a full turn; the {} patch is only defined on the slit plane",
                    a.span,
                    if a.subject == MeshSubject::Helicoid { "helicoid" } else { "catenoid" }
                );
            }
            let name = if a.subject == MeshSubject::Helicoid { "helicoid" } else { "catenoid" };
            let s = catalog(name)?;
            let grid = ParamGrid::polar(POLAR_RADII.0, POLAR_RADII.1, a.span, a.res)?;
            Ok(associate_mesh(&s, theta, &grid)?
                .with_meta("radii", format!("{} {}", num(POLAR_RADII.0), num(POLAR_RADII.1)))
                .with_meta("span", num(a.span)))
        }
        MeshSubject::Delaunay => {
            if theta != 0.0 {
                bail!("Delaunay meshes are only produced at theta = 0");
            }
            let shape = shape_from_neck_curvature(a.r)?;
            let span = profile_period(&shape, DEFAULT_STEP)?.unwrap_or(TAU * shape.neck_radius());
            let profile = profile_solve(&shape, span, DEFAULT_STEP)?;
            Ok(revolve_to_mesh(&profile.resample(a.res), a.res)?
                .with_meta("surface", "delaunay")
                .with_meta("family", shape.family())
                .with_meta("r", num(a.r))
                .with_meta("period", num(span)))
        }
    }
}

fn sweep_path(out: &Path, j: usize) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let ext = out.extension().map(|e| e.to_string_lossy().into_owned()).unwrap_or_else(|| "obj".into());
    out.with_file_name(format!("{stem}_{j:04}.{ext}"))
}

pub fn run(a: &MeshArgs) -> Result<()> {
    if a.res < 2 || a.res.saturating_mul(a.res) > MAX_VERTICES {
        bail!("--res must lie in [2, {}], got {}", (MAX_VERTICES as f64).sqrt() as usize, a.res);
    }
    let Some(n) = a.sweep else {
        let mesh = build(a, a.theta)?;
        return emit(a.out.as_deref(), &mesh.to_obj());
    };
    let out = a.out.as_deref().context("--sweep needs --out")?;
    if n == 0 {
        bail!("--sweep must be positive");
    }
    if a.subject == MeshSubject::Delaunay {
        bail!("--sweep applies to the minimal catalog surfaces only");
    }
    for j in 0..n {
        let theta = TAU * j as f64 / n as f64;
        let path = sweep_path(out, j);
        emit(Some(&path), &build(a, theta)?.to_obj())?;
        println!("{} {}", num(theta), path.display());
    }
    Ok(())
}
