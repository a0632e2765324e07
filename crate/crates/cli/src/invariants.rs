use anyhow::Result;
use clap::Args;
use cmc_core::geom::{
    associate_shape_operator, frenet_integrate, geodesic_curvature_torsion, helix_endpoint_gap, HelixArc,
    ShapeOperatorSample,
};
use nalgebra::{Matrix2, Vector2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::output::num;
use crate::NumericalFailure;

const ROUNDOFF: f64 = 1e-12;
const FRENET_STEP: f64 = 1e-3;
const FRENET_AGREEMENT: f64 = 1e-7;

#[derive(Debug, Args)]
pub struct InvariantArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random samples per check.
    #[arg(long, default_value_t = 200)]
    samples: usize,
}

fn det(m: &Matrix2<f64>) -> f64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

pub fn run(a: &InvariantArgs) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut trace_defect = 0.0f64;
    let mut det_defect = 0.0f64;
    let mut norm_defect = 0.0f64;
    let mut gap_defect = 0.0f64;
    for _ in 0..a.samples {
        let sample = ShapeOperatorSample::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let theta = rng.gen_range(0.0..std::f64::consts::TAU);
        let a0 = sample.matrix();
        let at = associate_shape_operator(&sample, theta);
        let hi = Matrix2::identity() * sample.mean_curvature();
        trace_defect = trace_defect.max((at.trace() - a0.trace()).abs());
        det_defect = det_defect.max((det(&(at - hi)) - det(&(a0 - hi))).abs());

        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        let v = Vector2::new(phi.cos(), phi.sin());
        let (k, tau) = geodesic_curvature_torsion(&sample, theta, v)?;
        norm_defect = norm_defect.max((k * k + tau * tau - (at * v).norm_squared()).abs());

        let arc = HelixArc::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(0.1..6.0))?;
        let frenet = frenet_integrate(arc.k, arc.tau, arc.len, FRENET_STEP)?;
        gap_defect = gap_defect.max((helix_endpoint_gap(&arc) - frenet.position.norm()).abs());
    }
    let checks = [
        ("trace", trace_defect, ROUNDOFF),
        ("traceless_det", det_defect, ROUNDOFF),
        ("curvature_torsion_norm", norm_defect, ROUNDOFF),
        ("gap_vs_frenet", gap_defect, FRENET_AGREEMENT),
    ];
    println!("# seed {} samples {}", a.seed, a.samples);
    let mut failed = Vec::new();
    for (name, defect, bound) in checks {
        let ok = defect < bound;
        println!("{name} max_defect {} bound {} {}", num(defect), num(bound), if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(name);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(NumericalFailure(format!("invariant checks failed: {}", failed.join(", "))).into())
    }
}
