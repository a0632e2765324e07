use std::io::{ErrorKind, Write};
use std::path::Path;

use anyhow::{Context, Result};
use cmc_core::weierstrass::{LoopKind, LoopSpec};
use nalgebra::Vector3;

/// 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn vec3(v: &Vector3<f64>) -> String {
    format!("{} {} {}", num(v.x), num(v.y), num(v.z))
}

pub fn describe_loop(lp: &LoopSpec) -> String {
    let dir = if lp.counterclockwise { "ccw" } else { "cw" };
    match &lp.kind {
        LoopKind::Circle { center, radius } => {
            format!("circle {},{},{} {dir}", num(center.re), num(center.im), num(*radius))
        }
        LoopKind::Polygon(v) => format!("polygon {} vertices {dir}", v.len()),
    }
}

/// Writes `text` to `out` atomically, or to stdout when `out` is `None`.
pub fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => cmc_core::io::write_atomic(path, text.as_bytes())
            .with_context(|| format!("writing {}", path.display())),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        },
    }
}
