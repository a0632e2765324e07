use clap::Args;
use cmc_core::quadrature::QuadratureConfig;
use cmc_core::weierstrass::LoopSpec;
use num_complex::Complex64;

/// Adaptive quadrature settings for periods and fluxes.
#[derive(Debug, Clone, Args)]
pub struct QuadArgs {
    /// Absolute quadrature tolerance per loop.
    #[arg(long, default_value_t = QuadratureConfig::default().tol, value_parser = parse_positive)]
    pub quad_tol: f64,
    /// Maximum bisection depth of the adaptive quadrature.
    #[arg(long, default_value_t = QuadratureConfig::default().max_depth)]
    pub max_depth: u32,
}

impl QuadArgs {
    pub fn config(&self) -> QuadratureConfig {
        QuadratureConfig {
            tol: self.quad_tol,
            max_depth: self.max_depth,
            ..QuadratureConfig::default()
        }
    }
}

/// Parses `cx,cy,r` into a counterclockwise circle.
pub fn parse_loop(s: &str) -> Result<LoopSpec, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [cx, cy, r] = parts.as_slice() else {
        return Err(format!("expected cx,cy,r, got {s:?}"));
    };
    let num = |t: &str| t.parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    LoopSpec::circle(Complex64::new(num(cx)?, num(cy)?), num(r)?).map_err(|e| e.to_string())
}

pub fn parse_positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{s:?}: {e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s} is not a positive number"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cmc_core::weierstrass::LoopKind;

    #[test]
    fn loops_parse() {
        let lp = parse_loop("3, 0, 0.5").unwrap();
        assert_eq!(
            lp.kind,
            LoopKind::Circle {
                center: Complex64::new(3.0, 0.0),
                radius: 0.5
            }
        );
        assert!(lp.counterclockwise);
        assert!(parse_loop("1,2").is_err());
        assert!(parse_loop("0,0,-1").is_err());
        assert!(parse_loop("a,0,1").is_err());
    }

    #[test]
    fn positive_numbers() {
        assert_eq!(parse_positive("1e-8"), Ok(1e-8));
        assert!(parse_positive("0").is_err());
        assert!(parse_positive("nan").is_err());
    }
}
