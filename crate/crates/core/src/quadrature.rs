//! Gauss-Legendre rules and an adaptive bisection driver for smooth
//! integrands along a parameter interval.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use nalgebra::Vector3;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Values that can be accumulated by the quadrature driver.
pub trait Integrand: Copy {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn scale(self, factor: f64) -> Self;
    fn magnitude(self) -> f64;
}

impl Integrand for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, factor: f64) -> Self {
        self * factor
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl Integrand for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, factor: f64) -> Self {
        self * factor
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

impl Integrand for Vector3<Complex64> {
    fn zero() -> Self {
        Vector3::from_element(Complex64::new(0.0, 0.0))
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, factor: f64) -> Self {
        self.map(|c| c * factor)
    }
    fn magnitude(self) -> f64 {
        self.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// An `n`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes are the roots of `P_n`, found by Newton iteration from the
    /// Chebyshev-like initial guesses `cos(pi (i - 1/4) / (n + 1/2))`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    let (_, d) = legendre_with_derivative(n, x);
                    dp = d;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<V: Integrand>(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> V) -> V {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = V::zero();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc = acc.add(f(mid + half * x).scale(*w));
        }
        acc.scale(half)
    }

    /// `integrate` together with the same rule applied to `|f|`.
    fn integrate_with_mass<V: Integrand>(&self, a: f64, b: f64, f: &mut impl FnMut(f64) -> V) -> (V, f64) {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = V::zero();
        let mut mass = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let v = f(mid + half * x);
            acc = acc.add(v.scale(*w));
            mass += w * v.magnitude();
        }
        (acc.scale(half), mass * half.abs())
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Refinement parameters for [`adaptive`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Absolute tolerance on the summed panel errors.
    pub tol: f64,
    pub max_depth: u32,
    pub nodes: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_depth: 20,
            nodes: 15,
        }
    }
}

/// Result of an adaptive integration together with the accumulated
/// refinement differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<V> {
    pub value: V,
    pub error: f64,
}

/// Adaptive composite Gauss-Legendre integration of `f` over `[a, b]`.
///
/// Every panel carries the sum over its two halves as its value and the
/// difference from the one-panel rule as its error. The panel with the
/// largest error is bisected until the summed error falls below
/// `config.tol`, or below the round-off level of the integral of `|f|`.
/// `initial_panels` equal panels seed the refinement; a panel that would
/// have to be split beyond `config.max_depth` is a failure.
pub fn adaptive<V: Integrand>(
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    initial_panels: usize,
    config: &QuadratureConfig,
    mut f: impl FnMut(f64) -> V,
) -> Result<Estimate<V>> {
    let width = b - a;
    let count = initial_panels.max(1);
    let mut panels = Vec::with_capacity(4 * count);
    let mut queue = BinaryHeap::with_capacity(4 * count);
    let (mut error, mut mass) = (0.0, 0.0);
    for p in 0..count {
        let lo = a + width * p as f64 / count as f64;
        let hi = if p + 1 == count { b } else { a + width * (p + 1) as f64 / count as f64 };
        let whole = rule.integrate(lo, hi, &mut f);
        let panel = Panel::split(rule, lo, hi, whole, 0, &mut f);
        error += panel.error;
        mass += panel.mass;
        queue.push(Worst(panel.error, panels.len()));
        panels.push(Some(panel));
    }

    loop {
        let floor = 64.0 * f64::EPSILON * mass;
        if error <= config.tol.max(floor) {
            break;
        }
        let Some(Worst(_, index)) = queue.pop() else { break };
        let panel = panels[index].take().expect("queued panel is live");
        if !error.is_finite() || panel.depth >= config.max_depth {
            return Err(Error::QuadratureDiverged {
                estimate: error,
                tolerance: config.tol,
            });
        }
        error -= panel.error;
        mass -= panel.mass;
        let mid = 0.5 * (panel.a + panel.b);
        for (lo, hi, whole) in [(panel.a, mid, panel.left), (mid, panel.b, panel.right)] {
            let child = Panel::split(rule, lo, hi, whole, panel.depth + 1, &mut f);
            error += child.error;
            mass += child.mass;
            queue.push(Worst(child.error, panels.len()));
            panels.push(Some(child));
        }
    }

    // sum in interval order so the result does not depend on refinement order
    let mut live: Vec<Panel<V>> = panels.into_iter().flatten().collect();
    live.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut total = Estimate {
        value: V::zero(),
        error: 0.0,
    };
    for p in &live {
        total.value = total.value.add(p.value);
        total.error += p.error;
    }
    Ok(total)
}

struct Panel<V> {
    a: f64,
    b: f64,
    left: V,
    right: V,
    value: V,
    error: f64,
    /// Integral of `|f|` over the panel.
    mass: f64,
    depth: u32,
}

impl<V: Integrand> Panel<V> {
    fn split(rule: &GaussLegendre, a: f64, b: f64, whole: V, depth: u32, f: &mut impl FnMut(f64) -> V) -> Self {
        let mid = 0.5 * (a + b);
        let (left, left_mass) = rule.integrate_with_mass(a, mid, f);
        let (right, right_mass) = rule.integrate_with_mass(mid, b, f);
        let value = left.add(right);
        let error = value.add(whole.scale(-1.0)).magnitude();
        Self {
            a,
            b,
            left,
            right,
            value,
            error: if error.is_nan() { f64::INFINITY } else { error },
            mass: left_mass + right_mass,
            depth,
        }
    }
}

/// Heap key: largest error first, earliest panel on ties.
struct Worst(f64, usize);

impl PartialEq for Worst {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Worst {}

impl PartialOrd for Worst {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Worst {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0).then(other.1.cmp(&self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_and_weights_match_known_rules() {
        let g2 = GaussLegendre::new(2);
        assert!((g2.nodes()[1] - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((g2.weights()[0] - 1.0).abs() < 1e-15);
        let g3 = GaussLegendre::new(3);
        assert_eq!(g3.nodes()[1], 0.0);
        assert!((g3.nodes()[2] - (0.6f64).sqrt()).abs() < 1e-15);
        assert!((g3.weights()[1] - 8.0 / 9.0).abs() < 1e-15);
        let g15 = GaussLegendre::new(15);
        let sum: f64 = g15.weights().iter().sum();
        assert!((sum - 2.0).abs() < 1e-14);
    }

    #[test]
    fn exact_for_polynomials_up_to_degree_2n_minus_1() {
        let rule = GaussLegendre::new(7);
        let v = rule.integrate(0.0, 2.0, |x: f64| x.powi(13));
        assert!((v - 2f64.powi(14) / 14.0).abs() < 1e-9);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        let rule = GaussLegendre::new(15);
        let cfg = QuadratureConfig::default();
        // int_{-1}^{1} dx / (x^2 + eps^2) = 2 atan(1/eps) / eps
        let eps = 1e-3;
        let est = adaptive(&rule, -1.0, 1.0, 1, &cfg, |x: f64| 1.0 / (x * x + eps * eps)).unwrap();
        let exact = 2.0 * (1.0 / eps).atan() / eps;
        assert!((est.value - exact).abs() < 1e-9 * exact, "{} vs {exact}", est.value);
    }

    #[test]
    fn adaptive_reports_divergence() {
        let rule = GaussLegendre::new(5);
        let cfg = QuadratureConfig {
            max_depth: 3,
            ..Default::default()
        };
        let res = adaptive(&rule, 0.0, 1.0, 1, &cfg, |x: f64| 1.0 / x.sqrt());
        assert!(matches!(res, Err(Error::QuadratureDiverged { .. })));
    }

    #[test]
    fn cancelling_integrand_meets_the_rounding_floor() {
        // large odd integrand: the sum cancels to round-off, which must not
        // count as a refinement failure
        let rule = GaussLegendre::new(15);
        let cfg = QuadratureConfig {
            tol: 1e-20,
            ..Default::default()
        };
        let est = adaptive(&rule, -1.0, 1.0, 1, &cfg, |x: f64| 1e4 * x.sin() / (x * x + 1e-2)).unwrap();
        assert!(est.value.abs() < 1e-9);
    }

    #[test]
    fn complex_contour_residue() {
        // int over the unit circle of dz / z = 2 pi i
        let rule = GaussLegendre::new(15);
        let cfg = QuadratureConfig::default();
        let est = adaptive(&rule, 0.0, 2.0 * PI, 4, &cfg, |t: f64| {
            let z = Complex64::from_polar(1.0, t);
            Complex64::i() * z / z
        })
        .unwrap();
        assert!((est.value - Complex64::new(0.0, 2.0 * PI)).norm() < 1e-13);
    }
}
