//! Shared inputs for the benchmarks.

use cmc_core::weierstrass::{associate_points, catalog};
use nalgebra::Vector3;
use num_complex::Complex64;

/// `n x n` Enneper parameters on `[-0.8, 0.8]^2`.
pub fn enneper_params(n: usize) -> Vec<Complex64> {
    let t = |i: usize| -0.8 + 1.6 * i as f64 / (n - 1) as f64;
    (0..n)
        .flat_map(|i| (0..n).map(move |j| Complex64::new(t(j), t(i))))
        .collect()
}

/// Enneper samples of `f_theta`, paired with their parameters.
pub fn enneper_target(theta: f64, n: usize) -> Vec<(Complex64, Vector3<f64>)> {
    let s = catalog("enneper").expect("catalog surface");
    let params = enneper_params(n);
    let points = associate_points(&s, theta, &params).expect("immersion");
    params.into_iter().zip(points).collect()
}
