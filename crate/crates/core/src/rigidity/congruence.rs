use nalgebra::{Matrix3, SymmetricEigen, Vector3};

use crate::error::{Error, Result};

/// Best rigid motion `y ~ R x + t` between paired point sets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CongruenceResult {
    pub rotation: Matrix3<f64>,
    pub translation: Vector3<f64>,
    /// `rotation` has determinant -1.
    pub reflection: bool,
    pub rms_residual: f64,
    pub recovered_theta: Option<f64>,
}

impl CongruenceResult {
    pub fn apply(&self, p: &Vector3<f64>) -> Vector3<f64> {
        self.rotation * p + self.translation
    }
}

fn centroid(points: &[Vector3<f64>]) -> Vector3<f64> {
    points.iter().sum::<Vector3<f64>>() / points.len() as f64
}

// collinear or coincident: second principal moment vanishes
fn is_degenerate(spread: Matrix3<f64>) -> bool {
    let mut ev = SymmetricEigen::new(spread).eigenvalues;
    ev.as_mut_slice().sort_by(|a, b| b.total_cmp(a));
    !(ev[0] > 0.0) || ev[1] <= 1e-20 * ev[0]
}

/// Orthogonal Procrustes (Kabsch) alignment of `x` onto `y`.
///
/// Subtracts centroids, takes the SVD `U S V^T` of the cross-covariance
/// `sum (x - cx)(y - cy)^T` and sets `R = V D U^T`, where `D` flips the last
/// axis when `det(V U^T) < 0` unless reflections are allowed.
pub fn congruence_fit(x: &[Vector3<f64>], y: &[Vector3<f64>], allow_reflection: bool) -> Result<CongruenceResult> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < 4 {
        return Err(Error::TooFew {
            what: "paired points",
            min: 4,
            got: x.len(),
        });
    }
    let cx = centroid(x);
    let cy = centroid(y);

    let mut spread_x = Matrix3::zeros();
    let mut spread_y = Matrix3::zeros();
    let mut cross = Matrix3::zeros();
    for (p, q) in x.iter().zip(y) {
        let (p, q) = (p - cx, q - cy);
        spread_x += p * p.transpose();
        spread_y += q * q.transpose();
        cross += p * q.transpose();
    }
    if is_degenerate(spread_x) || is_degenerate(spread_y) {
        return Err(Error::DegeneratePointSet);
    }

    let svd = cross.svd(true, true);
    let u = svd.u.ok_or(Error::DegeneratePointSet)?;
    let v = svd.v_t.ok_or(Error::DegeneratePointSet)?.transpose();
    let mut d = Matrix3::identity();
    let det = (v * u.transpose()).determinant();
    if det < 0.0 && !allow_reflection {
        d[(2, 2)] = -1.0;
    }
    let rotation = v * d * u.transpose();
    let translation = cy - rotation * cx;
    let sq: f64 = x
        .iter()
        .zip(y)
        .map(|(p, q)| (rotation * p + translation - q).norm_squared())
        .sum();
    Ok(CongruenceResult {
        rotation,
        translation,
        reflection: rotation.determinant() < 0.0,
        rms_residual: (sq / x.len() as f64).sqrt(),
        recovered_theta: None,
    })
}
