use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An open polygonal path in the parameter plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    vertices: Vec<Complex64>,
}

impl Polyline {
    pub fn new(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidLoop("path needs at least one vertex"));
        }
        if vertices.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::InvalidLoop("non-finite vertex"));
        }
        Ok(Self { vertices })
    }

    pub fn straight(from: Complex64, to: Complex64) -> Self {
        Self {
            vertices: vec![from, to],
        }
    }

    /// Radial segment from `r0` to `r1` along the positive real axis, then a
    /// chord approximation of the arc from `r1` to `r1 e^{i alpha}` with at
    /// most `pi/16` per chord. Stays inside the slit plane when `|alpha| < pi`.
    pub fn polar(r0: f64, r1: f64, alpha: f64) -> Self {
        let mut vertices = vec![Complex64::new(r0, 0.0), Complex64::new(r1, 0.0)];
        let chords = (alpha.abs() / (PI / 16.0)).ceil() as usize;
        for i in 1..=chords {
            vertices.push(Complex64::from_polar(r1, alpha * i as f64 / chords as f64));
        }
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn start(&self) -> Complex64 {
        self.vertices[0]
    }

    pub fn end(&self) -> Complex64 {
        *self.vertices.last().expect("polyline is never empty")
    }

    pub fn segments(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Same path with one more vertex appended.
    pub fn then(mut self, z: Complex64) -> Self {
        self.vertices.push(z);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LoopKind {
    /// Parametrized by angle, counterclockwise in its natural direction.
    Circle { center: Complex64, radius: f64 },
    /// Closed polygon, first vertex repeated at the end; natural direction is
    /// the listed order.
    Polygon(Vec<Complex64>),
}

/// A closed loop in the parameter plane.
///
/// `counterclockwise = false` traverses the loop against its natural
/// direction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LoopSpec {
    pub kind: LoopKind,
    pub counterclockwise: bool,
}

impl LoopSpec {
    pub fn circle(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidLoop("circle radius must be positive"));
        }
        Ok(Self {
            kind: LoopKind::Circle { center, radius },
            counterclockwise: true,
        })
    }

    pub fn polygon(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.len() < 4 {
            return Err(Error::InvalidLoop("polygon needs at least three distinct vertices"));
        }
        if vertices.first() != vertices.last() {
            return Err(Error::InvalidLoop("polygon must repeat its first vertex at the end"));
        }
        Polyline::new(vertices.clone())?;
        Ok(Self {
            kind: LoopKind::Polygon(vertices),
            counterclockwise: true,
        })
    }

    pub fn reversed(mut self) -> Self {
        self.counterclockwise = !self.counterclockwise;
        self
    }

    /// Smallest distance from `p` to the loop.
    pub fn distance_to(&self, p: Complex64) -> f64 {
        match &self.kind {
            LoopKind::Circle { center, radius } => ((p - center).norm() - radius).abs(),
            LoopKind::Polygon(v) => v
                .windows(2)
                .map(|w| segment_distance(p, w[0], w[1]))
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// Whether the loop meets the slit `(-inf, 0]` on the real axis.
    pub fn meets_negative_axis(&self) -> bool {
        match &self.kind {
            LoopKind::Circle { center, radius } => {
                if center.im.abs() > *radius {
                    return false;
                }
                let half = (radius * radius - center.im * center.im).sqrt();
                center.re - half <= 0.0
            }
            LoopKind::Polygon(v) => v.windows(2).any(|w| segment_meets_negative_axis(w[0], w[1])),
        }
    }
}

pub(crate) fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

pub(crate) fn segment_meets_negative_axis(a: Complex64, b: Complex64) -> bool {
    let on_slit = |z: Complex64| z.im == 0.0 && z.re <= 0.0;
    if on_slit(a) || on_slit(b) {
        return true;
    }
    if a.im == 0.0 && b.im == 0.0 {
        return a.re.min(b.re) <= 0.0;
    }
    if (a.im > 0.0) == (b.im > 0.0) || a.im == 0.0 || b.im == 0.0 {
        return false;
    }
    let t = a.im / (a.im - b.im);
    a.re + t * (b.re - a.re) <= 0.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn polygon_must_close() {
        assert!(LoopSpec::polygon(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)]).is_err());
        assert!(LoopSpec::polygon(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)]).is_ok());
    }

    #[test]
    fn distances() {
        let circle = LoopSpec::circle(c(3.0, 0.0), 0.5).unwrap();
        assert!((circle.distance_to(c(0.0, 0.0)) - 2.5).abs() < 1e-15);
        let square = LoopSpec::polygon(vec![c(-1.0, -1.0), c(1.0, -1.0), c(1.0, 1.0), c(-1.0, 1.0), c(-1.0, -1.0)]).unwrap();
        assert!((square.distance_to(c(0.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!((square.distance_to(c(3.0, 0.0)) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn slit_crossings() {
        assert!(LoopSpec::circle(c(0.0, 0.0), 1.0).unwrap().meets_negative_axis());
        assert!(!LoopSpec::circle(c(2.0, 0.0), 1.0).unwrap().meets_negative_axis());
        assert!(!LoopSpec::circle(c(-2.0, 3.0), 1.0).unwrap().meets_negative_axis());
        assert!(segment_meets_negative_axis(c(-1.0, 1.0), c(-1.0, -1.0)));
        assert!(!segment_meets_negative_axis(c(1.0, 1.0), c(1.0, -1.0)));
        assert!(!segment_meets_negative_axis(c(1.0, 0.0), c(-1.0, 1.0)));
    }

    #[test]
    fn polar_path_avoids_slit() {
        let path = Polyline::polar(1.0, 0.5, 3.0);
        assert!(path.segments().all(|(a, b)| !segment_meets_negative_axis(a, b)));
        assert!((path.end() - Complex64::from_polar(0.5, 3.0)).norm() < 1e-15);
    }
}
