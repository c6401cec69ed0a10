use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::HyperbolicError;

/// An isometry of the upper half-plane as a real 2x2 matrix of determinant
/// +1 or -1, up to sign.
///
/// Determinant +1 acts by `z -> (az + b) / (cz + d)`; determinant -1 acts
/// on the conjugate, `z -> (a conj(z) + b) / (c conj(z) + d)`. With these
/// conventions composition of maps is the matrix product.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Isometry(pub [[f64; 2]; 2]);

impl Isometry {
    pub const IDENTITY: Isometry = Isometry([[1.0, 0.0], [0.0, 1.0]]);

    /// Reflection in the imaginary axis, `z -> -conj(z)`.
    pub const REFLECT: Isometry = Isometry([[-1.0, 0.0], [0.0, 1.0]]);

    /// Translation by hyperbolic distance `t` up the imaginary axis.
    pub fn translate(t: f64) -> Self {
        Isometry([[(t / 2.0).exp(), 0.0], [0.0, (-t / 2.0).exp()]])
    }

    /// Counterclockwise rotation by `angle` about `i`.
    pub fn rotate(angle: f64) -> Self {
        let (s, c) = (angle / 2.0).sin_cos();
        Isometry([[c, s], [-s, c]])
    }

    /// Glide reflection along the imaginary axis with translation length `mu`.
    pub fn glide(mu: f64) -> Self {
        Isometry([[(mu / 2.0).exp(), 0.0], [0.0, -(-mu / 2.0).exp()]])
    }

    pub fn det(&self) -> f64 {
        let m = self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn orientation_preserving(&self) -> bool {
        self.det() > 0.0
    }

    pub fn inverse(&self) -> Self {
        let [[a, b], [c, d]] = self.0;
        let det = self.det();
        Isometry([[d / det, -b / det], [-c / det, a / det]])
    }

    pub fn conjugate_by(&self, g: &Isometry) -> Self {
        *g * *self * g.inverse()
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        let [[a, b], [c, d]] = self.0;
        let w = if self.orientation_preserving() { z } else { z.conj() };
        (w * a + b) / (w * c + d)
    }

    /// Largest entry difference to `other`, allowing for the global sign.
    pub fn distance_up_to_sign(&self, other: &Isometry) -> f64 {
        let diff = |s: f64| {
            (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| (self.0[i][j] - s * other.0[i][j]).abs())
                .fold(0.0, f64::max)
        };
        diff(1.0).min(diff(-1.0))
    }

    /// Translation length of a hyperbolic element or glide reflection.
    pub fn length(&self) -> Result<f64, HyperbolicError> {
        curve_length(self)
    }
}

impl Mul for Isometry {
    type Output = Isometry;

    fn mul(self, rhs: Isometry) -> Isometry {
        let (a, b) = (self.0, rhs.0);
        let mut out = [[0.0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Isometry(out)
    }
}

/// Length of the closed geodesic represented by `g`.
///
/// `2 arccosh(|tr|/2)` for determinant +1 and `2 arcsinh(|tr|/2)` for
/// determinant -1. Elliptic elements are rejected.
pub fn curve_length(g: &Isometry) -> Result<f64, HyperbolicError> {
    let det = g.det();
    let size = g.0.iter().flatten().fold(1.0f64, |a, v| a.max(v.abs()));
    // rounding in ad - bc grows with the entries
    let tol = 1e-6 + 8.0 * f64::EPSILON * size * size;
    if !det.is_finite() || (det.abs() - 1.0).abs() > tol || tol > 0.5 {
        return Err(HyperbolicError::Numeric(format!("determinant {det} is not +-1")));
    }
    length_from_trace(g.trace(), det > 0.0)
}

/// [`curve_length`] when the orientation character is already known.
pub fn length_from_trace(trace: f64, preserving: bool) -> Result<f64, HyperbolicError> {
    let tr = trace.abs();
    if !tr.is_finite() {
        return Err(HyperbolicError::Numeric("trace is not finite".into()));
    }
    if preserving {
        // allow rounding at the parabolic boundary
        if tr < 2.0 - 1e-12 {
            return Err(HyperbolicError::Elliptic(tr));
        }
        Ok(2.0 * (tr / 2.0).max(1.0).acosh())
    } else {
        Ok(2.0 * (tr / 2.0).asinh())
    }
}

/// Hyperbolic distance in the upper half-plane.
pub fn distance(z: Complex64, w: Complex64) -> f64 {
    (1.0 + (z - w).norm_sqr() / (2.0 * z.im * w.im)).acosh()
}
