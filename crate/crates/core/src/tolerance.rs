//! Approximate comparisons.
//!
//! Every approximate comparison in the crate goes through [`Tolerance`]. The
//! epsilon is relative: callers pass a length scale (usually the perimeter
//! or a radius) and the absolute threshold is `epsilon * scale`.

use serde::{Deserialize, Serialize};

pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub epsilon: f64,
}

impl Tolerance {
    pub const fn new(epsilon: f64) -> Self {
        Tolerance { epsilon }
    }

    /// Absolute threshold for quantities of magnitude `scale`.
    pub fn threshold(&self, scale: f64) -> f64 {
        self.epsilon * scale.abs()
    }

    pub fn approx_zero(&self, x: f64, scale: f64) -> bool {
        x.abs() <= self.threshold(scale)
    }

    pub fn approx_eq(&self, x: f64, y: f64, scale: f64) -> bool {
        self.approx_zero(x - y, scale)
    }

    /// `x` exceeds zero by more than the threshold.
    pub fn clearly_positive(&self, x: f64, scale: f64) -> bool {
        x > self.threshold(scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::new(DEFAULT_EPSILON)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_scales_with_length() {
        let tol = Tolerance::default();
        assert!(tol.approx_zero(5e-10, 1.0));
        assert!(!tol.approx_zero(5e-9, 1.0));
        assert!(tol.approx_zero(5e-9, 10.0));
        assert!(tol.approx_eq(1.0, 1.0 + 1e-12, 2.0));
        assert!(!tol.clearly_positive(1e-10, 1.0));
        assert!(tol.clearly_positive(1e-8, 1.0));
    }
}
