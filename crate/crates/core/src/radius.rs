//! Incircle radii from tangent lengths.
//!
//! Laying the tangent lengths around a circle of radius `r` closes up exactly
//! when the total angle `f(r) = sum atan(tj / r)` is a multiple of `pi`. `f`
//! decreases strictly from `n pi / 2` to `0`, so for every winding
//! `m = 1..k`, `k = floor((n - 1) / 2)`, there is exactly one radius with
//! `f(r) = m pi`. Equivalently `r^2` is a root of a degree `k` polynomial in
//! the odd elementary symmetric functions; that polynomial is kept as an
//! independent residual check.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lengths::{SideLengths, TangentLengths};
use crate::symmetric::{elementary_symmetric_of, SymmetricFunctions};
use crate::tolerance::Tolerance;

/// Relative bracket width at which bisection stops.
const BISECTION_RTOL: f64 = 1e-13;
const MAX_BISECTIONS: usize = 200;
const SECANT_STEPS: usize = 2;

/// `sigma1 x^k - sigma3 x^(k-1) + sigma5 x^(k-2) - ...`, highest degree first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusPolynomial {
    pub coefficients: Vec<f64>,
    pub degree: usize,
    pub n: usize,
}

impl RadiusPolynomial {
    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        let k = self.degree;
        self.coefficients[..k]
            .iter()
            .enumerate()
            .fold(0.0, |acc, (i, &c)| acc * x + (k - i) as f64 * c)
    }
}

pub fn radius_degree(n: usize) -> usize {
    (n - 1) / 2
}

/// Odd-index symmetric functions with alternating signs. For odd `n` the
/// last coefficient is `sigma_n`; for even `n` a factor `r` has been removed
/// and it is `sigma_(n-1)`.
pub fn radius_polynomial(sf: &SymmetricFunctions, n: usize) -> RadiusPolynomial {
    let degree = radius_degree(n);
    let coefficients = (0..=degree)
        .map(|i| {
            let c = sf.get(2 * i + 1);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    RadiusPolynomial { coefficients, degree, n }
}

/// `sum atan(tj / r)`.
pub fn angle_sum(t: &TangentLengths, r: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::NonpositiveRadius(r));
    }
    Ok(angle_sum_unchecked(t.values(), r))
}

fn angle_sum_unchecked(t: &[f64], r: f64) -> f64 {
    t.iter().map(|&tj| (tj / r).atan()).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Convex,
    Star,
}

/// One incircle radius together with its winding index and checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InscribedSolution {
    pub radius: f64,
    pub winding: usize,
    pub r_squared: f64,
    /// `radius * semiperimeter`.
    pub area: f64,
    /// Polynomial residual at `r^2`, evaluated on tangent lengths scaled to
    /// unit semiperimeter so that it is independent of units.
    pub residual: f64,
    /// `|f(radius) - winding * pi|`.
    pub angle_defect: f64,
}

impl InscribedSolution {
    pub fn shape(&self) -> Shape {
        if self.winding == 1 {
            Shape::Convex
        } else {
            Shape::Star
        }
    }
}

/// Normalized residual `|p(x)| / (sigma1 max(1, x)^k)` of the radius
/// polynomial for tangent lengths scaled by `1/s`.
fn normalized_residual(scaled: &RadiusPolynomial, scaled_x: f64) -> f64 {
    let sigma1 = scaled.coefficients[0];
    let norm = sigma1 * scaled_x.max(1.0).powi(scaled.degree as i32);
    scaled.eval(scaled_x).abs() / norm
}

/// Bracket `[lo, hi]` with `f(lo) > target > f(hi)`, starting from `start`.
fn bracket(t: &[f64], target: f64, start: f64) -> (f64, f64) {
    let g = |r: f64| angle_sum_unchecked(t, r) - target;
    let mut r = start;
    if g(r) > 0.0 {
        let mut lo = r;
        loop {
            r *= 2.0;
            if g(r) <= 0.0 {
                return (lo, r);
            }
            lo = r;
        }
    } else {
        let mut hi = r;
        loop {
            r *= 0.5;
            if g(r) > 0.0 {
                return (r, hi);
            }
            hi = r;
        }
    }
}

/// Root of `f(r) = target` by bisection followed by guarded secant steps.
/// Returns the root and the final bracket.
fn solve_winding(t: &[f64], target: f64, start: f64) -> (f64, f64, f64) {
    let g = |r: f64| angle_sum_unchecked(t, r) - target;
    let (mut lo, mut hi) = bracket(t, target, start);
    let (mut g_lo, mut g_hi) = (g(lo), g(hi));
    if g_hi == 0.0 {
        return (hi, hi, hi);
    }
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= BISECTION_RTOL * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let g_mid = g(mid);
        if g_mid == 0.0 {
            return (mid, mid, mid);
        }
        if g_mid > 0.0 {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
            g_hi = g_mid;
        }
    }
    // secant polish, kept inside the bracket
    let (mut a, mut ga, mut b, mut gb) = (lo, g_lo, hi, g_hi);
    let mut best = if g_lo.abs() < g_hi.abs() { lo } else { hi };
    let mut best_g = g_lo.abs().min(g_hi.abs());
    for _ in 0..SECANT_STEPS {
        if gb == ga {
            break;
        }
        let c = b - gb * (b - a) / (gb - ga);
        if !(c >= lo && c <= hi) {
            break;
        }
        let gc = g(c);
        if gc.abs() < best_g {
            best = c;
            best_g = gc.abs();
        }
        a = b;
        ga = gb;
        b = c;
        gb = gc;
    }
    (best, lo, hi)
}

/// One Newton step on the scaled polynomial, accepted only when it stays in
/// the bracket and lowers the residual.
fn polish(scaled: &RadiusPolynomial, s: f64, r: f64, lo: f64, hi: f64) -> f64 {
    let x = (r / s).powi(2);
    let d = scaled.derivative(x);
    if d == 0.0 || !d.is_finite() {
        return r;
    }
    let x_new = x - scaled.eval(x) / d;
    if x_new.is_nan() || x_new <= 0.0 {
        return r;
    }
    let r_new = s * x_new.sqrt();
    if r_new >= lo && r_new <= hi && scaled.eval(x_new).abs() < scaled.eval(x).abs() {
        r_new
    } else {
        r
    }
}

/// All `k` radii, ordered by winding `m = 1..k` (so strictly decreasing).
pub fn all_radii(t: &TangentLengths) -> Result<Vec<InscribedSolution>> {
    let n = t.len();
    if n < 3 {
        return Err(Error::TooFewSides(n));
    }
    let values = t.values();
    let s = t.semiperimeter();
    let scaled_values: Vec<f64> = values.iter().map(|v| v / s).collect();
    let scaled = radius_polynomial(&elementary_symmetric_of(&scaled_values), n);
    let start = s / n as f64;
    let mut out = Vec::with_capacity(radius_degree(n));
    for m in 1..=radius_degree(n) {
        let target = m as f64 * PI;
        let (root, lo, hi) = solve_winding(values, target, start);
        let radius = polish(&scaled, s, root, lo, hi);
        let x = (radius / s).powi(2);
        out.push(InscribedSolution {
            radius,
            winding: m,
            r_squared: radius * radius,
            area: radius * s,
            residual: normalized_residual(&scaled, x),
            angle_defect: (angle_sum_unchecked(values, radius) - target).abs(),
        });
    }
    Ok(out)
}

/// `r * s`.
pub fn area_from_radius(t: &TangentLengths, r: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::NonpositiveRadius(r));
    }
    Ok(r * t.semiperimeter())
}

/// `sqrt(s (s - a) (s - b) (s - c))`.
pub fn heron_area(sides: &SideLengths, tol: Tolerance) -> Result<f64> {
    if sides.len() != 3 {
        return Err(Error::NotTriangle(sides.len()));
    }
    let s = sides.semiperimeter();
    let perimeter = sides.perimeter();
    let a = sides.values();
    let violations: Vec<_> = (0..3)
        .filter(|&j| !tol.clearly_positive(s - a[j], perimeter))
        .map(|j| crate::tangents::Violation {
            // s - a_j is half the chain that starts just before a_j
            start: (j + 2) % 3 + 1,
            length: 3,
            kind: crate::tangents::ViolationKind::Positive,
            value: 2.0 * (s - a[j]),
        })
        .collect();
    if !violations.is_empty() {
        return Err(Error::Infeasible(violations));
    }
    Ok((s * (s - a[0]) * (s - a[1]) * (s - a[2])).sqrt())
}

/// Closed-form squared radii for `k <= 2`, largest first; `None` otherwise.
pub fn closed_form_radii(t: &TangentLengths) -> Option<Vec<f64>> {
    let n = t.len();
    if n < 3 {
        return None;
    }
    let sf = elementary_symmetric_of(t.values());
    let p = radius_polynomial(&sf, n);
    match p.degree {
        1 => Some(vec![-p.coefficients[1] / p.coefficients[0]]),
        2 => {
            let (a, b, c) = (p.coefficients[0], p.coefficients[1], p.coefficients[2]);
            let disc = (b * b - 4.0 * a * c).max(0.0);
            // b < 0, so -b + sqrt(disc) has no cancellation
            let q = 0.5 * (-b + disc.sqrt());
            Some(vec![q / a, c / q])
        }
        _ => None,
    }
}
