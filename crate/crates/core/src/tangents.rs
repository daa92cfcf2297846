//! From side lengths to tangent lengths.
//!
//! With `aj = tj + t(j+1)` cyclically, odd `n` has a unique solution given by
//! alternating sums. Even `n` requires the full alternating sum to vanish and
//! then leaves a one-parameter family indexed by `t1`, restricted to an open
//! interval found by a single left-to-right sweep.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lengths::{SideLengths, TangentLengths};
use crate::tolerance::Tolerance;

/// Admissible open interval for `t1` when `n` is even.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeasibilityInterval {
    pub lo: f64,
    pub hi: f64,
    /// `a1 - a2 + a3 - ... - an`.
    pub alternating_sum: f64,
}

impl FeasibilityInterval {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// The chain must sum to a positive value.
    Positive,
    /// The full-length chain (even `n`) must sum to zero.
    Zero,
}

/// A failed alternating-sum condition `a_start - a_(start+1) + ...` over
/// `length` consecutive sides (1-based, cyclic).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Violation {
    pub start: usize,
    pub length: usize,
    pub kind: ViolationKind,
    pub value: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let requirement = match self.kind {
            ViolationKind::Positive => "> 0",
            ViolationKind::Zero => "= 0",
        };
        write!(
            f,
            "alternating sum of {} sides from a{} is {}, must be {}",
            self.length, self.start, self.value, requirement
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub parity: Parity,
    pub violations: Vec<Violation>,
    /// Present for even `n` only.
    pub interval: Option<FeasibilityInterval>,
}

/// Alternating sums of length `n` starting at every side, for odd `n`.
///
/// With the alternating prefix `P_i = sum_{j<i} (-1)^j a_j`, the chain
/// starting at `i` is `(-1)^i (P_n - 2 P_i)`.
fn odd_chain_sums(a: &[f64]) -> Vec<f64> {
    let mut prefix = Vec::with_capacity(a.len() + 1);
    let mut acc = 0.0;
    prefix.push(acc);
    for (j, &v) in a.iter().enumerate() {
        acc += if j % 2 == 0 { v } else { -v };
        prefix.push(acc);
    }
    let total = acc;
    (0..a.len())
        .map(|i| {
            let chain = total - 2.0 * prefix[i];
            if i % 2 == 0 {
                chain
            } else {
                -chain
            }
        })
        .collect()
}

fn odd_violations(sides: &SideLengths, sums: &[f64], tol: Tolerance) -> Vec<Violation> {
    let perimeter = sides.perimeter();
    sums.iter()
        .enumerate()
        .filter(|(_, &v)| !tol.clearly_positive(v, perimeter))
        .map(|(i, &value)| Violation {
            start: i + 1,
            length: sides.len(),
            kind: ViolationKind::Positive,
            value,
        })
        .collect()
}

/// Unique tangent lengths for odd `n`.
pub fn tangents_odd(sides: &SideLengths, tol: Tolerance) -> Result<TangentLengths> {
    if !sides.is_odd() {
        return Err(Error::NotOdd(sides.len()));
    }
    let sums = odd_chain_sums(sides.values());
    let violations = odd_violations(sides, &sums, tol);
    if !violations.is_empty() {
        return Err(Error::Infeasible(violations));
    }
    TangentLengths::new(sums.into_iter().map(|v| 0.5 * v).collect())
}

/// Raw result of the sweep, with the positions that produced each bound.
#[derive(Debug, Clone, Copy)]
struct Sweep {
    interval: FeasibilityInterval,
    /// Number of sides in the prefix that set `lo` (even, 0 for the initial bound).
    lo_at: usize,
    /// Number of sides in the prefix that set `hi` (odd).
    hi_at: usize,
}

fn sweep(a: &[f64]) -> Sweep {
    let (mut lo, mut hi) = (0.0, a[0]);
    let (mut lo_at, mut hi_at) = (0, 1);
    let mut v = 0.0;
    for (j, &side) in a.iter().enumerate() {
        if j % 2 == 0 {
            v += side;
            if v < hi {
                hi = v;
                hi_at = j + 1;
            }
        } else {
            v -= side;
            if v > lo {
                lo = v;
                lo_at = j + 1;
            }
        }
    }
    Sweep {
        interval: FeasibilityInterval { lo, hi, alternating_sum: v },
        lo_at,
        hi_at,
    }
}

/// The chain witnessing `hi - lo <= 0`: it starts right after the prefix that
/// set `lo` and ends at the prefix that set `hi`, wrapping if needed.
fn empty_interval_violation(n: usize, sweep: &Sweep) -> Violation {
    let lo_at = sweep.lo_at % n;
    Violation {
        start: lo_at + 1,
        length: (sweep.hi_at + n - lo_at) % n,
        kind: ViolationKind::Positive,
        value: sweep.interval.hi - sweep.interval.lo,
    }
}

/// Open interval of admissible `t1` for even `n`.
pub fn feasibility_interval_even(
    sides: &SideLengths,
    tol: Tolerance,
) -> Result<FeasibilityInterval> {
    if sides.is_odd() {
        return Err(Error::NotEven(sides.len()));
    }
    let perimeter = sides.perimeter();
    let interval = sweep(sides.values()).interval;
    if !tol.approx_zero(interval.alternating_sum, perimeter) {
        return Err(Error::AlternatingSumNonzero(interval.alternating_sum));
    }
    if !tol.clearly_positive(interval.hi - interval.lo, perimeter) {
        return Err(Error::EmptyInterval { lo: interval.lo, hi: interval.hi });
    }
    Ok(interval)
}

/// Tangent lengths for even `n` with a chosen `t1`, by forward substitution
/// `t(j+1) = aj - tj`.
pub fn tangents_even(sides: &SideLengths, t1: f64, tol: Tolerance) -> Result<TangentLengths> {
    let interval = feasibility_interval_even(sides, tol)?;
    let margin = tol.threshold(sides.perimeter());
    if !(t1 > interval.lo + margin && t1 < interval.hi - margin) {
        return Err(Error::OutOfInterval { t1, lo: interval.lo, hi: interval.hi });
    }
    let a = sides.values();
    let mut t = Vec::with_capacity(a.len());
    t.push(t1);
    for &side in &a[..a.len() - 1] {
        let prev = *t.last().unwrap();
        t.push(side - prev);
    }
    TangentLengths::new(t)
}

/// Full feasibility verdict. Infeasibility is reported as data.
pub fn check_feasible(sides: &SideLengths, tol: Tolerance) -> FeasibilityReport {
    if sides.is_odd() {
        let sums = odd_chain_sums(sides.values());
        let violations = odd_violations(sides, &sums, tol);
        return FeasibilityReport {
            feasible: violations.is_empty(),
            parity: Parity::Odd,
            violations,
            interval: None,
        };
    }
    let n = sides.len();
    let perimeter = sides.perimeter();
    let sweep = sweep(sides.values());
    let mut violations = Vec::new();
    if !tol.approx_zero(sweep.interval.alternating_sum, perimeter) {
        violations.push(Violation {
            start: 1,
            length: n,
            kind: ViolationKind::Zero,
            value: sweep.interval.alternating_sum,
        });
    }
    if !tol.clearly_positive(sweep.interval.width(), perimeter) {
        violations.push(empty_interval_violation(n, &sweep));
    }
    FeasibilityReport {
        feasible: violations.is_empty(),
        parity: Parity::Even,
        violations,
        interval: Some(sweep.interval),
    }
}
