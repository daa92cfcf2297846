//! Text and JSON views of check and solve results.

use std::fmt::Write;

use serde::Serialize;

use crate::geometry::PlanePoint;
use crate::lengths::SideLengths;
use crate::pipeline::{Solved, T1Choice};
use crate::radius::Shape;
use crate::tangents::{FeasibilityReport, Parity};

#[derive(Debug, Serialize)]
pub struct CheckResponse<'a> {
    pub n: usize,
    pub sides: &'a [f64],
    pub feasibility: &'a FeasibilityReport,
}

impl<'a> CheckResponse<'a> {
    pub fn new(sides: &'a SideLengths, report: &'a FeasibilityReport) -> Self {
        CheckResponse { n: sides.len(), sides: sides.values(), feasibility: report }
    }
}

#[derive(Debug, Serialize)]
pub struct SolutionView {
    pub winding: usize,
    pub shape: Shape,
    pub radius: f64,
    pub area: f64,
    pub shoelace_area: f64,
    pub area_difference: f64,
    pub residual: f64,
    pub angle_defect: f64,
    pub closure_defect: f64,
    pub vertices: Vec<[f64; 2]>,
    pub tangency_points: Vec<[f64; 2]>,
}

#[derive(Debug, Serialize)]
pub struct CircleView {
    pub center: [f64; 2],
    pub radius: f64,
}

#[derive(Debug, Serialize)]
pub struct SolveResponse<'a> {
    pub n: usize,
    pub sides: &'a [f64],
    pub feasibility: &'a FeasibilityReport,
    pub t1: T1Choice,
    pub tangents: &'a [f64],
    pub semiperimeter: f64,
    pub solutions: Vec<SolutionView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circumcircle: Option<CircleView>,
}

fn xy(points: &[PlanePoint]) -> Vec<[f64; 2]> {
    points.iter().map(|p| [p.x, p.y]).collect()
}

impl<'a> SolveResponse<'a> {
    pub fn new(solved: &'a Solved) -> Self {
        let solutions = solved
            .roots
            .iter()
            .map(|root| SolutionView {
                winding: root.solution.winding,
                shape: root.solution.shape(),
                radius: root.solution.radius,
                area: root.solution.area,
                shoelace_area: root.shoelace_area,
                area_difference: root.shoelace_area - root.solution.area,
                residual: root.solution.residual,
                angle_defect: root.solution.angle_defect,
                closure_defect: root.embedding.closure_defect,
                vertices: xy(&root.embedding.vertices),
                tangency_points: xy(&root.embedding.tangency_points),
            })
            .collect();
        SolveResponse {
            n: solved.sides.len(),
            sides: solved.sides.values(),
            feasibility: &solved.report,
            t1: solved.t1,
            tangents: solved.tangents.values(),
            semiperimeter: solved.tangents.semiperimeter(),
            solutions,
            circumcircle: solved.bicentric.as_ref().map(|q| CircleView {
                center: [q.circumcenter.x, q.circumcenter.y],
                radius: q.circumradius,
            }),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("response serializes");
    s.push('\n');
    s
}

/// Shortest representation that parses back to the same value, in
/// scientific notation for very small or very large magnitudes.
pub fn num(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn list(values: &[f64]) -> String {
    values.iter().map(|&v| num(v)).collect::<Vec<_>>().join(", ")
}

fn verdict(report: &FeasibilityReport, n: usize) -> String {
    let word = if report.feasible { "feasible" } else { "infeasible" };
    format!("{word} ({} n={n})", report.parity)
}

pub fn check_text(sides: &SideLengths, report: &FeasibilityReport) -> String {
    let mut s = verdict(report, sides.len());
    s.push('\n');
    if report.parity == Parity::Even {
        if let Some(i) = &report.interval {
            let _ = writeln!(s, "alternating sum: {}", num(i.alternating_sum));
            let _ = writeln!(s, "t1 interval: ({}, {})", num(i.lo), num(i.hi));
        }
    }
    for v in &report.violations {
        let _ = writeln!(s, "violation: {v}");
    }
    s
}

pub fn solve_text(solved: &Solved) -> String {
    let mut s = verdict(&solved.report, solved.sides.len());
    s.push('\n');
    match solved.t1 {
        T1Choice::Unique => {}
        T1Choice::Given(t1) => {
            let _ = writeln!(s, "t1 = {}", num(t1));
        }
        T1Choice::Midpoint(t1) => {
            let _ = writeln!(s, "note: default t1 = {} (interval midpoint)", num(t1));
        }
        T1Choice::Bicentric(t1) => {
            let _ = writeln!(s, "note: bicentric default t1 = {}", num(t1));
        }
    }
    let _ = writeln!(s, "tangents: {}", list(solved.tangents.values()));
    let _ = writeln!(s, "semiperimeter: {}", num(solved.tangents.semiperimeter()));
    if let Some(q) = &solved.bicentric {
        let _ = writeln!(
            s,
            "circumcircle: center ({}, {}), radius {}",
            num(q.circumcenter.x),
            num(q.circumcenter.y),
            num(q.circumradius)
        );
    }
    for root in &solved.roots {
        let sol = &root.solution;
        let shape = match sol.shape() {
            Shape::Convex => "convex",
            Shape::Star => "star",
        };
        let _ = writeln!(
            s,
            "root m={} ({shape}): radius {}, area {}, shoelace {}, difference {}, residual {}",
            sol.winding,
            num(sol.radius),
            num(sol.area),
            num(root.shoelace_area),
            num(root.shoelace_area - sol.area),
            num(sol.residual)
        );
        let points: Vec<String> = root
            .embedding
            .vertices
            .iter()
            .map(|p| format!("({}, {})", num(p.x), num(p.y)))
            .collect();
        let _ = writeln!(s, "  vertices: {}", points.join(" "));
    }
    s
}
