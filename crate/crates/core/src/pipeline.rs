//! Sides in, solved polygons out: feasibility, tangent lengths, radii and
//! embeddings in one call.

use serde::Serialize;

use crate::bicentric::{bicentric_tangents, build_bicentric, BicentricQuad};
use crate::error::{Error, Result};
use crate::geometry::{construct_solution, shoelace_area, PolygonEmbedding};
use crate::lengths::{SideLengths, TangentLengths};
use crate::radius::{all_radii, InscribedSolution};
use crate::tangents::{check_feasible, tangents_even, tangents_odd, FeasibilityReport};
use crate::tolerance::Tolerance;

/// How `t1` was fixed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "source", content = "t1", rename_all = "lowercase")]
pub enum T1Choice {
    /// Odd `n`: tangent lengths are unique.
    Unique,
    Given(f64),
    /// Even `n` without an explicit `t1`: middle of the admissible interval.
    Midpoint(f64),
    /// `n = 4` with `a1 + a3 = a2 + a4`: the cyclic member of the family.
    Bicentric(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSelection {
    All,
    Winding(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolvedRoot {
    pub solution: InscribedSolution,
    pub embedding: PolygonEmbedding,
    pub shoelace_area: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Solved {
    pub sides: SideLengths,
    pub report: FeasibilityReport,
    pub t1: T1Choice,
    pub tangents: TangentLengths,
    pub roots: Vec<SolvedRoot>,
    #[serde(skip)]
    pub bicentric: Option<BicentricQuad>,
}

/// Tangent lengths for the sides, picking `t1` when `n` is even.
pub fn choose_tangents(
    sides: &SideLengths,
    t1: Option<f64>,
    tol: Tolerance,
) -> Result<(T1Choice, TangentLengths)> {
    if sides.is_odd() {
        return Ok((T1Choice::Unique, tangents_odd(sides, tol)?));
    }
    match t1 {
        Some(t1) => Ok((T1Choice::Given(t1), tangents_even(sides, t1, tol)?)),
        None => {
            if sides.len() == 4 {
                if let Ok(t) = bicentric_tangents(sides, tol) {
                    return Ok((T1Choice::Bicentric(t.values()[0]), t));
                }
            }
            let interval = crate::tangents::feasibility_interval_even(sides, tol)?;
            let mid = interval.midpoint();
            Ok((T1Choice::Midpoint(mid), tangents_even(sides, mid, tol)?))
        }
    }
}

pub fn solve(
    sides: &SideLengths,
    t1: Option<f64>,
    selection: RootSelection,
    tol: Tolerance,
) -> Result<Solved> {
    let report = check_feasible(sides, tol);
    if !report.feasible {
        return Err(Error::Infeasible(report.violations));
    }
    let (choice, tangents) = choose_tangents(sides, t1, tol)?;
    let solutions = all_radii(&tangents)?;
    let selected: Vec<InscribedSolution> = match selection {
        RootSelection::All => solutions,
        RootSelection::Winding(m) => {
            let max = solutions.len();
            if m == 0 || m > max {
                return Err(Error::NoSuchWinding { winding: m, max });
            }
            vec![solutions[m - 1]]
        }
    };
    let roots = selected
        .into_iter()
        .map(|solution| {
            let embedding = construct_solution(&tangents, &solution)?;
            let shoelace_area = shoelace_area(&embedding);
            Ok(SolvedRoot { solution, embedding, shoelace_area })
        })
        .collect::<Result<Vec<_>>>()?;
    let bicentric = match choice {
        T1Choice::Bicentric(_) => Some(build_bicentric(sides, tol)?),
        _ => None,
    };
    Ok(Solved {
        sides: sides.clone(),
        report,
        t1: choice,
        tangents,
        roots,
        bicentric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sides(v: &[f64]) -> SideLengths {
        SideLengths::new(v.to_vec()).unwrap()
    }

    #[test]
    fn triangle() {
        let s = solve(&sides(&[3.0, 4.0, 5.0]), None, RootSelection::All, Tolerance::default())
            .unwrap();
        assert_eq!(s.t1, T1Choice::Unique);
        assert_eq!(s.roots.len(), 1);
        assert!((s.roots[0].solution.area - 6.0).abs() < 1e-13);
        assert!((s.roots[0].shoelace_area - 6.0).abs() < 1e-13);
    }

    #[test]
    fn defaults_for_even_n() {
        let tol = Tolerance::default();
        let s = solve(&sides(&[1.0, 2.0, 3.0, 2.0]), None, RootSelection::All, tol).unwrap();
        assert_eq!(s.t1, T1Choice::Bicentric(0.5));
        assert!(s.bicentric.is_some());
        let s = solve(&sides(&[1.0, 2.0, 3.0, 2.0]), Some(0.25), RootSelection::All, tol).unwrap();
        assert_eq!(s.t1, T1Choice::Given(0.25));
        let s = solve(&sides(&[1.0, 2.0, 3.0, 2.0, 1.0, 1.0]), None, RootSelection::All, tol)
            .unwrap();
        assert_eq!(s.t1, T1Choice::Midpoint(0.5));
        assert_eq!(s.roots.len(), 2);
    }

    #[test]
    fn selection_and_errors() {
        let tol = Tolerance::default();
        let s = solve(&sides(&[1.0; 5]), None, RootSelection::Winding(2), tol).unwrap();
        assert_eq!(s.roots.len(), 1);
        assert_eq!(s.roots[0].solution.winding, 2);
        assert_eq!(
            solve(&sides(&[1.0; 5]), None, RootSelection::Winding(3), tol),
            Err(Error::NoSuchWinding { winding: 3, max: 2 })
        );
        assert!(matches!(
            solve(&sides(&[1.0, 1.0, 5.0]), None, RootSelection::All, tol),
            Err(Error::Infeasible(_))
        ));
        assert!(matches!(
            solve(&sides(&[1.0, 2.0, 3.0, 2.0]), Some(1.0), RootSelection::All, tol),
            Err(Error::OutOfInterval { .. })
        ));
    }
}
