//! Quadrilaterals that have both an incircle and a circumcircle.
//!
//! When `a1 + a3 = a2 + a4` the tangent lengths
//! `t1 = a1 a4 / (a1 + a3)`, `t2 = a2 a1 / (a1 + a3)`, `t3 = a3 a2 / (a1 + a3)`,
//! `t4 = a4 a3 / (a1 + a3)` satisfy `t1 t3 = t2 t4 = r^2`, which makes the
//! tangential quadrilateral cyclic as well. Its area is then
//! `sqrt(a1 a2 a3 a4)`, the Brahmagupta maximum. Starting a tangent chain
//! from any point of the circumcircle closes after four steps and yields
//! another quadrilateral on the same pair of circles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{construct_solution, PlanePoint, PolygonEmbedding};
use crate::lengths::{SideLengths, TangentLengths};
use crate::radius::all_radii;
use crate::tangents::{Violation, ViolationKind};
use crate::tolerance::Tolerance;

/// Relative (to the circumradius) closure tolerance for four chained
/// tangent steps.
pub const PONCELET_CLOSURE_RTOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Circle {
    pub center: PlanePoint,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: PlanePoint, radius: f64) -> Self {
        Circle { center, radius }
    }

    pub fn point_at(&self, angle: f64) -> PlanePoint {
        self.center + PlanePoint::polar(self.radius, angle)
    }

    /// Circle through three points, from the intersection of two
    /// perpendicular bisectors. `None` for collinear points.
    pub fn through(a: PlanePoint, b: PlanePoint, c: PlanePoint) -> Option<Circle> {
        let (u, v) = (b - a, c - a);
        let d = 2.0 * u.cross(v);
        if d == 0.0 {
            return None;
        }
        let (uu, vv) = (u.norm_sqr(), v.norm_sqr());
        let offset = PlanePoint::new(v.y * uu - u.y * vv, u.x * vv - v.x * uu).scale(1.0 / d);
        Some(Circle::new(a + offset, offset.norm()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BicentricQuad {
    pub sides: SideLengths,
    pub tangents: TangentLengths,
    pub inradius: f64,
    pub incenter: PlanePoint,
    pub circumradius: f64,
    pub circumcenter: PlanePoint,
    pub area: f64,
    pub embedding: PolygonEmbedding,
}

impl BicentricQuad {
    pub fn incircle(&self) -> Circle {
        Circle::new(self.incenter, self.inradius)
    }

    pub fn circumcircle(&self) -> Circle {
        Circle::new(self.circumcenter, self.circumradius)
    }
}

fn require_quad(sides: &SideLengths) -> Result<&[f64]> {
    if sides.len() != 4 {
        return Err(Error::NotQuad(sides.len()));
    }
    Ok(sides.values())
}

/// Tangent lengths of the cyclic member of the tangential family.
pub fn bicentric_tangents(sides: &SideLengths, tol: Tolerance) -> Result<TangentLengths> {
    let a = require_quad(sides)?;
    let (odd, even) = (a[0] + a[2], a[1] + a[3]);
    if !tol.approx_eq(odd, even, sides.perimeter()) {
        return Err(Error::EqualityViolated { odd, even });
    }
    let t = vec![
        a[0] * a[3] / odd,
        a[1] * a[0] / odd,
        a[2] * a[1] / odd,
        a[3] * a[2] / odd,
    ];
    let s = sides.semiperimeter();
    if let Some((index, &value)) = t
        .iter()
        .enumerate()
        .find(|(_, &v)| !tol.clearly_positive(v, s))
    {
        return Err(Error::NonpositiveTangent { index: index + 1, value });
    }
    TangentLengths::new(t)
}

/// Area of the cyclic quadrilateral with these sides,
/// `sqrt((s - a1)(s - a2)(s - a3)(s - a4))`.
pub fn brahmagupta_area(sides: &SideLengths, tol: Tolerance) -> Result<f64> {
    let a = require_quad(sides)?;
    let s = sides.semiperimeter();
    let perimeter = sides.perimeter();
    let violations: Vec<Violation> = (0..4)
        .filter(|&j| !tol.clearly_positive(s - a[j], perimeter))
        .map(|j| Violation {
            start: j + 1,
            length: 1,
            kind: ViolationKind::Positive,
            value: s - a[j],
        })
        .collect();
    if !violations.is_empty() {
        return Err(Error::Infeasible(violations));
    }
    Ok(a.iter().map(|aj| s - aj).product::<f64>().sqrt())
}

pub fn build_bicentric(sides: &SideLengths, tol: Tolerance) -> Result<BicentricQuad> {
    let tangents = bicentric_tangents(sides, tol)?;
    let solution = all_radii(&tangents)?[0];
    let embedding = construct_solution(&tangents, &solution)?;
    let p = &embedding.vertices;
    let circle = Circle::through(p[0], p[1], p[2]).ok_or(Error::ConcyclicityFailure {
        miss: f64::INFINITY,
        circumradius: f64::NAN,
    })?;
    let miss = (p[3].distance(circle.center) - circle.radius).abs();
    if !tol.approx_zero(miss, circle.radius) {
        return Err(Error::ConcyclicityFailure { miss, circumradius: circle.radius });
    }
    Ok(BicentricQuad {
        sides: sides.clone(),
        tangents,
        inradius: solution.radius,
        incenter: PlanePoint::ORIGIN,
        circumradius: circle.radius,
        circumcenter: circle.center,
        area: solution.area,
        embedding,
    })
}

/// Tangency point on `inner` reached counterclockwise from `point`, and the
/// second intersection of that tangent line with `outer`.
fn tangent_chord(
    inner: Circle,
    outer: Circle,
    point: PlanePoint,
    tol: Tolerance,
) -> Result<(PlanePoint, PlanePoint)> {
    let offset = point.distance(outer.center) - outer.radius;
    if !tol.approx_zero(offset, outer.radius) {
        return Err(Error::PointNotOnCircle { offset });
    }
    let u = point - inner.center;
    let d2 = u.norm_sqr();
    let r = inner.radius;
    if d2 <= r * r {
        return Err(Error::NoTangent);
    }
    // foot at angle acos(r/d) counterclockwise from u
    let along = u.scale(r * r / d2);
    let across = u.perp().scale(r * (d2 - r * r).sqrt() / d2);
    let tangency = inner.center + along + across;

    // point + lambda w on the outer circle; one root is ~0, keep the other
    let w = tangency - point;
    let h = point - outer.center;
    let a = w.norm_sqr();
    let b = w.dot(h);
    let c = h.norm_sqr() - outer.radius * outer.radius;
    let disc = (b * b - a * c).max(0.0);
    let q = -(b + b.signum() * disc.sqrt());
    let (l1, l2) = (q / a, if q != 0.0 { c / q } else { 0.0 });
    let lambda = if l1.abs() > l2.abs() { l1 } else { l2 };
    Ok((tangency, point + w.scale(lambda)))
}

/// Next vertex of the tangent chain between two nested circles.
pub fn poncelet_step(
    inner_r: f64,
    incenter: PlanePoint,
    outer_r: f64,
    outer_center: PlanePoint,
    point: PlanePoint,
    tol: Tolerance,
) -> Result<PlanePoint> {
    let inner = Circle::new(incenter, inner_r);
    let outer = Circle::new(outer_center, outer_r);
    tangent_chord(inner, outer, point, tol).map(|(_, next)| next)
}

/// The quadrilateral whose tangent chain starts on the circumcircle at
/// `start_angle` (measured at the circumcenter).
pub fn poncelet_family(
    quad: &BicentricQuad,
    start_angle: f64,
    tol: Tolerance,
) -> Result<PolygonEmbedding> {
    let inner = quad.incircle();
    let outer = quad.circumcircle();
    let start = outer.point_at(start_angle);
    let mut vertices = Vec::with_capacity(4);
    let mut feet = Vec::with_capacity(4);
    let mut p = start;
    for _ in 0..4 {
        let (foot, next) = tangent_chord(inner, outer, p, tol)?;
        vertices.push(p);
        feet.push(foot);
        p = next;
    }
    let gap = p.distance(start);
    if gap > PONCELET_CLOSURE_RTOL * outer.radius {
        return Err(Error::PonceletClosureFailure(gap));
    }
    // tangency point j precedes vertex j, so the last foot comes first
    feet.rotate_right(1);
    Ok(PolygonEmbedding {
        vertices,
        tangency_points: feet,
        radius: inner.radius,
        winding: 1,
        closure_defect: gap / inner.radius,
    })
}
