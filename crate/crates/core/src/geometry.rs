//! Polygons in the plane.
//!
//! The incircle is centered at the origin and the first tangency point sits
//! on the positive x-axis. Walking counterclockwise, each vertex is the
//! previous tangency point rotated by `atan(tj / r)` and pushed out to
//! distance `sqrt(r^2 + tj^2)`; the next tangency point is the vertex rotated
//! by the same angle and pulled back onto the circle.

use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lengths::{SideLengths, TangentLengths};

/// A point of the plane, also used as the complex number `x + iy`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub const ORIGIN: PlanePoint = PlanePoint { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        PlanePoint { x, y }
    }

    pub fn polar(radius: f64, angle: f64) -> Self {
        PlanePoint::new(radius * angle.cos(), radius * angle.sin())
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sqr(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dot(self, other: PlanePoint) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: PlanePoint) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn conj(self) -> Self {
        PlanePoint::new(self.x, -self.y)
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Self {
        PlanePoint::new(-self.y, self.x)
    }

    pub fn scale(self, k: f64) -> Self {
        PlanePoint::new(self.x * k, self.y * k)
    }

    pub fn distance(self, other: PlanePoint) -> f64 {
        (self - other).norm()
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }
}

impl Add for PlanePoint {
    type Output = PlanePoint;
    fn add(self, o: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for PlanePoint {
    type Output = PlanePoint;
    fn sub(self, o: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x - o.x, self.y - o.y)
    }
}

/// Complex multiplication.
impl Mul for PlanePoint {
    type Output = PlanePoint;
    fn mul(self, o: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x * o.x - self.y * o.y, self.x * o.y + self.y * o.x)
    }
}

/// Vertices `p1..pn` and tangency points `q1..qn`; side `j` runs from `pj`
/// to `p(j+1)` and touches the circle at `q(j+1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolygonEmbedding {
    pub vertices: Vec<PlanePoint>,
    pub tangency_points: Vec<PlanePoint>,
    pub radius: f64,
    /// Winding index of the radius root, or -1 when the radius is not a root.
    pub winding: i64,
    /// Gap between the first tangency point and its recomputation after a
    /// full turn, divided by the radius.
    pub closure_defect: f64,
}

impl PolygonEmbedding {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Walk the tangent lengths around a circle of radius `r`. Any positive `r`
/// is accepted; the walk closes only at roots of the radius equation.
pub fn construct_polygon(t: &TangentLengths, r: f64) -> Result<PolygonEmbedding> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::NonpositiveRadius(r));
    }
    if let Some((index, &value)) = t
        .values()
        .iter()
        .enumerate()
        .find(|(_, v)| !(v.is_finite() && **v > 0.0))
    {
        return Err(Error::NonpositiveTangent { index: index + 1, value });
    }
    let n = t.len();
    let first = PlanePoint::new(r, 0.0);
    let mut vertices = Vec::with_capacity(n);
    let mut tangency_points = Vec::with_capacity(n);
    let mut q = first;
    for &tj in t.values() {
        let step = PlanePoint::new(r, tj);
        tangency_points.push(q);
        // p = q (r + i t) / r
        let p = (q * step).scale(1.0 / r);
        vertices.push(p);
        // q' = p r / (r - i t) = p r (r + i t) / (r^2 + t^2)
        q = (p * step).scale(r / step.norm_sqr());
    }
    Ok(PolygonEmbedding {
        vertices,
        tangency_points,
        radius: r,
        winding: -1,
        closure_defect: q.distance(first) / r,
    })
}

/// Embedding at a root, tagged with its winding index.
pub fn construct_solution(
    t: &TangentLengths,
    solution: &crate::radius::InscribedSolution,
) -> Result<PolygonEmbedding> {
    let mut e = construct_polygon(t, solution.radius)?;
    e.winding = solution.winding as i64;
    Ok(e)
}

/// Signed area `1/2 sum cross(pj, p(j+1))`, counterclockwise positive.
pub fn shoelace_area(embedding: &PolygonEmbedding) -> f64 {
    let p = &embedding.vertices;
    let n = p.len();
    0.5 * (0..n).map(|j| p[j].cross(p[(j + 1) % n])).sum::<f64>()
}

/// Edge lengths `|p(j+1) - pj|`.
pub fn reconstructed_sides(embedding: &PolygonEmbedding) -> Result<SideLengths> {
    let p = &embedding.vertices;
    let n = p.len();
    SideLengths::new((0..n).map(|j| p[(j + 1) % n].distance(p[j])).collect())
}

/// Turns of the closed vertex path around `center`, from the sum of signed
/// angles between consecutive vertices.
pub fn winding_number(vertices: &[PlanePoint], center: PlanePoint) -> i64 {
    let n = vertices.len();
    let total: f64 = (0..n)
        .map(|j| {
            let a = vertices[j] - center;
            let b = vertices[(j + 1) % n] - center;
            a.cross(b).atan2(a.dot(b))
        })
        .sum();
    (total / std::f64::consts::TAU).round() as i64
}

/// All turns between consecutive edges have the same sign and the edge
/// direction turns exactly once in total (which rules out star paths).
pub fn is_convex(vertices: &[PlanePoint]) -> bool {
    let n = vertices.len();
    let edge = |j: usize| vertices[(j + 1) % n] - vertices[j % n];
    let turns: Vec<(f64, f64)> = (0..n)
        .map(|j| (edge(j).cross(edge(j + 1)), edge(j).dot(edge(j + 1))))
        .collect();
    let same_sign = turns.iter().all(|&(c, _)| c > 0.0) || turns.iter().all(|&(c, _)| c < 0.0);
    let total: f64 = turns.iter().map(|&(c, d)| c.atan2(d)).sum();
    same_sign && (total.abs() / std::f64::consts::TAU).round() == 1.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radius::all_radii;
    use proptest::prelude::*;

    fn tl(v: &[f64]) -> TangentLengths {
        TangentLengths::new(v.to_vec()).unwrap()
    }

    fn near(p: PlanePoint, x: f64, y: f64, eps: f64) -> bool {
        (p.x - x).abs() < eps && (p.y - y).abs() < eps
    }

    #[test]
    fn triangle_walk() {
        let e = construct_polygon(&tl(&[2.0, 1.0, 3.0]), 1.0).unwrap();
        assert!(near(e.vertices[0], 1.0, 2.0, 1e-15));
        assert!(near(e.tangency_points[1], -0.6, 0.8, 1e-15));
        assert!(near(e.vertices[1], -1.4, 0.2, 1e-15));
        assert!((e.vertices[1].distance(e.vertices[0]) - 3.0).abs() < 1e-15);
        assert!(e.closure_defect < 1e-12);
        assert!((shoelace_area(&e) - 6.0).abs() < 1e-13);
        let sides = reconstructed_sides(&e).unwrap();
        for (a, b) in sides.values().iter().zip([3.0, 4.0, 5.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn unit_square() {
        let e = construct_polygon(&tl(&[1.0; 4]), 1.0).unwrap();
        let expected = [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)];
        for (p, (x, y)) in e.vertices.iter().zip(expected) {
            assert!(near(*p, x, y, 1e-15));
        }
        assert!((shoelace_area(&e) - 4.0).abs() < 1e-14);
        let sides = reconstructed_sides(&e).unwrap();
        assert!(sides.values().iter().all(|a| (a - 2.0).abs() < 1e-14));
        assert!(is_convex(&e.vertices));
    }

    #[test]
    fn pentagram() {
        let t = tl(&[0.5; 5]);
        let sol = all_radii(&t).unwrap();
        let e = construct_solution(&t, &sol[1]).unwrap();
        assert!(e.closure_defect < 1e-9);
        assert_eq!(e.winding, 2);
        assert_eq!(winding_number(&e.vertices, PlanePoint::ORIGIN), 2);
        assert!((shoelace_area(&e) - 0.1624598 * 2.5).abs() < 1e-6);
        assert!(!is_convex(&e.vertices));

        let e = construct_solution(&t, &sol[0]).unwrap();
        let sides = reconstructed_sides(&e).unwrap();
        assert!(sides.values().iter().all(|a| (a - 1.0).abs() < 1e-10));
        assert_eq!(winding_number(&e.vertices, PlanePoint::ORIGIN), 1);
    }

    #[test]
    fn off_root_does_not_close() {
        let e = construct_polygon(&tl(&[2.0, 1.0, 3.0]), 2.0).unwrap();
        assert!(e.closure_defect > 1e-3);
        assert_eq!(e.winding, -1);
    }

    #[test]
    fn rejects_bad_input() {
        let t = tl(&[2.0, 1.0, 3.0]);
        assert_eq!(construct_polygon(&t, 0.0), Err(Error::NonpositiveRadius(0.0)));
        assert!(construct_polygon(&t, f64::NAN).is_err());
    }

    fn tangents() -> impl Strategy<Value = Vec<f64>> {
        (3usize..=15).prop_flat_map(|n| prop::collection::vec(0.1f64..10.0, n))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn embeddings_at_roots(t in tangents()) {
            let t = TangentLengths::new(t).unwrap();
            let sides = t.sides().unwrap();
            let s = t.semiperimeter();
            for sol in all_radii(&t).unwrap() {
                let e = construct_solution(&t, &sol).unwrap();
                let r = sol.radius;
                prop_assert!(e.closure_defect < 1e-9);
                prop_assert_eq!(winding_number(&e.vertices, PlanePoint::ORIGIN), sol.winding as i64);
                let n = t.len();
                for j in 0..n {
                    let tj = t.values()[j];
                    let (p, q, q_next) = (e.vertices[j], e.tangency_points[j], e.tangency_points[(j + 1) % n]);
                    let scale = r.max(tj);
                    prop_assert!((q.norm() - r).abs() <= 1e-10 * r);
                    prop_assert!((p.norm_sqr() - (r * r + tj * tj)).abs() <= 1e-10 * scale * scale);
                    prop_assert!((p.distance(q) - tj).abs() <= 1e-10 * scale);
                    prop_assert!((p.distance(q_next) - tj).abs() <= 1e-10 * scale);
                }
                let area = shoelace_area(&e);
                prop_assert!((area - r * s).abs() <= 1e-9 * r * s);
                let rebuilt = reconstructed_sides(&e).unwrap();
                for (a, b) in rebuilt.values().iter().zip(sides.values()) {
                    prop_assert!((a - b).abs() <= 1e-10 * b);
                }
                if sol.winding == 1 {
                    prop_assert!(is_convex(&e.vertices));
                }
            }
        }

        #[test]
        fn off_root_radii_leave_a_gap(t in tangents()) {
            let t = TangentLengths::new(t).unwrap();
            let sol = all_radii(&t).unwrap();
            let mut probes = vec![1.5 * sol[0].radius, 4.0 * sol[0].radius];
            probes.extend(sol.windows(2).map(|w| (w[0].radius * w[1].radius).sqrt()));
            for r in probes {
                let e = construct_polygon(&t, r).unwrap();
                prop_assert!(e.closure_defect > 1e-3, "r = {}, defect {}", r, e.closure_defect);
            }
        }
    }

    #[test]
    fn defect_is_chord_of_total_turn() {
        // closure gap equals 2 |sin f(r)|
        let t = tl(&[2.0, 1.0, 3.0]);
        for r in [0.3, 0.7, 2.0, 5.0] {
            let e = construct_polygon(&t, r).unwrap();
            let f: f64 = t.values().iter().map(|tj| (tj / r).atan()).sum();
            assert!((e.closure_defect - 2.0 * f.sin().abs()).abs() < 1e-12);
        }
    }
}
