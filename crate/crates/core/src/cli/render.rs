//! SVG output. Mathematical y-up coordinates are flipped to SVG's y-down
//! when written.

use std::fmt::Write;

use crate::geometry::{PlanePoint, PolygonEmbedding};
use crate::pipeline::Solved;
use crate::radius::Shape;

const MARGIN: f64 = 0.05;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

struct Bounds {
    min: PlanePoint,
    max: PlanePoint,
}

impl Bounds {
    fn new() -> Self {
        Bounds {
            min: PlanePoint::new(f64::INFINITY, f64::INFINITY),
            max: PlanePoint::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn add(&mut self, p: PlanePoint) {
        self.min = PlanePoint::new(self.min.x.min(p.x), self.min.y.min(p.y));
        self.max = PlanePoint::new(self.max.x.max(p.x), self.max.y.max(p.y));
    }

    fn add_circle(&mut self, c: PlanePoint, r: f64) {
        self.add(PlanePoint::new(c.x - r, c.y - r));
        self.add(PlanePoint::new(c.x + r, c.y + r));
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn path(points: &[PlanePoint]) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, num(p.x), num(-p.y));
    }
    d.push('Z');
    d
}

fn circle(svg: &mut String, c: PlanePoint, r: f64, attrs: &str) {
    let _ = writeln!(
        svg,
        r#"  <circle cx="{}" cy="{}" r="{}" {attrs}/>"#,
        num(c.x),
        num(-c.y),
        num(r)
    );
}

fn polygon(svg: &mut String, e: &PolygonEmbedding, color: &str, dashed: bool, stroke: f64) {
    let dash = if dashed {
        format!(r#" stroke-dasharray="{} {}""#, num(4.0 * stroke), num(2.0 * stroke))
    } else {
        String::new()
    };
    let _ = writeln!(
        svg,
        r#"  <path d="{}" fill="none" stroke="{color}" stroke-width="{}"{dash}/>"#,
        path(&e.vertices),
        num(stroke)
    );
}

pub fn svg(solved: &Solved, chain: Option<&PolygonEmbedding>) -> String {
    let mut bounds = Bounds::new();
    for root in &solved.roots {
        bounds.add_circle(PlanePoint::ORIGIN, root.solution.radius);
        root.embedding.vertices.iter().for_each(|&p| bounds.add(p));
    }
    if let Some(q) = &solved.bicentric {
        bounds.add_circle(q.circumcenter, q.circumradius);
    }
    if let Some(e) = chain {
        e.vertices.iter().for_each(|&p| bounds.add(p));
    }
    let size = (bounds.max.x - bounds.min.x).max(bounds.max.y - bounds.min.y);
    let pad = MARGIN * size;
    let stroke = 0.004 * size;
    let dot = 0.008 * size;
    let font = 0.03 * size;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(bounds.min.x - pad),
        num(-bounds.max.y - pad),
        num(bounds.max.x - bounds.min.x + 2.0 * pad),
        num(bounds.max.y - bounds.min.y + 2.0 * pad)
    );
    if let Some(q) = &solved.bicentric {
        circle(
            &mut svg,
            q.circumcenter,
            q.circumradius,
            &format!(r##"fill="none" stroke="#7f7f7f" stroke-width="{}""##, num(stroke)),
        );
    }
    for (i, root) in solved.roots.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let star = root.solution.shape() == Shape::Star;
        circle(
            &mut svg,
            PlanePoint::ORIGIN,
            root.solution.radius,
            &format!(r#"fill="none" stroke="{color}" stroke-opacity="0.5" stroke-width="{}""#, num(stroke)),
        );
        polygon(&mut svg, &root.embedding, color, star, stroke);
        for &q in &root.embedding.tangency_points {
            circle(&mut svg, q, dot, &format!(r#"fill="{color}""#));
        }
        if star {
            let p = root.embedding.vertices[0];
            let _ = writeln!(
                svg,
                r#"  <text x="{}" y="{}" font-size="{}" fill="{color}">m={}</text>"#,
                num(p.x),
                num(-p.y),
                num(font),
                root.solution.winding
            );
        }
    }
    if let Some(e) = chain {
        polygon(&mut svg, e, "#17becf", false, stroke);
        for &q in &e.tangency_points {
            circle(&mut svg, q, dot, r##"fill="#17becf""##);
        }
    }
    svg.push_str("</svg>\n");
    svg
}
