//! SVG drawing of planar polytopes in the `(x2, x3)` chart of `R^3 / R·1`.
//!
//! Coordinates are converted to floating point here and nowhere else; the
//! picture is for viewing, the JSON report stays exact.

use std::fmt::Write;

use num_traits::ToPrimitive;
use tropfw_core::Rational;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders the polygon spanned by `vertices` and marks each focus.
/// Both inputs are canonical `(0, x2, x3)` triples.
pub fn render(vertices: &[Vec<Rational>], foci: &[Vec<Rational>], title: &str) -> String {
    let plane = |p: &Vec<Rational>| (to_f64(&p[1]), to_f64(&p[2]));
    let mut poly: Vec<(f64, f64)> = vertices.iter().map(plane).collect();
    let marks: Vec<(f64, f64)> = foci.iter().map(plane).collect();

    // Counter-clockwise order around the centroid turns the vertex set into a
    // simple polygon.
    let k = poly.len().max(1) as f64;
    let (cx, cy) = poly.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x / k, b + y / k));
    poly.sort_by(|p, q| {
        let ap = (p.1 - cy).atan2(p.0 - cx);
        let aq = (q.1 - cy).atan2(q.0 - cx);
        ap.total_cmp(&aq)
    });

    let all = poly.iter().chain(&marks);
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in all {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let px = |(x, y): (f64, f64)| (MARGIN + (x - x0) * scale, SIZE - MARGIN - (y - y0) * scale);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(title));
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let pts: Vec<String> = poly.iter().map(|&p| px(p)).map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
    match pts.len() {
        0 => {}
        1 => {
            let (x, y) = px(poly[0]);
            let _ = writeln!(out, r#"  <circle class="polytope" cx="{x:.3}" cy="{y:.3}" r="4" fill="steelblue"/>"#);
        }
        _ => {
            let _ = writeln!(
                out,
                r#"  <polygon class="polytope" points="{}" fill="lightsteelblue" stroke="steelblue" stroke-width="2"/>"#,
                pts.join(" ")
            );
        }
    }
    for (i, &m) in marks.iter().enumerate() {
        let (x, y) = px(m);
        let _ = writeln!(out, r#"  <circle class="focus" cx="{x:.3}" cy="{y:.3}" r="4" fill="crimson"/>"#);
        let _ = writeln!(out, r#"  <text x="{:.3}" y="{:.3}" font-size="14">v{}</text>"#, x + 6.0, y - 6.0, i + 1);
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use tropfw_core::rational::int;

    fn p(a: i64, b: i64) -> Vec<Rational> {
        vec![int(0), int(a), int(b)]
    }

    #[test]
    fn polygon_has_one_coordinate_pair_per_vertex() {
        let svg = render(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)], &[p(2, 2)], "square");
        let line = svg.lines().find(|l| l.contains("<polygon")).unwrap();
        let points = line.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
        assert_eq!(points.split(' ').count(), 4);
        assert_eq!(svg.matches("class=\"focus\"").count(), 1);
    }

    #[test]
    fn a_single_vertex_is_drawn_as_a_dot() {
        let svg = render(&[p(1, 1)], &[], "point");
        assert!(svg.contains("class=\"polytope\" cx="));
    }
}
