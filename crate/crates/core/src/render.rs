//! SVG drawing of planar moment graphs.
//!
//! All arithmetic up to this point is exact; coordinates are converted to
//! `f64` only here, and printed with two decimals so the output is stable.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::error::{GkmError, Result};
use crate::geometry::convex_hull;
use crate::graph::OrientedGkmGraph;
use crate::polyring::{Rational, WeightVector};

const PLOT: f64 = 420.0;
const PAD: f64 = 40.0;
const MARGIN: f64 = 110.0;
const ARROW: f64 = 9.0;
/// Where along an edge its arrowhead sits; off-centre so crossing diagonals stay legible.
const ARROW_AT: f64 = 0.6;

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

fn xy(w: &WeightVector) -> (f64, f64) {
    let c = w.components();
    (to_f64(&c[0]), to_f64(&c[1]))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    off_x: f64,
    off_y: f64,
}

impl Frame {
    fn new(points: &[(f64, f64)]) -> Self {
        let min_x = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        let max_x = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        let min_y = points.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        let max_y = points.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
        let scale = PLOT / span;
        Frame {
            min_x,
            max_y,
            scale,
            off_x: PAD + (PLOT - (max_x - min_x) * scale) / 2.0,
            off_y: PAD + (PLOT - (max_y - min_y) * scale) / 2.0,
        }
    }

    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        (
            self.off_x + (p.0 - self.min_x) * self.scale,
            self.off_y + (self.max_y - p.1) * self.scale,
        )
    }
}

fn arrowhead(tip: (f64, f64), dir: (f64, f64)) -> String {
    let len = (dir.0 * dir.0 + dir.1 * dir.1).sqrt().max(1e-9);
    let (ux, uy) = (dir.0 / len, dir.1 / len);
    let base = (tip.0 - ux * ARROW, tip.1 - uy * ARROW);
    let (nx, ny) = (-uy * ARROW * 0.5, ux * ARROW * 0.5);
    format!(
        "{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}",
        tip.0,
        tip.1,
        base.0 + nx,
        base.1 + ny,
        base.0 - nx,
        base.1 - ny
    )
}

/// Draws the moment image: shaded hull, edges with an arrowhead pointing
/// upward for `xi`, vertices labelled `id (d)`, and the
/// direction of `xi` in the right margin.
pub fn render_svg(og: &OrientedGkmGraph) -> Result<String> {
    if og.rank() != 2 {
        return Err(GkmError::ScopeError(format!(
            "drawing needs a rank-2 torus, found rank {}",
            og.rank()
        )));
    }
    let g = og.graph();
    let mus: Vec<WeightVector> = g.vertices().iter().map(|v| v.mu.clone()).collect();
    let raw: Vec<(f64, f64)> = mus.iter().map(xy).collect();
    let frame = Frame::new(&raw);
    let pts: Vec<(f64, f64)> = raw.iter().map(|&p| frame.map(p)).collect();
    let width = PAD * 2.0 + PLOT + MARGIN;
    let height = PAD * 2.0 + PLOT;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(out, r#"  <rect x="0" y="0" width="{width:.0}" height="{height:.0}" fill="white"/>"#);

    let hull = convex_hull(&mus);
    if hull.len() >= 3 {
        let poly: Vec<String> = hull.iter().map(|&i| format!("{:.2},{:.2}", pts[i].0, pts[i].1)).collect();
        let _ = writeln!(
            out,
            r##"  <polygon class="hull" points="{}" fill="#dde6f3" stroke="#9fb3cf" stroke-width="1"/>"##,
            poly.join(" ")
        );
    }

    let _ = writeln!(out, r#"  <g class="edges" stroke="black" stroke-width="1.5">"#);
    for (e, edge) in g.edges().iter().enumerate() {
        let (a, b) = (pts[edge.from], pts[edge.to]);
        let _ = writeln!(
            out,
            r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"><title>{}</title></line>"#,
            a.0,
            a.1,
            b.0,
            b.1,
            escape(&g.edge_label(e))
        );
    }
    let _ = writeln!(out, "  </g>");

    let _ = writeln!(out, r#"  <g class="arrows" fill="black">"#);
    for e in 0..g.edges().len() {
        let (i, t) = (pts[og.initial(e)], pts[og.terminal(e)]);
        let at = (i.0 + (t.0 - i.0) * ARROW_AT, i.1 + (t.1 - i.1) * ARROW_AT);
        let dir = (t.0 - i.0, t.1 - i.1);
        let len = (dir.0 * dir.0 + dir.1 * dir.1).sqrt().max(1e-9);
        let tip = (at.0 + dir.0 / len * ARROW / 2.0, at.1 + dir.1 / len * ARROW / 2.0);
        let _ = writeln!(out, r#"    <polygon points="{}"/>"#, arrowhead(tip, dir));
    }
    let _ = writeln!(out, "  </g>");

    let _ = writeln!(out, r#"  <g class="vertices" font-family="sans-serif" font-size="13">"#);
    for (v, p) in pts.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"    <circle cx="{:.2}" cy="{:.2}" r="4.5" fill="white" stroke="black" stroke-width="1.5"/>"#,
            p.0, p.1
        );
        let _ = writeln!(
            out,
            r#"    <text x="{:.2}" y="{:.2}">{} ({})</text>"#,
            p.0 + 7.0,
            p.1 - 7.0,
            escape(og.id(v)),
            og.down_degree(v)
        );
    }
    let _ = writeln!(out, "  </g>");

    let (xx, xy_) = xy(og.xi());
    let len = (xx * xx + xy_ * xy_).sqrt().max(1e-9);
    let dir = (xx / len, -xy_ / len);
    let centre = (PAD * 2.0 + PLOT + MARGIN / 2.0 - PAD / 2.0, PAD + 60.0);
    let half = 30.0;
    let tail = (centre.0 - dir.0 * half, centre.1 - dir.1 * half);
    let tip = (centre.0 + dir.0 * half, centre.1 + dir.1 * half);
    let _ = writeln!(out, r#"  <g class="xi" font-family="sans-serif" font-size="13">"#);
    let _ = writeln!(
        out,
        r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1.5"/>"#,
        tail.0, tail.1, tip.0, tip.1
    );
    let _ = writeln!(out, r#"    <polygon points="{}" fill="black"/>"#, arrowhead(tip, dir));
    let _ = writeln!(
        out,
        r#"    <text x="{:.2}" y="{:.2}" text-anchor="middle">&#958; = {}</text>"#,
        centre.0,
        centre.1 + half + 22.0,
        escape(&og.xi().to_string())
    );
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
