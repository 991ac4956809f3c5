//! SVG rendering of a 2-layer drawing.

use std::fmt::Write as _;

use bisplit_core::{BipartiteGraph, Drawing, VertexId};

/// Horizontal distance between consecutive positions, and between layers.
pub const UNIT: i64 = 60;
pub const MARGIN: i64 = 40;

/// Pixel coordinates of the position `x` on the top (`true`) or bottom layer.
/// The top layer is one unit above the bottom layer.
pub fn point(x: usize, top: bool) -> (i64, i64) {
    let px = MARGIN + x as i64 * UNIT;
    let py = if top { MARGIN } else { MARGIN + 2 * UNIT };
    (px, py)
}

fn colour(group: VertexId) -> String {
    let hue = (group.0 as u64 * 137) % 360;
    format!("hsl({hue},70%,45%)")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders `d` with straight edges. Vertices with the same `group` (the copies
/// of one split vertex) share a colour.
pub fn render_svg(g: &BipartiteGraph, d: &Drawing, group: impl Fn(VertexId) -> VertexId) -> String {
    let width = d.top_order.len().max(d.bottom_order.len()).max(1) as i64;
    let (w, h) = (2 * MARGIN + (width - 1) * UNIT, 2 * MARGIN + 2 * UNIT);
    let mut pos = vec![(0i64, 0i64); g.id_bound()];
    for (i, &v) in d.top_order.iter().enumerate() {
        pos[v.index()] = point(i, true);
    }
    for (i, &v) in d.bottom_order.iter().enumerate() {
        pos[v.index()] = point(i, false);
    }

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    let mut edges: Vec<_> = g.edges().collect();
    edges.sort_unstable();
    for (t, b) in edges {
        let ((x1, y1), (x2, y2)) = (pos[t.index()], pos[b.index()]);
        writeln!(
            out,
            r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="2"/>"#
        )
        .unwrap();
    }
    for &v in d.top_order.iter().chain(&d.bottom_order) {
        let (x, y) = pos[v.index()];
        let fill = colour(group(v));
        let label = escape(g.label(v).unwrap_or(""));
        let ty = if y == MARGIN { y - 14 } else { y + 24 };
        writeln!(out, r#"<circle cx="{x}" cy="{y}" r="8" fill="{fill}"/>"#).unwrap();
        writeln!(
            out,
            r#"<text x="{x}" y="{ty}" font-family="sans-serif" font-size="12" text-anchor="middle">{label}</text>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
