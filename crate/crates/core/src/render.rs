//! Static SVG figures: cells as unit squares, matched edges drawn at double
//! width, face-set squares shaded.
//!
//! The lattice is flipped vertically so `y` grows upwards as in the cell
//! coordinates. Output depends only on the spec, element order follows ids.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grid::{EdgeId, PolyominoGraph, SquareId};

pub const DEFAULT_SCALE: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderSpec<'g> {
    pub graph: &'g PolyominoGraph,
    pub matching: Option<Vec<EdgeId>>,
    pub faces: Option<Vec<SquareId>>,
    /// Pixels per lattice unit.
    pub scale: u32,
}

impl<'g> RenderSpec<'g> {
    pub fn new(graph: &'g PolyominoGraph) -> Self {
        Self { graph, matching: None, faces: None, scale: DEFAULT_SCALE }
    }
}

pub fn render_svg(spec: &RenderSpec<'_>) -> Result<String> {
    let g = spec.graph;
    let mut matched = vec![false; g.edge_count()];
    for &e in spec.matching.iter().flatten() {
        *matched.get_mut(e.index()).ok_or(Error::DanglingReference { what: "edge", id: e.index() })? = true;
    }
    let mut shaded = vec![false; g.square_count()];
    for &s in spec.faces.iter().flatten() {
        *shaded.get_mut(s.index()).ok_or(Error::DanglingReference { what: "square", id: s.index() })? = true;
    }

    let unit = i64::from(spec.scale.max(1));
    let margin = unit / 2;
    let width = g.width() * unit + 2 * margin;
    let height = g.height() * unit + 2 * margin;
    let px = |x: i64| margin + x * unit;
    let py = |y: i64| margin + (g.height() - y) * unit;
    let thin = (unit / 20).max(1);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r##"<g fill="#ffffff" stroke="none">"##);
    for s in g.square_ids() {
        let c = g.square(s).cell;
        let fill = if shaded[s.index()] { r##" fill="#b0b0b0""## } else { "" };
        let _ = writeln!(
            svg,
            r#"<rect x="{}" y="{}" width="{unit}" height="{unit}"{fill}/>"#,
            px(c.x),
            py(c.y + 1)
        );
    }
    svg.push_str("</g>\n");
    let _ = writeln!(svg, r##"<g stroke="#000000" stroke-linecap="square">"##);
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        let (pa, pb) = (g.point(a), g.point(b));
        let w = if matched[e.index()] { 2 * thin } else { thin };
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke-width="{w}"/>"#,
            px(pa.x),
            py(pa.y),
            px(pb.x),
            py(pb.y)
        );
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}
