//! SVG pictures of regions, tilings and matching graphs.
//!
//! Output is a pure function of the input: coordinates are printed with two
//! decimals and every element is emitted in a sorted order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::One;

use crate::counting::for_each_matching;
use crate::duality::{dual_graph, free_boundary_graph, quotient_graph, MatchGraph, SymmetryGroup, VertexTag};
use crate::error::{Error, Result};
use crate::lattice::{hexagon, LatticeEdge, Point, Region, RegionParams, SymmetryKind, TriCell};

/// Pixels per unit lattice spacing.
pub const SPACING: f64 = 24.0;
const MARGIN: f64 = 12.0;
const HOLE_FILL: &str = "#444";
const CELL_FILL: &str = "#f7f7f2";
const GRID_STROKE: &str = "#bbb";
/// Fill of the three lozenge orientations: vertical, rising and falling
/// shared edge.
const LOZENGE_FILL: [&str; 3] = ["#e9c46a", "#2a9d8f", "#e76f51"];

/// Graph drawn over the region.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Overlay {
    #[default]
    None,
    /// The dual graph of the region.
    Dual,
    /// The orbit graph under the group generated by the listed symmetries.
    Quotient(Vec<SymmetryKind>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Index of the tiling to draw, in enumeration order.
    pub tiling: Option<usize>,
    pub overlay: Overlay,
}

/// Cells of the hexagon a holed or cored region was cut from.
fn frame(r: &Region) -> Result<BTreeSet<TriCell>> {
    let outer = match r.params() {
        RegionParams::HoledHexagon { a, b, .. } if *a > 0 => hexagon(*a, *a, 2 * b)?,
        RegionParams::CoredHexagon { a, b, .. } => hexagon(2 * a - 1, 2 * a - 1, 2 * b)?,
        _ => return Ok(BTreeSet::new()),
    };
    Ok(outer.cells().clone())
}

struct Canvas {
    min: (f64, f64),
    height: f64,
    out: String,
}

impl Canvas {
    fn xy(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (MARGIN + (x - self.min.0) * SPACING, self.height - MARGIN - (y - self.min.1) * SPACING)
    }

    fn point(&self, p: Point) -> (f64, f64) {
        self.xy(p.to_xy())
    }

    fn polygon(&mut self, pts: &[Point], style: &str) {
        let coords: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = self.point(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(self.out, r#"<polygon points="{}" {style}/>"#, coords.join(" "));
    }

    fn line(&mut self, p: (f64, f64), q: (f64, f64), style: &str) {
        let _ = writeln!(
            self.out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"#,
            p.0, p.1, q.0, q.1
        );
    }

    fn circle(&mut self, c: (f64, f64), r: f64, style: &str) {
        let _ = writeln!(self.out, r#"<circle cx="{:.2}" cy="{:.2}" r="{r:.2}" {style}/>"#, c.0, c.1);
    }
}

/// Outline of the lozenge made of `c` and its neighbour across `e`.
fn lozenge(c: &TriCell, e: &LatticeEdge) -> [Point; 4] {
    let (p, q) = e.endpoints();
    let tip = |t: &TriCell| *t.vertices().iter().find(|&&v| v != p && v != q).expect("apex");
    let other = c.across(e).expect("edge of the cell");
    [p, tip(c), q, tip(&other)]
}

fn lozenge_kind(e: &LatticeEdge) -> usize {
    let (p, q) = e.endpoints();
    if p.i == q.i {
        0
    } else if (q.j - p.j) * (q.i - p.i) > 0 {
        1
    } else {
        2
    }
}

fn shared(c: &TriCell, d: &TriCell) -> Option<LatticeEdge> {
    c.neighbors().into_iter().find(|(n, _)| n == d).map(|(_, e)| e)
}

/// The `n`-th perfect matching of `g` in enumeration order.
fn nth_matching(g: &MatchGraph, n: usize) -> Result<Vec<usize>> {
    let mut seen = 0;
    let mut found = None;
    for_each_matching(g, |p| {
        if seen == n {
            found = Some(p.to_vec());
            return false;
        }
        seen += 1;
        true
    });
    found.ok_or_else(|| Error::Param(format!("tiling {n} requested but only {seen} exist")))
}

/// Draws `r` as an SVG document.
///
/// Holes are filled dark gray and free boundary edges are dashed. With a
/// tiling index the lozenges of that tiling are coloured by orientation.
pub fn render_svg(r: &Region, opts: &RenderOptions) -> Result<String> {
    let frame = frame(r)?;
    let holes: Vec<TriCell> = frame.difference(r.cells()).copied().collect();
    let all: Vec<&TriCell> = r.cells().iter().chain(holes.iter()).collect();
    if all.is_empty() {
        return Ok(format!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0:.2}" height="{0:.2}"></svg>"#,
            2.0 * MARGIN
        ) + "\n");
    }
    let pts: Vec<(f64, f64)> =
        all.iter().flat_map(|c| c.vertices()).map(|p| p.to_xy()).collect();
    let fold = |f: fn(f64, f64) -> f64, init: f64, k: fn(&(f64, f64)) -> f64| {
        pts.iter().map(k).fold(init, f)
    };
    let (x0, x1) = (fold(f64::min, f64::INFINITY, |p| p.0), fold(f64::max, f64::NEG_INFINITY, |p| p.0));
    let (y0, y1) = (fold(f64::min, f64::INFINITY, |p| p.1), fold(f64::max, f64::NEG_INFINITY, |p| p.1));
    let width = (x1 - x0) * SPACING + 2.0 * MARGIN;
    let height = (y1 - y0) * SPACING + 2.0 * MARGIN;
    let mut cv = Canvas { min: (x0, y0), height, out: String::new() };
    let _ = writeln!(
        cv.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );

    let _ = writeln!(cv.out, r#"<g id="cells">"#);
    for c in r.cells() {
        let style = format!(r#"fill="{CELL_FILL}" stroke="{GRID_STROKE}" stroke-width="0.50""#);
        cv.polygon(&c.vertices(), &style);
    }
    cv.out.push_str("</g>\n");

    let _ = writeln!(cv.out, r#"<g id="holes">"#);
    for c in &holes {
        cv.polygon(&c.vertices(), &format!(r#"fill="{HOLE_FILL}" stroke="{HOLE_FILL}" stroke-width="0.50""#));
    }
    cv.out.push_str("</g>\n");

    if let Some(n) = opts.tiling {
        draw_tiling(&mut cv, r, n)?;
    }

    let _ = writeln!(cv.out, r#"<g id="boundary">"#);
    for e in r.free_edges() {
        let (p, q) = e.endpoints();
        let (p, q) = (cv.point(p), cv.point(q));
        cv.line(p, q, r##"stroke="#000" stroke-width="1.50" stroke-dasharray="4 3""##);
    }
    for e in r.half_edges() {
        let (p, q) = e.endpoints();
        let (p, q) = (cv.point(p), cv.point(q));
        cv.line(p, q, r##"stroke="#c0392b" stroke-width="1.50" stroke-dasharray="1 2""##);
    }
    cv.out.push_str("</g>\n");

    match &opts.overlay {
        Overlay::None => {}
        Overlay::Dual => draw_graph(&mut cv, &dual_graph(r)),
        Overlay::Quotient(gens) => {
            let group = SymmetryGroup::generate(r, gens)?;
            draw_graph(&mut cv, &quotient_graph(&dual_graph(r), &group)?.graph);
        }
    }
    cv.out.push_str("</svg>\n");
    Ok(cv.out)
}

fn draw_tiling(cv: &mut Canvas, r: &Region, n: usize) -> Result<()> {
    let g = if r.is_closed() { dual_graph(r) } else { free_boundary_graph(r) };
    let partner = nth_matching(&g, n)?;
    let _ = writeln!(cv.out, r#"<g id="tiling">"#);
    for (v, &w) in partner.iter().enumerate() {
        if w <= v {
            continue;
        }
        let (cell, edge) = match (g.tag(v), g.tag(w)) {
            (VertexTag::Cell(c), VertexTag::Cell(d)) => {
                (*c, shared(c, d).ok_or_else(|| Error::Contract(format!("{c} and {d} are not adjacent")))?)
            }
            (VertexTag::Cell(c), VertexTag::Phantom(e)) | (VertexTag::Phantom(e), VertexTag::Cell(c)) => (*c, *e),
            _ => return Err(Error::UnsupportedAction("tilings are drawn from cell graphs".into())),
        };
        let style = format!(
            r##"fill="{}" stroke="#222" stroke-width="1.00""##,
            LOZENGE_FILL[lozenge_kind(&edge)]
        );
        cv.polygon(&lozenge(&cell, &edge), &style);
    }
    cv.out.push_str("</g>\n");
    Ok(())
}

fn draw_graph(cv: &mut Canvas, g: &MatchGraph) {
    let at = |t: &VertexTag| -> (f64, f64) {
        match t {
            VertexTag::Phantom(e) => {
                let (p, q) = e.endpoints();
                let (p, q) = (p.to_xy(), q.to_xy());
                ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0)
            }
            other => other.anchor().map(|c| c.centroid_xy()).unwrap_or((0.0, 0.0)),
        }
    };
    let pos: Vec<(f64, f64)> = g.tags().iter().map(|t| cv.xy(at(t))).collect();
    let _ = writeln!(cv.out, r#"<g id="graph">"#);
    for e in g.edges() {
        let dash = if e.weight.is_one() { "" } else { r#" stroke-dasharray="3 2""# };
        cv.line(pos[e.u], pos[e.v], &format!(r##"stroke="#1d3557" stroke-width="1.00"{dash}"##));
    }
    for (v, _) in g.loops() {
        let (x, y) = pos[*v];
        cv.circle((x, y - 5.0), 5.0, r##"fill="none" stroke="#1d3557" stroke-width="1.00""##);
    }
    for &p in &pos {
        cv.circle(p, 2.5, r##"fill="#1d3557""##);
    }
    cv.out.push_str("</g>\n");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{d_region, holed_hexagon};

    #[test]
    fn deterministic_and_marks_holes() {
        let r = holed_hexagon(4, 1, &[2]).unwrap();
        let opts = RenderOptions { tiling: Some(0), overlay: Overlay::Dual };
        let a = render_svg(&r, &opts).unwrap();
        assert_eq!(a, render_svg(&r, &opts).unwrap());
        assert!(a.starts_with("<svg"));
        assert!(a.contains(HOLE_FILL));
        assert_eq!(a.matches("<polygon").count(), r.len() + 8 + r.len() / 2);
    }

    #[test]
    fn free_edges_are_dashed() {
        let r = d_region(2, 1, -1, &[1, 2]).unwrap();
        let svg = render_svg(&r, &RenderOptions { tiling: Some(1), ..Default::default() }).unwrap();
        assert_eq!(svg.matches("stroke-dasharray=\"4 3\"").count(), r.free_edges().len());
    }

    #[test]
    fn tiling_index_out_of_range() {
        let r = hexagon(1, 1, 1).unwrap();
        assert!(render_svg(&r, &RenderOptions { tiling: Some(1), ..Default::default() }).is_ok());
        assert!(render_svg(&r, &RenderOptions { tiling: Some(2), ..Default::default() }).is_err());
    }
}
