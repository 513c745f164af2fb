use std::collections::BTreeSet;

use num_rational::BigRational;

use super::graph::{dual_graph, MatchGraph, VertexTag};
use super::quotient::{quotient_graph, remove_loop_vertex};
use super::symmetry::SymmetryGroup;
use crate::error::{Error, Result};
use crate::formulas::hole_lists;
use crate::lattice::{rbar_region, LatticeEdge, Region, RegionParams, SymmetryKind, TriCell};

/// Half of the half-turn orbit graph of a doubly symmetric region.
///
/// The perfect matching count of the full region equals
/// `2^multiplier_log2 * loop_weight * MGF(subgraph)`.
#[derive(Clone, Debug)]
pub struct FactorSplit {
    pub subgraph: MatchGraph,
    pub multiplier_log2: u32,
    pub loop_weight: BigRational,
    /// Representative cell of every subgraph vertex, in vertex order.
    pub cells: Vec<TriCell>,
    /// Lattice edges of the axis pairs, whose lozenges weigh 1/2.
    pub half_edges: BTreeSet<LatticeEdge>,
    source: RegionParams,
}

impl FactorSplit {
    /// The region dual to the subgraph, as a member of the zig-zag family.
    ///
    /// Only holed hexagons whose first hole is not at the boundary, and whose
    /// last hole is not at the centre of an even hexagon, map cell-for-cell
    /// onto that family.
    pub fn dual_region(&self) -> Result<Region> {
        let RegionParams::HoledHexagon { a, b, ks } = &self.source else {
            return Err(Error::UnsupportedAction(format!(
                "no zig-zag form for {}",
                self.source.family()
            )));
        };
        if ks.first() == Some(&1) {
            return Err(Error::Param("first hole touches the boundary; reduce it first".into()));
        }
        let half = a / 2;
        if a % 2 == 0 && ks.last() == Some(&half) {
            return Err(Error::UnsupportedAction(
                "innermost hole at the centre has no zig-zag form".into(),
            ));
        }
        let lists = hole_lists(half, ks)?;
        let l = if a % 2 == 0 { lists.l } else { lists.q.clone() };
        let expected = rbar_region(&l, &lists.q, *b)?;
        let cells: BTreeSet<TriCell> = self.cells.iter().copied().collect();
        if &cells != expected.cells() || &self.half_edges != expected.half_edges() {
            return Err(Error::Contract(format!(
                "split of {} is not the zig-zag region for l={l:?} q={:?}",
                self.source.family(),
                lists.q
            )));
        }
        Ok(expected)
    }
}

fn shared_edge(c: &TriCell, d: &TriCell) -> Option<LatticeEdge> {
    c.neighbors().into_iter().find(|(n, _)| n == d).map(|(_, e)| e)
}

/// Splits the half-turn orbit graph of a region fixed by the half turn and
/// the vertical reflection along its horizontal axis.
///
/// Each orbit is represented by its member above the horizontal axis, or on
/// the axis left of the vertical axis. A loop, if present, is removed with
/// its vertex. Orbit edges whose representatives are not adjacent in the
/// lattice wrap around the centre and are deleted; the edges inside axis
/// pairs get weight 1/2, one factor of 2 each.
pub fn factorization_split(r: &Region) -> Result<FactorSplit> {
    if !r.is_fixed_by(SymmetryKind::ReflV) {
        return Err(Error::SymmetryAbsent("reflv".into()));
    }
    let group = SymmetryGroup::generate(r, &[SymmetryKind::Rot180])?;
    let (ci, cj) = r.center2().expect("symmetric regions have a centre");
    if ci % 2 != 0 || cj % 2 != 0 {
        return Err(Error::UnsupportedAction("centre is off the lattice axes".into()));
    }
    let (col, row) = ((ci / 2) as i32, (cj / 2) as i32);
    let quotient = quotient_graph(&dual_graph(r), &group)?.graph;
    let (q, loop_weight) = if quotient.loops().is_empty() {
        (quotient, BigRational::from_integer(1.into()))
    } else {
        remove_loop_vertex(&quotient)?
    };

    let in_half = |c: &TriCell| c.v > row || (c.v == row && c.u < col);
    let mut cells = Vec::with_capacity(q.vertex_count());
    for tag in q.tags() {
        let VertexTag::Orbit(members) = tag else { unreachable!("orbit graph tags") };
        let reps: Vec<TriCell> = members.iter().copied().filter(in_half).collect();
        if reps.len() != 1 {
            return Err(Error::Contract(format!("orbit {members:?} has {} representatives", reps.len())));
        }
        cells.push(reps[0]);
    }

    let mut drop = vec![false; q.edge_count()];
    let mut halves = Vec::new();
    let mut half_edges = BTreeSet::new();
    let mut twists = vec![0u32; q.vertex_count()];
    for (k, e) in q.edges().iter().enumerate() {
        let (cu, cv) = (cells[e.u], cells[e.v]);
        match shared_edge(&cu, &cv) {
            None => {
                drop[k] = true;
                twists[e.u] += 1;
                twists[e.v] += 1;
            }
            Some(le) if cu.v == row && cv.v == row => {
                halves.push(k);
                half_edges.insert(le);
            }
            Some(_) => {}
        }
    }
    // every axis representative loses exactly one edge, to a cell right of the axis
    for (x, c) in cells.iter().enumerate() {
        let wrong = if c.v == row { twists[x] != 1 } else { c.u < col && twists[x] != 0 };
        if wrong {
            return Err(Error::Contract(format!("{c} meets {} wrapped edges", twists[x])));
        }
    }
    let mut sub = q.without_edges(&drop);
    let half = BigRational::new(1.into(), 2.into());
    let mut map = vec![0; drop.len()];
    let mut next = 0;
    for (k, &d) in drop.iter().enumerate() {
        map[k] = next;
        next += usize::from(!d);
    }
    for &k in &halves {
        sub.set_weight(map[k], half.clone());
    }
    let tagged = retag(&sub, &cells);
    Ok(FactorSplit {
        subgraph: tagged,
        multiplier_log2: halves.len() as u32,
        loop_weight,
        cells,
        half_edges,
        source: r.params().clone(),
    })
}

fn retag(g: &MatchGraph, cells: &[TriCell]) -> MatchGraph {
    let mut out = MatchGraph::new();
    for &c in cells {
        out.add_vertex(VertexTag::Cell(c), false);
    }
    for e in g.edges() {
        out.add_edge(e.u, e.v, e.weight.clone());
    }
    if let Some(rot) = g.rotation() {
        out.set_rotation(rot.to_vec()).expect("rotation carries over");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::holed_hexagon;

    #[test]
    fn split_multiplier_counts_axis_pairs() {
        let s = factorization_split(&holed_hexagon(10, 4, &[2, 4]).unwrap()).unwrap();
        assert_eq!(s.multiplier_log2, 3);
        let s = factorization_split(&holed_hexagon(7, 3, &[2]).unwrap()).unwrap();
        assert_eq!(s.multiplier_log2, 2);
    }

    #[test]
    fn dual_region_is_the_zig_zag_region() {
        let s = factorization_split(&holed_hexagon(10, 4, &[2, 4]).unwrap()).unwrap();
        let expected = rbar_region(&[2, 4], &[1, 3, 5], 4).unwrap();
        assert_eq!(s.dual_region().unwrap(), expected);
        let s = factorization_split(&holed_hexagon(7, 3, &[2]).unwrap()).unwrap();
        assert_eq!(s.dual_region().unwrap(), rbar_region(&[1, 3], &[1, 3], 3).unwrap());
    }

    #[test]
    fn no_dual_region_with_central_hole() {
        for (a, b, ks) in [(4, 2, vec![2]), (8, 1, vec![2, 4]), (8, 3, vec![3, 4])] {
            let s = factorization_split(&holed_hexagon(a, b, &ks).unwrap()).unwrap();
            assert!(matches!(s.dual_region(), Err(Error::UnsupportedAction(_))), "{a} {b} {ks:?}");
        }
    }
}
