use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;

use super::graph::{MatchGraph, VertexTag};
use super::symmetry::SymmetryGroup;
use crate::error::{Error, Result};

/// Orbit graph of a matching graph under a group of automorphisms.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub graph: MatchGraph,
    /// Orbit index of every source vertex.
    pub orbit_of: Vec<usize>,
    /// Source vertices of every orbit, smallest first.
    pub members: Vec<Vec<usize>>,
    /// Number of edge orbits that can never occur in an invariant matching.
    pub dropped_edge_orbits: usize,
}

/// Builds the orbit graph whose perfect matchings are the invariant perfect
/// matchings of `g`.
///
/// `perms` lists every group element as a vertex permutation. An edge orbit
/// joining two vertex orbits becomes an edge when it meets each of their
/// vertices exactly once; an edge orbit inside one vertex orbit becomes a
/// loop when it pairs up that orbit. Every other edge orbit is dropped. With
/// `embed`, the rotation at each orbit is read off its smallest member, which
/// is a valid embedding for orientation-preserving groups.
pub fn orbit_quotient(g: &MatchGraph, perms: &[Vec<usize>], embed: bool) -> Result<Quotient> {
    if g.has_parallel_edges() || !g.loops().is_empty() {
        return Err(Error::Contract("quotients need a simple loopless source graph".into()));
    }
    let n = g.vertex_count();
    let mut orbit_of = vec![usize::MAX; n];
    let mut members = Vec::new();
    for v in 0..n {
        if orbit_of[v] != usize::MAX {
            continue;
        }
        let orbit: BTreeSet<usize> = perms.iter().map(|p| p[v]).collect();
        for &w in &orbit {
            orbit_of[w] = members.len();
        }
        members.push(orbit.into_iter().collect::<Vec<_>>());
    }

    let edge_id: HashMap<(usize, usize), usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(k, e)| ((e.u.min(e.v), e.u.max(e.v)), k))
        .collect();
    let image = |p: &[usize], k: usize| {
        let e = &g.edges()[k];
        let (a, b) = (p[e.u], p[e.v]);
        edge_id.get(&(a.min(b), a.max(b))).copied()
    };

    let mut q = MatchGraph::new();
    for orbit in &members {
        let mut cells: Vec<_> = orbit.iter().filter_map(|&v| g.tag(v).anchor()).collect();
        cells.sort();
        let optional = orbit.iter().all(|&v| g.is_optional(v));
        q.add_vertex(VertexTag::Orbit(cells), optional);
    }

    // quotient edge id (or None) for each source edge
    let mut qedge: Vec<Option<Option<usize>>> = vec![None; g.edge_count()];
    let mut dropped = 0;
    for k in 0..g.edge_count() {
        if qedge[k].is_some() {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for p in perms {
            let img = image(p, k)
                .ok_or_else(|| Error::Contract("permutation is not an automorphism".into()))?;
            orbit.insert(img);
        }
        let e = &g.edges()[k];
        let (o1, o2) = (orbit_of[e.u], orbit_of[e.v]);
        let (s1, s2) = (members[o1].len(), members[o2].len());
        let result = if o1 != o2 && orbit.len() == s1 && orbit.len() == s2 {
            Some(q.add_edge(o1, o2, e.weight.clone()))
        } else {
            if o1 == o2 && 2 * orbit.len() == s1 {
                q.add_loop(o1, e.weight.clone());
            } else if o1 != o2 || 2 * orbit.len() != s1 {
                dropped += 1;
            }
            None
        };
        for &m in &orbit {
            qedge[m] = Some(result);
        }
    }

    if embed {
        if let Some(rot) = g.rotation() {
            let qrot: Vec<Vec<usize>> = members
                .iter()
                .map(|orbit| rot[orbit[0]].iter().filter_map(|&e| qedge[e].flatten()).collect())
                .collect();
            q.set_rotation(qrot)?;
            q.check_euler()?;
        }
    }
    Ok(Quotient { graph: q, orbit_of, members, dropped_edge_orbits: dropped })
}

/// Orbit graph of `g` under a region symmetry group; embedded when the group
/// consists of rotations only.
pub fn quotient_graph(g: &MatchGraph, group: &SymmetryGroup) -> Result<Quotient> {
    orbit_quotient(g, &group.perms(), group.is_rotation_group())
}

/// Deletes the vertex carrying the single loop of an odd graph, returning
/// the remaining graph and the loop weight.
pub fn remove_loop_vertex(g: &MatchGraph) -> Result<(MatchGraph, BigRational)> {
    match g.loops() {
        [(v, w)] if g.vertex_count() % 2 == 1 => {
            let keep: Vec<bool> = (0..g.vertex_count()).map(|x| x != *v).collect();
            Ok((g.induced(&keep).0, w.clone()))
        }
        [_] => Err(Error::Contract("loop vertex removal needs an odd vertex count".into())),
        ls => Err(Error::Contract(format!("expected exactly one loop, found {}", ls.len()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{dual_graph, SymmetryGroup};
    use crate::lattice::{hexagon, holed_hexagon, SymmetryKind};

    fn quotient_of(r: &crate::lattice::Region, gens: &[SymmetryKind]) -> Quotient {
        let group = SymmetryGroup::generate(r, gens).unwrap();
        quotient_graph(&dual_graph(r), &group).unwrap()
    }

    #[test]
    fn third_turn_quotient_has_a_third_of_the_cells() {
        let q = quotient_of(&hexagon(2, 2, 2).unwrap(), &[SymmetryKind::Rot120]);
        assert_eq!(q.graph.vertex_count(), 8);
        assert!(q.graph.loops().is_empty());
    }

    #[test]
    fn half_turn_loops_follow_parity() {
        let odd = quotient_of(&holed_hexagon(7, 3, &[2]).unwrap(), &[SymmetryKind::Rot180]);
        assert_eq!(odd.graph.loops().len(), 1);
        assert_eq!(odd.graph.vertex_count() % 2, 1);
        let even = quotient_of(&holed_hexagon(10, 4, &[2, 4]).unwrap(), &[SymmetryKind::Rot180]);
        assert!(even.graph.loops().is_empty());
        let (rest, w) = remove_loop_vertex(&odd.graph).unwrap();
        assert_eq!(rest.vertex_count() % 2, 0);
        assert_eq!(w, BigRational::from_integer(1.into()));
        assert!(remove_loop_vertex(&even.graph).is_err());
    }

    #[test]
    fn sixfold_quotient_drops_the_central_ring() {
        let q = quotient_of(&hexagon(2, 2, 2).unwrap(), &[SymmetryKind::Rot60]);
        assert_eq!(q.graph.vertex_count(), 4);
        assert_eq!(q.dropped_edge_orbits, 1);
    }
}
