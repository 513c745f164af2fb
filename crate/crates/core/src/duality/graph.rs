use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{LatticeEdge, Region, TriCell};

/// What a matching-graph vertex stands for.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexTag {
    Cell(TriCell),
    /// An orbit of cells under a symmetry group, sorted.
    Orbit(Vec<TriCell>),
    /// Outward half-lozenge across a free boundary edge.
    Phantom(LatticeEdge),
}

impl VertexTag {
    /// A cell locating the vertex in the plane.
    pub fn anchor(&self) -> Option<TriCell> {
        match self {
            VertexTag::Cell(c) => Some(*c),
            VertexTag::Orbit(cs) => cs.first().copied(),
            VertexTag::Phantom(_) => None,
        }
    }

    /// Position in sixfold lattice coordinates, used to order vertices.
    pub fn position6(&self) -> (i64, i64) {
        match self {
            VertexTag::Phantom(e) => {
                let (p, q) = e.endpoints();
                (3 * (p.i + q.i) as i64, 3 * (p.j + q.j) as i64)
            }
            other => other.anchor().map(|c| c.centroid6()).unwrap_or((0, 0)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub u: usize,
    pub v: usize,
    pub weight: BigRational,
}

impl GraphEdge {
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Weighted graph whose perfect matchings are counted.
///
/// Optional vertices may stay unmatched. A loop at `v` may cover `v` on its
/// own. The rotation system, when present, lists the non-loop edges around
/// each vertex in counterclockwise order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchGraph {
    tags: Vec<VertexTag>,
    optional: Vec<bool>,
    edges: Vec<GraphEdge>,
    loops: Vec<(usize, BigRational)>,
    rotation: Option<Vec<Vec<usize>>>,
}

/// A face as a closed walk of darts `(edge, forward)`, where `forward`
/// means the walk runs from `edge.u` to `edge.v`.
pub type Face = Vec<(usize, bool)>;

impl MatchGraph {
    pub fn new() -> MatchGraph {
        MatchGraph::default()
    }

    /// Unit-weight graph on `0..n` without tags; convenient for tests.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> MatchGraph {
        let mut g = MatchGraph::new();
        for _ in 0..n {
            g.add_vertex(VertexTag::Orbit(Vec::new()), false);
        }
        for &(u, v) in edges {
            g.add_edge(u, v, BigRational::one());
        }
        g
    }

    pub fn add_vertex(&mut self, tag: VertexTag, optional: bool) -> usize {
        self.tags.push(tag);
        self.optional.push(optional);
        self.tags.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, weight: BigRational) -> usize {
        assert!(u != v && u < self.tags.len() && v < self.tags.len());
        self.edges.push(GraphEdge { u, v, weight });
        self.edges.len() - 1
    }

    pub fn add_loop(&mut self, v: usize, weight: BigRational) {
        assert!(v < self.tags.len());
        self.loops.push((v, weight));
    }

    pub fn vertex_count(&self) -> usize {
        self.tags.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn tags(&self) -> &[VertexTag] {
        &self.tags
    }

    pub fn tag(&self, v: usize) -> &VertexTag {
        &self.tags[v]
    }

    pub fn is_optional(&self, v: usize) -> bool {
        self.optional[v]
    }

    pub fn has_optional(&self) -> bool {
        self.optional.iter().any(|&o| o)
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn loops(&self) -> &[(usize, BigRational)] {
        &self.loops
    }

    pub fn rotation(&self) -> Option<&[Vec<usize>]> {
        self.rotation.as_deref()
    }

    pub fn clear_rotation(&mut self) {
        self.rotation = None;
    }

    /// Installs a rotation system after checking that it lists every edge
    /// exactly once at each endpoint.
    pub fn set_rotation(&mut self, rot: Vec<Vec<usize>>) -> Result<()> {
        if rot.len() != self.vertex_count() {
            return Err(Error::Contract("rotation system has wrong vertex count".into()));
        }
        let mut seen = vec![0u8; self.edges.len()];
        for (x, list) in rot.iter().enumerate() {
            for &e in list {
                let edge = self.edges.get(e).ok_or_else(|| Error::Contract("bad edge id".into()))?;
                if edge.u != x && edge.v != x {
                    return Err(Error::Contract(format!("edge {e} listed at non-endpoint {x}")));
                }
                seen[e] += 1;
            }
        }
        if seen.iter().any(|&s| s != 2) {
            return Err(Error::Contract("rotation system must list each edge twice".into()));
        }
        self.rotation = Some(rot);
        Ok(())
    }

    /// `(neighbour, edge id)` pairs per vertex, loops excluded.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (k, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, k));
            adj[e.v].push((e.u, k));
        }
        adj
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().any(|e| !seen.insert((e.u.min(e.v), e.u.max(e.v))))
    }

    pub fn all_unit_weights(&self) -> bool {
        self.edges.iter().all(|e| e.weight.is_one()) && self.loops.iter().all(|(_, w)| w.is_one())
    }

    /// Two-colouring of the loopless part, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        if !self.loops.is_empty() {
            return None;
        }
        let adj = self.adjacency();
        let mut color: Vec<Option<bool>> = vec![None; self.vertex_count()];
        for s in 0..self.vertex_count() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let cx = color[x].unwrap();
                for &(y, _) in &adj[x] {
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Connected components (through edges), each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Subgraph induced on the vertices with `keep[v]`, with the old-to-new
    /// index map. The rotation system is restricted accordingly.
    pub fn induced(&self, keep: &[bool]) -> (MatchGraph, Vec<Option<usize>>) {
        let mut map = vec![None; self.vertex_count()];
        let mut g = MatchGraph::new();
        for v in 0..self.vertex_count() {
            if keep[v] {
                map[v] = Some(g.add_vertex(self.tags[v].clone(), self.optional[v]));
            }
        }
        let mut emap = vec![None; self.edges.len()];
        for (k, e) in self.edges.iter().enumerate() {
            if let (Some(u), Some(v)) = (map[e.u], map[e.v]) {
                emap[k] = Some(g.add_edge(u, v, e.weight.clone()));
            }
        }
        for (v, w) in &self.loops {
            if let Some(nv) = map[*v] {
                g.add_loop(nv, w.clone());
            }
        }
        if let Some(rot) = &self.rotation {
            let mut new_rot = vec![Vec::new(); g.vertex_count()];
            for (v, list) in rot.iter().enumerate() {
                if let Some(nv) = map[v] {
                    new_rot[nv] = list.iter().filter_map(|&e| emap[e]).collect();
                }
            }
            g.rotation = Some(new_rot);
        }
        (g, map)
    }

    /// Same graph with the edges in `drop` removed.
    pub fn without_edges(&self, drop: &[bool]) -> MatchGraph {
        let mut g = MatchGraph { tags: self.tags.clone(), optional: self.optional.clone(), ..Default::default() };
        g.loops = self.loops.clone();
        let mut emap = vec![None; self.edges.len()];
        for (k, e) in self.edges.iter().enumerate() {
            if !drop[k] {
                emap[k] = Some(g.add_edge(e.u, e.v, e.weight.clone()));
            }
        }
        if let Some(rot) = &self.rotation {
            g.rotation =
                Some(rot.iter().map(|l| l.iter().filter_map(|&e| emap[e]).collect()).collect());
        }
        g
    }

    /// Copy with every edge and loop weight set to 1.
    pub fn with_unit_weights(&self) -> MatchGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.weight = BigRational::one();
        }
        for (_, w) in &mut g.loops {
            *w = BigRational::one();
        }
        g
    }

    pub fn set_weight(&mut self, edge: usize, w: BigRational) {
        self.edges[edge].weight = w;
    }

    /// Traces the faces of the rotation system.
    ///
    /// From dart `x -> y` the walk continues along the edge preceding it in
    /// the counterclockwise order at `y`, so bounded faces are walked
    /// counterclockwise.
    pub fn faces(&self) -> Result<Vec<Face>> {
        let rot = self.rotation.as_ref().ok_or(Error::EmbeddingRequired)?;
        let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
        for (x, list) in rot.iter().enumerate() {
            for (k, &e) in list.iter().enumerate() {
                pos.insert((x, e), k);
            }
        }
        let dart_head = |e: usize, fwd: bool| if fwd { self.edges[e].v } else { self.edges[e].u };
        let mut used = vec![[false; 2]; self.edges.len()];
        let mut faces = Vec::new();
        for e in 0..self.edges.len() {
            for fwd in [true, false] {
                if used[e][fwd as usize] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut ce, mut cf) = (e, fwd);
                loop {
                    used[ce][cf as usize] = true;
                    face.push((ce, cf));
                    let y = dart_head(ce, cf);
                    let list = &rot[y];
                    let k = pos[&(y, ce)];
                    let ne = list[(k + list.len() - 1) % list.len()];
                    ce = ne;
                    cf = self.edges[ne].u == y;
                    if (ce, cf) == (e, fwd) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }

    /// Checks `V - E + F = 2` on every connected component.
    pub fn check_euler(&self) -> Result<()> {
        let faces = self.faces()?;
        let comps = self.components();
        let mut comp_of = vec![0; self.vertex_count()];
        for (c, members) in comps.iter().enumerate() {
            for &v in members {
                comp_of[v] = c;
            }
        }
        let mut vcount = vec![0i64; comps.len()];
        let mut ecount = vec![0i64; comps.len()];
        let mut fcount = vec![0i64; comps.len()];
        for v in 0..self.vertex_count() {
            vcount[comp_of[v]] += 1;
        }
        for e in &self.edges {
            ecount[comp_of[e.u]] += 1;
        }
        for f in &faces {
            fcount[comp_of[self.edges[f[0].0].u]] += 1;
        }
        for c in 0..comps.len() {
            // an isolated vertex bounds one face
            let f = if ecount[c] == 0 { 1 } else { fcount[c] };
            if vcount[c] - ecount[c] + f != 2 {
                return Err(Error::Contract(format!(
                    "Euler characteristic {} on component {c}",
                    vcount[c] - ecount[c] + f
                )));
            }
        }
        Ok(())
    }

    /// Plain text export: one `u v num/den` line per edge, loops as `v v w`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# vertices {}", self.vertex_count());
        for e in &self.edges {
            let _ = writeln!(s, "{} {} {}", e.u, e.v, e.weight);
        }
        for (v, w) in &self.loops {
            let _ = writeln!(s, "{v} {v} {w}");
        }
        s
    }
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// Dual graph of a region: one vertex per cell, one edge per shared lattice
/// edge, embedded by the geometry. Edges listed in `half_edges` get weight 1/2.
pub fn dual_graph(r: &Region) -> MatchGraph {
    build_dual(r, false)
}

/// Dual graph plus one optional phantom vertex behind each free edge.
pub fn free_boundary_graph(r: &Region) -> MatchGraph {
    build_dual(r, true)
}

fn build_dual(r: &Region, phantoms: bool) -> MatchGraph {
    let mut g = MatchGraph::new();
    let index: HashMap<TriCell, usize> = r
        .cells()
        .iter()
        .map(|&c| (c, g.add_vertex(VertexTag::Cell(c), false)))
        .collect();
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); index.len()];
    let mut edge_of: HashMap<LatticeEdge, usize> = HashMap::new();
    for (&c, x) in r.cells().iter().zip(0usize..) {
        for (n, le) in c.neighbors() {
            let e = if let Some(&y) = index.get(&n) {
                *edge_of.entry(le).or_insert_with(|| {
                    let w = if r.half_edges().contains(&le) { half() } else { BigRational::one() };
                    g.add_edge(x, y, w)
                })
            } else if phantoms && r.free_edges().contains(&le) {
                let p = g.add_vertex(VertexTag::Phantom(le), true);
                rot.push(Vec::new());
                let e = g.add_edge(x, p, BigRational::one());
                rot[p].push(e);
                e
            } else {
                continue;
            };
            rot[x].push(e);
        }
    }
    g.set_rotation(rot).expect("lattice rotation system is consistent");
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{d_region, hexagon, holed_hexagon};

    #[test]
    fn unit_hexagon_is_six_cycle() {
        let g = dual_graph(&hexagon(1, 1, 1).unwrap());
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.adjacency().iter().all(|a| a.len() == 2));
        assert!(g.bipartition().is_some());
        assert_eq!(g.faces().unwrap().len(), 2);
        g.check_euler().unwrap();
    }

    #[test]
    fn dual_graphs_are_planar_and_bipartite() {
        for r in [
            hexagon(1, 1, 2).unwrap(),
            hexagon(3, 2, 4).unwrap(),
            holed_hexagon(10, 4, &[2, 4]).unwrap(),
            holed_hexagon(2, 2, &[1]).unwrap(),
        ] {
            let g = dual_graph(&r);
            g.check_euler().unwrap();
            let col = g.bipartition().unwrap();
            assert_eq!(col.iter().filter(|&&c| c).count() * 2, g.vertex_count());
            assert!(!g.has_parallel_edges());
            assert!(g.adjacency().iter().all(|a| a.len() <= 3));
        }
    }

    #[test]
    fn phantoms_sit_on_free_edges() {
        let r = d_region(2, 1, -1, &[1, 2]).unwrap();
        let g = free_boundary_graph(&r);
        let n = g.tags().iter().filter(|t| matches!(t, VertexTag::Phantom(_))).count();
        assert_eq!(n, r.free_edges().len());
        g.check_euler().unwrap();
    }

    #[test]
    fn text_export_lists_weights() {
        let mut g = MatchGraph::from_edges(2, &[(0, 1)]);
        g.set_weight(0, half());
        g.add_loop(1, BigRational::one());
        assert_eq!(g.to_text(), "# vertices 2\n0 1 1/2\n1 1 1\n");
    }
}
