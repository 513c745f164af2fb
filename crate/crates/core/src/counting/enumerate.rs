use crate::duality::MatchGraph;
use crate::error::{Error, Result};

/// Calls `visit` with the partner array of every perfect matching.
///
/// `partner[v] == v` marks a vertex covered by a loop or left unmatched as
/// an optional vertex. Stops early once `visit` returns `false`.
pub fn for_each_matching(g: &MatchGraph, mut visit: impl FnMut(&[usize]) -> bool) {
    let adj = g.adjacency();
    let has_loop: Vec<bool> = {
        let mut h = vec![false; g.vertex_count()];
        for (v, _) in g.loops() {
            h[*v] = true;
        }
        h
    };
    let mut partner = vec![usize::MAX; g.vertex_count()];
    fn go(
        g: &MatchGraph,
        adj: &[Vec<(usize, usize)>],
        has_loop: &[bool],
        partner: &mut Vec<usize>,
        start: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let Some(v) = (start..partner.len()).find(|&v| partner[v] == usize::MAX) else {
            return visit(partner);
        };
        let mut seen_nbrs = Vec::new();
        for &(u, _) in &adj[v] {
            if partner[u] == usize::MAX && !seen_nbrs.contains(&u) {
                seen_nbrs.push(u);
                partner[v] = u;
                partner[u] = v;
                let cont = go(g, adj, has_loop, partner, v + 1, visit);
                partner[u] = usize::MAX;
                partner[v] = usize::MAX;
                if !cont {
                    return false;
                }
            }
        }
        if has_loop[v] || g.is_optional(v) {
            partner[v] = v;
            let cont = go(g, adj, has_loop, partner, v + 1, visit);
            partner[v] = usize::MAX;
            if !cont {
                return false;
            }
        }
        true
    }
    go(g, &adj, &has_loop, &mut partner, 0, &mut visit);
}

/// All perfect matchings as partner arrays, refusing to list more than `limit`.
pub fn enumerate_matchings(g: &MatchGraph, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut overflow = false;
    for_each_matching(g, |p| {
        if out.len() == limit {
            overflow = true;
            return false;
        }
        out.push(p.to_vec());
        true
    });
    if overflow {
        return Err(Error::BudgetExceeded { vertices: g.vertex_count(), limit });
    }
    Ok(out)
}
