use std::collections::HashMap;

use num_rational::BigRational;

use super::Semiring;
use crate::duality::MatchGraph;
use crate::error::{Error, Result};

/// Widest frontier the transfer-matrix counter supports.
pub const MAX_FRONTIER: usize = 128;

/// Vertex order sweeping the plane along one axis, with its frontier width.
fn sweep_order(g: &MatchGraph, adj: &[Vec<(usize, usize)>]) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut best: Option<(Vec<usize>, usize)> = None;
    for transpose in [false, true] {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| {
            let (x, y) = g.tag(v).position6();
            if transpose {
                (y, x, v)
            } else {
                (x, y, v)
            }
        });
        let width = frontier_width(&order, adj);
        if best.as_ref().is_none_or(|(_, w)| width < *w) {
            best = Some((order, width));
        }
    }
    best.unwrap()
}

fn last_use(order: &[usize], adj: &[Vec<(usize, usize)>]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    order
        .iter()
        .map(|&v| adj[v].iter().map(|&(u, _)| pos[u]).fold(pos[v], usize::max))
        .collect()
}

fn frontier_width(order: &[usize], adj: &[Vec<(usize, usize)>]) -> usize {
    let last = last_use(order, adj);
    let mut open = vec![0i64; order.len() + 1];
    for (p, &l) in last.iter().enumerate() {
        open[p] += 1;
        open[l + 1] -= 1;
    }
    let mut cur = 0;
    let mut best = 0;
    for d in open {
        cur += d;
        best = best.max(cur);
    }
    best as usize
}

/// Matching generating function by a transfer matrix along a sweep order.
///
/// The state is the set of swept vertices still waiting for a partner. A
/// vertex leaves the state once its last neighbour has been swept; optional
/// vertices may leave unmatched.
pub fn frontier_with<T: Semiring>(g: &MatchGraph, w: &dyn Fn(&BigRational) -> T) -> Result<T> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(T::one());
    }
    let adj = g.adjacency();
    let (order, width) = sweep_order(g, &adj);
    if width > MAX_FRONTIER {
        return Err(Error::BudgetExceeded { vertices: width, limit: MAX_FRONTIER });
    }
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let last = last_use(&order, &adj);
    let mut loop_w: Vec<Option<T>> = vec![None; n];
    for (v, lw) in g.loops() {
        let add = w(lw);
        loop_w[*v] = Some(loop_w[*v].take().map_or(add.clone(), |o| o + add));
    }
    let weights: Vec<T> = g.edges().iter().map(|e| w(&e.weight)).collect();
    let mut retire_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (p, &l) in last.iter().enumerate() {
        retire_at[l].push(order[p]);
    }

    let mut slot = vec![usize::MAX; n];
    let mut free: Vec<usize> = (0..MAX_FRONTIER).rev().collect();
    let mut states: HashMap<u128, T> = HashMap::from([(0u128, T::one())]);
    for (p, &v) in order.iter().enumerate() {
        let s = free.pop().expect("frontier width checked");
        slot[v] = s;
        let bit = 1u128 << s;
        let earlier: Vec<(u128, usize)> = adj[v]
            .iter()
            .filter(|&&(u, _)| pos[u] < p)
            .map(|&(u, e)| (1u128 << slot[u], e))
            .collect();
        let mut next: HashMap<u128, T> = HashMap::with_capacity(states.len() * 2);
        let mut add = |key: u128, val: T| {
            match next.remove(&key) {
                Some(old) => next.insert(key, old + val),
                None => next.insert(key, val),
            };
        };
        for (state, val) in states {
            add(state | bit, val.clone());
            if let Some(lw) = &loop_w[v] {
                add(state, val.clone() * lw.clone());
            }
            for &(ub, e) in &earlier {
                if state & ub != 0 {
                    add(state & !ub, val.clone() * weights[e].clone());
                }
            }
        }
        states = next;
        for &u in &retire_at[p] {
            let ub = 1u128 << slot[u];
            let optional = g.is_optional(u);
            let mut kept: HashMap<u128, T> = HashMap::with_capacity(states.len());
            for (state, val) in states {
                let key = if state & ub == 0 {
                    state
                } else if optional {
                    state & !ub
                } else {
                    continue;
                };
                match kept.remove(&key) {
                    Some(old) => kept.insert(key, old + val),
                    None => kept.insert(key, val),
                };
            }
            states = kept;
            free.push(slot[u]);
        }
    }
    Ok(states.remove(&0).unwrap_or_else(T::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::oracle::{oracle_with, ORACLE_LIMIT};
    use crate::duality::{dual_graph, free_boundary_graph};
    use crate::lattice::{d_region, hexagon, holed_hexagon};
    use num_bigint::BigUint;
    use num_traits::One;

    fn one(_: &BigRational) -> BigUint {
        BigUint::one()
    }

    #[test]
    fn agrees_with_oracle() {
        for g in [
            dual_graph(&hexagon(2, 2, 2).unwrap()),
            dual_graph(&hexagon(1, 3, 2).unwrap()),
            dual_graph(&holed_hexagon(4, 1, &[1]).unwrap()),
            free_boundary_graph(&d_region(2, 1, -1, &[1, 2]).unwrap()),
            free_boundary_graph(&d_region(2, 2, 0, &[2]).unwrap()),
        ] {
            assert_eq!(frontier_with(&g, &one).unwrap(), oracle_with(&g, &one, ORACLE_LIMIT).unwrap());
        }
    }

    #[test]
    fn loops_and_weights() {
        let mut g = MatchGraph::from_edges(3, &[(0, 1), (1, 2)]);
        g.add_loop(2, BigRational::new(1.into(), 3.into()));
        g.set_weight(0, BigRational::new(1.into(), 2.into()));
        let id = |w: &BigRational| w.clone();
        assert_eq!(frontier_with(&g, &id).unwrap(), BigRational::new(1.into(), 6.into()));
    }

    #[test]
    fn empty_graph_counts_one() {
        assert_eq!(frontier_with(&MatchGraph::new(), &one).unwrap(), BigUint::one());
    }
}
