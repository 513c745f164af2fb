use std::collections::HashMap;

use num_rational::BigRational;

use super::Semiring;
use crate::duality::MatchGraph;
use crate::error::{Error, Result};

/// Largest vertex count the exhaustive oracle accepts by default.
pub const ORACLE_LIMIT: usize = 64;

struct Oracle<T> {
    adj: Vec<u64>,
    weight: HashMap<(usize, usize), T>,
    loop_weight: Vec<Option<T>>,
    optional: u64,
    memo: HashMap<u64, T>,
}

impl<T: Semiring> Oracle<T> {
    fn new(g: &MatchGraph, w: &dyn Fn(&BigRational) -> T) -> Oracle<T> {
        let n = g.vertex_count();
        let mut adj = vec![0u64; n];
        let mut weight: HashMap<(usize, usize), T> = HashMap::new();
        for e in g.edges() {
            adj[e.u] |= 1 << e.v;
            adj[e.v] |= 1 << e.u;
            let key = (e.u.min(e.v), e.u.max(e.v));
            let add = w(&e.weight);
            let total = weight.remove(&key).map_or(add.clone(), |old| old + add);
            weight.insert(key, total);
        }
        let mut loop_weight: Vec<Option<T>> = vec![None; n];
        for (v, lw) in g.loops() {
            let add = w(lw);
            loop_weight[*v] = Some(loop_weight[*v].take().map_or(add.clone(), |old| old + add));
        }
        let optional = (0..n).filter(|&v| g.is_optional(v)).fold(0u64, |m, v| m | 1 << v);
        Oracle { adj, weight, loop_weight, optional, memo: HashMap::new() }
    }

    fn component(&self, mask: u64) -> u64 {
        let start = mask & mask.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & mask & !comp;
            comp |= new;
            frontier |= new;
        }
        comp
    }

    fn can_absorb(&self, mask: u64) -> bool {
        mask & self.optional != 0
            || bits(mask).any(|v| self.loop_weight[v].is_some())
    }

    fn solve(&mut self, mask: u64) -> T {
        if mask == 0 {
            return T::one();
        }
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let comp = self.component(mask);
        let result = if comp != mask {
            let a = self.solve(comp);
            if a.is_zero() {
                a
            } else {
                a * self.solve(mask & !comp)
            }
        } else if comp.count_ones() % 2 == 1 && !self.can_absorb(comp) {
            T::zero()
        } else {
            self.branch(mask)
        };
        self.memo.insert(mask, result.clone());
        result
    }

    fn branch(&mut self, mask: u64) -> T {
        // minimum-degree vertex first
        let v = bits(mask)
            .min_by_key(|&v| (self.adj[v] & mask).count_ones())
            .expect("non-empty mask");
        let rest = mask & !(1 << v);
        let mut total = T::zero();
        for u in bits(self.adj[v] & rest) {
            let w = self.weight[&(v.min(u), v.max(u))].clone();
            let sub = self.solve(rest & !(1 << u));
            if !sub.is_zero() {
                total = total + w * sub;
            }
        }
        if let Some(lw) = self.loop_weight[v].clone() {
            total = total + lw * self.solve(rest);
        }
        if self.optional & (1 << v) != 0 {
            total = total + self.solve(rest);
        }
        total
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Exhaustive matching generating function by memoised vertex elimination,
/// splitting into connected components and pruning odd ones.
pub fn oracle_with<T: Semiring>(
    g: &MatchGraph,
    w: &dyn Fn(&BigRational) -> T,
    limit: usize,
) -> Result<T> {
    let n = g.vertex_count();
    if n > limit.min(64) {
        return Err(Error::BudgetExceeded { vertices: n, limit: limit.min(64) });
    }
    let mut o = Oracle::new(g, w);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(o.solve(full))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use num_traits::One;

    fn count(g: &MatchGraph) -> BigUint {
        oracle_with(g, &|_| BigUint::one(), ORACLE_LIMIT).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(count(&MatchGraph::from_edges(2, &[(0, 1)])), 1u32.into());
        let c6 = MatchGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(count(&c6), 2u32.into());
        assert_eq!(count(&MatchGraph::from_edges(3, &[(0, 1), (1, 2)])), 0u32.into());
        let k4 = MatchGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(count(&k4), 3u32.into());
    }

    #[test]
    fn loops_and_optional_vertices() {
        let mut g = MatchGraph::from_edges(3, &[(0, 1), (1, 2)]);
        g.add_loop(0, BigRational::one());
        assert_eq!(count(&g), 1u32.into());
        let mut p = MatchGraph::new();
        let a = p.add_vertex(crate::duality::VertexTag::Orbit(vec![]), false);
        let b = p.add_vertex(crate::duality::VertexTag::Orbit(vec![]), true);
        p.add_edge(a, b, BigRational::one());
        assert_eq!(count(&p), 1u32.into());
    }

    #[test]
    fn refuses_large_graphs() {
        let g = MatchGraph::from_edges(70, &[]);
        assert!(matches!(
            oracle_with(&g, &|_| BigUint::one(), ORACLE_LIMIT),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
