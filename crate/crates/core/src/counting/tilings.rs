use num_bigint::BigUint;
use num_rational::BigRational;

use super::{count_matchings, count_matchings_frontier, for_each_matching, matching_mgf, to_count};
use crate::duality::{dual_graph, free_boundary_graph, quotient_graph, symmetry, SymmetryGroup};
use crate::error::{Error, Result};
use crate::lattice::{Region, SymmetryKind};

/// How symmetric tilings are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymMethod {
    /// List every tiling and keep the invariant ones.
    Enumerate,
    /// Count perfect matchings of the orbit graph.
    Quotient,
}

/// Most tilings the enumeration path will list.
pub const ENUMERATION_LIMIT: u64 = 5_000_000;

fn require_closed(r: &Region) -> Result<()> {
    if r.is_closed() {
        Ok(())
    } else {
        Err(Error::Param("region has a free boundary; use count_tilings_free".into()))
    }
}

/// Number of lozenge tilings of a closed region.
pub fn count_tilings(r: &Region) -> Result<BigUint> {
    require_closed(r)?;
    count_matchings(&dual_graph(r))
}

/// Tilings weighted by 1/2 for every lozenge across a half-weight edge.
pub fn count_tilings_weighted(r: &Region) -> Result<BigRational> {
    require_closed(r)?;
    matching_mgf(&dual_graph(r))
}

/// Number of tilings fixed by every listed symmetry.
pub fn count_symmetric_tilings(
    r: &Region,
    gens: &[SymmetryKind],
    method: SymMethod,
) -> Result<BigUint> {
    require_closed(r)?;
    let gens: Vec<SymmetryKind> =
        gens.iter().copied().filter(|&k| k != SymmetryKind::Identity).collect();
    if gens.is_empty() {
        return count_tilings(r);
    }
    match method {
        SymMethod::Enumerate => {
            let total = count_tilings(r)?;
            if total > BigUint::from(ENUMERATION_LIMIT) {
                return Err(Error::BudgetExceeded { vertices: r.len(), limit: r.len() });
            }
            let perms: Vec<Vec<usize>> =
                gens.iter().map(|&k| symmetry(r, k).map(|s| s.perm)).collect::<Result<_>>()?;
            let g = dual_graph(r);
            let mut n = 0u64;
            for_each_matching(&g, |partner| {
                let fixed = perms
                    .iter()
                    .all(|p| (0..partner.len()).all(|v| partner[p[v]] == p[partner[v]]));
                n += u64::from(fixed);
                true
            });
            Ok(BigUint::from(n))
        }
        SymMethod::Quotient => {
            let group = SymmetryGroup::generate(r, &gens)?;
            let q = quotient_graph(&dual_graph(r), &group)?;
            to_count(matching_mgf(&q.graph.with_unit_weights())?)
        }
    }
}

/// Number of tilings in which lozenges may stick out halfway across the
/// free boundary edges.
pub fn count_tilings_free(r: &Region) -> Result<BigUint> {
    count_matchings_frontier(&free_boundary_graph(r))
}
