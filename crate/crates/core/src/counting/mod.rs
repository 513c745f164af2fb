//! Exact perfect-matching counters and the tiling counts built on them.
//!
//! Three independent engines are provided: an exhaustive memoised oracle, a
//! transfer-matrix sweep and a Kasteleyn Pfaffian. They are generic over the
//! value type so that plain counts stay in integers.

mod enumerate;
mod frontier;
mod oracle;
mod pfaffian;
mod tilings;

use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::duality::MatchGraph;
use crate::error::{Error, Result};

pub use enumerate::{enumerate_matchings, for_each_matching};
pub use frontier::MAX_FRONTIER;
pub use oracle::ORACLE_LIMIT;
pub use pfaffian::{bareiss_det, kasteleyn_orientation, pfaffian_mgf};
pub use tilings::{
    count_symmetric_tilings, count_tilings, count_tilings_free, count_tilings_weighted, SymMethod,
};

/// Values the counters can accumulate.
pub trait Semiring: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> {}

impl<T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>> Semiring for T {}

fn unit(_: &BigRational) -> BigUint {
    BigUint::one()
}

fn exact(w: &BigRational) -> BigRational {
    w.clone()
}

/// Number of perfect matchings by exhaustive search, ignoring weights.
pub fn count_matchings_oracle(g: &MatchGraph) -> Result<BigUint> {
    oracle::oracle_with(g, &unit, ORACLE_LIMIT)
}

/// Number of perfect matchings by exhaustive search with a custom vertex cap
/// (at most 64).
pub fn count_matchings_oracle_limit(g: &MatchGraph, limit: usize) -> Result<BigUint> {
    oracle::oracle_with(g, &unit, limit)
}

/// Matching generating function by exhaustive search.
pub fn mgf_oracle(g: &MatchGraph) -> Result<BigRational> {
    oracle::oracle_with(g, &exact, ORACLE_LIMIT)
}

/// Number of perfect matchings by the transfer-matrix sweep, ignoring weights.
pub fn count_matchings_frontier(g: &MatchGraph) -> Result<BigUint> {
    frontier::frontier_with(g, &unit)
}

/// Matching generating function by the transfer-matrix sweep.
pub fn mgf_frontier(g: &MatchGraph) -> Result<BigRational> {
    frontier::frontier_with(g, &exact)
}

/// Number of perfect matchings of an embedded graph by Pfaffians, ignoring
/// weights.
pub fn count_matchings_pfaffian(g: &MatchGraph) -> Result<BigUint> {
    to_count(pfaffian_mgf(&g.with_unit_weights())?)
}

pub(crate) fn to_count(v: BigRational) -> Result<BigUint> {
    if !v.is_integer() {
        return Err(Error::NonIntegral(v.to_string()));
    }
    v.to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Contract(format!("negative count {v}")))
}

/// Matching generating function by the fastest applicable engine.
pub fn matching_mgf(g: &MatchGraph) -> Result<BigRational> {
    if g.rotation().is_some() && !g.has_optional() {
        pfaffian_mgf(g)
    } else if g.vertex_count() <= 40 {
        mgf_oracle(g)
    } else {
        mgf_frontier(g)
    }
}

/// Number of perfect matchings by the fastest applicable engine.
pub fn count_matchings(g: &MatchGraph) -> Result<BigUint> {
    if g.rotation().is_some() && !g.has_optional() {
        count_matchings_pfaffian(g)
    } else if g.vertex_count() <= 40 {
        count_matchings_oracle(g)
    } else {
        count_matchings_frontier(g)
    }
}
