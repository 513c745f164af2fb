//! Matching graphs of regions, symmetry actions, orbit graphs and the
//! factorization split.

mod graph;
mod quotient;
mod split;
mod symmetry;

pub use graph::{dual_graph, free_boundary_graph, Face, GraphEdge, MatchGraph, VertexTag};
pub use quotient::{orbit_quotient, quotient_graph, remove_loop_vertex, Quotient};
pub use split::{factorization_split, FactorSplit};
pub use symmetry::{symmetry, SymmetryElement, SymmetryGroup};
