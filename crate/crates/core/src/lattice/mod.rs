//! Unit triangles, isometries and the region families built from them.

mod cell;
mod isometry;
mod json;
mod region;

pub use cell::{LatticeEdge, Orient, Point, TriCell};
pub use isometry::{Isometry, SymmetryKind};
pub use json::{deserialize_region, serialize_region};
pub use region::{
    core_collision, cored_hexagon, d_region, hexagon, holed_hexagon, rbar_region, Region,
    RegionParams,
};
