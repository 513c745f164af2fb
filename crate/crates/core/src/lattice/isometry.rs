use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::cell::{LatticeEdge, Point, TriCell};

/// Named symmetries of the hexagonal regions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SymmetryKind {
    Identity,
    Rot60,
    Rot120,
    Rot180,
    /// Reflection across the horizontal symmetry axis.
    ReflH,
    /// Reflection across the vertical symmetry axis.
    ReflV,
}

impl SymmetryKind {
    pub const ALL: [SymmetryKind; 6] = [
        SymmetryKind::Identity,
        SymmetryKind::Rot60,
        SymmetryKind::Rot120,
        SymmetryKind::Rot180,
        SymmetryKind::ReflH,
        SymmetryKind::ReflV,
    ];

    /// `(rotation steps of 60 degrees, reflect first)`.
    fn dihedral(self) -> (u8, bool) {
        match self {
            SymmetryKind::Identity => (0, false),
            SymmetryKind::Rot60 => (1, false),
            SymmetryKind::Rot120 => (2, false),
            SymmetryKind::Rot180 => (3, false),
            SymmetryKind::ReflV => (0, true),
            SymmetryKind::ReflH => (3, true),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SymmetryKind::Identity => "id",
            SymmetryKind::Rot60 => "rot60",
            SymmetryKind::Rot120 => "rot120",
            SymmetryKind::Rot180 => "rot180",
            SymmetryKind::ReflH => "reflh",
            SymmetryKind::ReflV => "reflv",
        }
    }

    pub fn is_rotation(self) -> bool {
        !self.dihedral().1
    }

    /// Order of the cyclic group generated by this symmetry.
    pub fn order(self) -> usize {
        match self {
            SymmetryKind::Identity => 1,
            SymmetryKind::Rot60 => 6,
            SymmetryKind::Rot120 => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k = match s.to_ascii_lowercase().as_str() {
            "id" | "identity" => SymmetryKind::Identity,
            "rot60" | "r" => SymmetryKind::Rot60,
            "rot120" | "r2" => SymmetryKind::Rot120,
            "rot180" | "r3" | "center" => SymmetryKind::Rot180,
            "reflh" | "h" | "-" => SymmetryKind::ReflH,
            "reflv" | "v" | "|" => SymmetryKind::ReflV,
            other => return Err(format!("unknown symmetry '{other}'")),
        };
        Ok(k)
    }
}

/// An element of the dihedral group of order 12 acting about a fixed centre.
///
/// The map is `x -> R^rot (F^reflect (x - c)) + c` where `R` is the
/// counterclockwise rotation by 60 degrees and `F` the reflection across the
/// vertical line through the centre `c`. The centre is stored in doubled
/// `(i, j)` coordinates so that edge midpoints are representable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    rot: u8,
    reflect: bool,
    center2: (i64, i64),
}

impl Isometry {
    pub fn new(kind: SymmetryKind, center2: (i64, i64)) -> Isometry {
        let (rot, reflect) = kind.dihedral();
        Isometry { rot, reflect, center2 }
    }

    pub fn identity(center2: (i64, i64)) -> Isometry {
        Isometry::new(SymmetryKind::Identity, center2)
    }

    pub fn center2(&self) -> (i64, i64) {
        self.center2
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        debug_assert_eq!(self.center2, other.center2);
        let r2 = if self.reflect { 6 - other.rot } else { other.rot };
        Isometry {
            rot: (self.rot + r2) % 6,
            reflect: self.reflect ^ other.reflect,
            center2: self.center2,
        }
    }

    pub fn reflects(&self) -> bool {
        self.reflect
    }

    pub fn is_identity(&self) -> bool {
        self.rot == 0 && !self.reflect
    }

    /// Applies the map to a point given in sixfold `(i, j)` coordinates.
    fn apply6(&self, x: i64, y: i64) -> Option<(i64, i64)> {
        let (cx, cy) = (3 * self.center2.0, 3 * self.center2.1);
        let (mut di, mut dj) = (x - cx, y - cy);
        if self.reflect {
            di = -di;
        }
        for _ in 0..self.rot {
            if (di - dj).rem_euclid(2) != 0 {
                return None;
            }
            let ni = (di - dj) / 2;
            let nj = (3 * di + dj) / 2;
            di = ni;
            dj = nj;
        }
        Some((di + cx, dj + cy))
    }

    pub fn apply(&self, c: &TriCell) -> Option<TriCell> {
        let (x, y) = c.centroid6();
        let (x2, y2) = self.apply6(x, y)?;
        TriCell::from_centroid6(x2, y2)
    }

    pub fn apply_point(&self, p: &Point) -> Option<Point> {
        let (x, y) = self.apply6(6 * p.i as i64, 6 * p.j as i64)?;
        if x.rem_euclid(6) != 0 || y.rem_euclid(6) != 0 {
            return None;
        }
        let q = Point::new((x / 6) as i32, (y / 6) as i32);
        q.is_lattice().then_some(q)
    }

    pub fn apply_edge(&self, e: &LatticeEdge) -> Option<LatticeEdge> {
        let (p, q) = e.endpoints();
        Some(LatticeEdge::new(self.apply_point(&p)?, self.apply_point(&q)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells_around_origin() -> Vec<TriCell> {
        let mut v = Vec::new();
        for u in -5..5 {
            for w in -5..5 {
                v.push(TriCell::at(u, w));
            }
        }
        v
    }

    #[test]
    fn rotation_by_sixty_has_order_six_about_lattice_point() {
        let r = Isometry::new(SymmetryKind::Rot60, (0, 0));
        for c in cells_around_origin() {
            let mut d = c;
            for step in 1..=6 {
                d = r.apply(&d).unwrap();
                if step < 6 {
                    assert_ne!(d, c);
                }
            }
            assert_eq!(d, c);
        }
    }

    #[test]
    fn isometries_preserve_adjacency() {
        let center = (4, 0);
        for kind in SymmetryKind::ALL {
            let g = Isometry::new(kind, center);
            for c in cells_around_origin() {
                let gc = g.apply(&c).unwrap();
                for (n, _) in c.neighbors() {
                    assert!(gc.is_adjacent(&g.apply(&n).unwrap()), "{kind} {c}");
                }
            }
        }
    }

    #[test]
    fn dihedral_relations() {
        let c = (2, 0);
        let r = Isometry::new(SymmetryKind::Rot60, c);
        let h = Isometry::new(SymmetryKind::ReflH, c);
        let v = Isometry::new(SymmetryKind::ReflV, c);
        let r3 = r.compose(&r).compose(&r);
        assert_eq!(r3, Isometry::new(SymmetryKind::Rot180, c));
        assert_eq!(h.compose(&v), Isometry::new(SymmetryKind::Rot180, c));
        assert!(v.compose(&v).is_identity());
        for cell in cells_around_origin() {
            let a = h.compose(&v).apply(&cell).unwrap();
            let b = h.apply(&v.apply(&cell).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rotation_about_edge_midpoint_fails_for_sixty() {
        // the midpoint of a vertical edge is only a centre of 180 degree symmetry
        let center = (2, 0);
        let r180 = Isometry::new(SymmetryKind::Rot180, center);
        assert!(r180.apply(&TriCell::at(0, 0)).is_some());
        let r60 = Isometry::new(SymmetryKind::Rot60, center);
        assert!(cells_around_origin().iter().any(|c| r60.apply(c).is_none()));
    }
}
