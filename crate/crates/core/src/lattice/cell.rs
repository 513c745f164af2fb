use std::fmt;

/// Direction of the corner opposite a unit triangle's vertical side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orient {
    Left,
    Right,
}

impl Orient {
    pub fn flip(self) -> Orient {
        match self {
            Orient::Left => Orient::Right,
            Orient::Right => Orient::Left,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Orient::Left => "L",
            Orient::Right => "R",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Orient> {
        match s {
            "L" => Some(Orient::Left),
            "R" => Some(Orient::Right),
            _ => None,
        }
    }
}

/// A lattice vertex.
///
/// The lattice is drawn with one family of lines vertical. `i` indexes the
/// vertical lines (spacing `sqrt(3)/2`), `j` counts half unit steps upward, and
/// `i + j` is always even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub i: i32,
    pub j: i32,
}

impl Point {
    pub const fn new(i: i32, j: i32) -> Point {
        Point { i, j }
    }

    pub fn is_lattice(self) -> bool {
        (self.i + self.j).rem_euclid(2) == 0
    }

    /// Cartesian position with unit lattice spacing.
    pub fn to_xy(self) -> (f64, f64) {
        (self.i as f64 * 3f64.sqrt() / 2.0, self.j as f64 / 2.0)
    }
}

/// An unordered lattice edge, stored with its endpoints sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeEdge {
    a: Point,
    b: Point,
}

impl LatticeEdge {
    pub fn new(p: Point, q: Point) -> LatticeEdge {
        if p <= q {
            LatticeEdge { a: p, b: q }
        } else {
            LatticeEdge { a: q, b: p }
        }
    }

    pub fn endpoints(&self) -> (Point, Point) {
        (self.a, self.b)
    }

    /// True if both endpoints are lattice points at unit distance.
    pub fn is_unit(&self) -> bool {
        let di = self.b.i - self.a.i;
        let dj = self.b.j - self.a.j;
        self.a.is_lattice()
            && self.b.is_lattice()
            && matches!((di.abs(), dj.abs()), (0, 2) | (1, 1))
    }

    pub fn is_vertical(&self) -> bool {
        self.a.i == self.b.i
    }
}

/// One unit triangle of the lattice.
///
/// `u` is the vertical strip between lines `u` and `u + 1`; `v` is the
/// half-height of the centroid. Within a strip the triangles alternate, so
/// the orientation is fixed by parity: right-pointing iff `u + v` is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriCell {
    pub u: i32,
    pub v: i32,
    pub orient: Orient,
}

impl fmt::Display for TriCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.u, self.v, self.orient.symbol())
    }
}

impl TriCell {
    pub fn at(u: i32, v: i32) -> TriCell {
        let orient = if (u + v).rem_euclid(2) == 1 {
            Orient::Right
        } else {
            Orient::Left
        };
        TriCell { u, v, orient }
    }

    /// Builds a cell from explicit coordinates, rejecting inconsistent parity.
    pub fn with_orient(u: i32, v: i32, orient: Orient) -> Option<TriCell> {
        let c = TriCell::at(u, v);
        (c.orient == orient).then_some(c)
    }

    pub fn vertices(&self) -> [Point; 3] {
        let (u, v) = (self.u, self.v);
        match self.orient {
            Orient::Right => [Point::new(u, v - 1), Point::new(u, v + 1), Point::new(u + 1, v)],
            Orient::Left => [Point::new(u, v), Point::new(u + 1, v - 1), Point::new(u + 1, v + 1)],
        }
    }

    /// The three edge-neighbours in counterclockwise order, each paired with
    /// the shared lattice edge.
    pub fn neighbors(&self) -> [(TriCell, LatticeEdge); 3] {
        let (u, v) = (self.u, self.v);
        let p = Point::new;
        match self.orient {
            Orient::Right => [
                (TriCell::at(u, v + 1), LatticeEdge::new(p(u, v + 1), p(u + 1, v))),
                (TriCell::at(u - 1, v), LatticeEdge::new(p(u, v - 1), p(u, v + 1))),
                (TriCell::at(u, v - 1), LatticeEdge::new(p(u, v - 1), p(u + 1, v))),
            ],
            Orient::Left => [
                (TriCell::at(u + 1, v), LatticeEdge::new(p(u + 1, v - 1), p(u + 1, v + 1))),
                (TriCell::at(u, v + 1), LatticeEdge::new(p(u, v), p(u + 1, v + 1))),
                (TriCell::at(u, v - 1), LatticeEdge::new(p(u, v), p(u + 1, v - 1))),
            ],
        }
    }

    pub fn edges(&self) -> [LatticeEdge; 3] {
        self.neighbors().map(|(_, e)| e)
    }

    pub fn is_adjacent(&self, other: &TriCell) -> bool {
        self.neighbors().iter().any(|(n, _)| n == other)
    }

    /// The cell across `edge`, if `edge` is a side of this cell.
    pub fn across(&self, edge: &LatticeEdge) -> Option<TriCell> {
        self.neighbors().iter().find(|(_, e)| e == edge).map(|(n, _)| *n)
    }

    /// Centroid in units of one sixth of the `(i, j)` grid.
    pub fn centroid6(&self) -> (i64, i64) {
        let x = 6 * self.u as i64 + if self.orient == Orient::Right { 2 } else { 4 };
        (x, 6 * self.v as i64)
    }

    /// Inverse of [`TriCell::centroid6`].
    pub fn from_centroid6(x: i64, y: i64) -> Option<TriCell> {
        if y.rem_euclid(6) != 0 {
            return None;
        }
        let (u, orient) = match x.rem_euclid(6) {
            2 => ((x - 2) / 6, Orient::Right),
            4 => ((x - 4) / 6, Orient::Left),
            _ => return None,
        };
        TriCell::with_orient(u as i32, (y / 6) as i32, orient)
    }

    pub fn centroid_xy(&self) -> (f64, f64) {
        let (x, y) = self.centroid6();
        (x as f64 / 6.0 * 3f64.sqrt() / 2.0, y as f64 / 12.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_follows_parity() {
        assert_eq!(TriCell::at(0, 1).orient, Orient::Right);
        assert_eq!(TriCell::at(0, 2).orient, Orient::Left);
        assert!(TriCell::with_orient(0, 2, Orient::Right).is_none());
    }

    #[test]
    fn neighbours_are_mutual_and_opposite() {
        for u in -3..3 {
            for v in -3..3 {
                let c = TriCell::at(u, v);
                for (n, e) in c.neighbors() {
                    assert_eq!(n.orient, c.orient.flip());
                    assert!(n.is_adjacent(&c));
                    assert_eq!(n.across(&e), Some(c));
                    assert!(e.is_unit());
                    let shared = c
                        .vertices()
                        .iter()
                        .filter(|p| n.vertices().contains(p))
                        .count();
                    assert_eq!(shared, 2);
                }
                assert!(!c.is_adjacent(&c));
            }
        }
    }

    #[test]
    fn centroid_roundtrip() {
        for u in -4..4 {
            for v in -4..4 {
                let c = TriCell::at(u, v);
                let (x, y) = c.centroid6();
                assert_eq!(TriCell::from_centroid6(x, y), Some(c));
            }
        }
        assert_eq!(TriCell::from_centroid6(3, 0), None);
    }
}
