use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::cell::{LatticeEdge, Orient, Point, TriCell};
use super::isometry::{Isometry, SymmetryKind};
use crate::error::{param, Error, Result};

/// Construction record of a region.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum RegionParams {
    /// Hexagon with sides `a, b, c, a, b, c` clockwise from the northwest.
    Hexagon { a: u32, b: u32, c: u32 },
    /// Hexagon `a, a, 2b` with side-two triangular holes on the horizontal axis.
    HoledHexagon { a: u32, b: u32, ks: Vec<u32> },
    /// Holed hexagon of odd side `2a - 1` with a central rhombus of side `2x - 1` removed.
    CoredHexagon { a: u32, b: u32, ks: Vec<u32>, x: u32 },
    /// Upper-left quarter of a holed hexagon with a free vertical boundary.
    DRegion { a: u32, b: u32, eps: i32, is: Vec<u32> },
    /// Half region bounded by two zig-zag lines with bumps at `l` and `q`.
    RBarRegion { l: Vec<u32>, q: Vec<u32>, base: u32 },
}

impl RegionParams {
    pub fn family(&self) -> &'static str {
        match self {
            RegionParams::Hexagon { .. } => "Hexagon",
            RegionParams::HoledHexagon { .. } => "HoledHexagon",
            RegionParams::CoredHexagon { .. } => "CoredHexagon",
            RegionParams::DRegion { .. } => "DRegion",
            RegionParams::RBarRegion { .. } => "RBarRegion",
        }
    }

    /// Rebuilds the region described by this record.
    pub fn build(&self) -> Result<Region> {
        match self {
            RegionParams::Hexagon { a, b, c } => hexagon(*a, *b, *c),
            RegionParams::HoledHexagon { a, b, ks } => holed_hexagon(*a, *b, ks),
            RegionParams::CoredHexagon { a, b, ks, x } => cored_hexagon(*a, *b, ks, *x),
            RegionParams::DRegion { a, b, eps, is } => d_region(*a, *b, *eps, is),
            RegionParams::RBarRegion { l, q, base } => rbar_region(l, q, *base),
        }
    }
}

/// A finite set of unit triangles together with boundary annotations.
///
/// `free_edges` are boundary edges across which a lozenge may protrude.
/// `half_edges` are interior edges whose lozenge carries weight 1/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    params: RegionParams,
    cells: BTreeSet<TriCell>,
    free_edges: BTreeSet<LatticeEdge>,
    half_edges: BTreeSet<LatticeEdge>,
    center2: Option<(i64, i64)>,
}

impl Region {
    /// Assembles a region from raw parts, checking the edge annotations.
    pub fn from_parts(
        params: RegionParams,
        cells: BTreeSet<TriCell>,
        free_edges: BTreeSet<LatticeEdge>,
        half_edges: BTreeSet<LatticeEdge>,
    ) -> Result<Region> {
        let center2 = symmetry_center(&params);
        let r = Region { params, cells, free_edges, half_edges, center2 };
        for e in &r.free_edges {
            if r.cells_on(e).len() != 1 {
                return param(format!("free edge {e:?} is not on the region boundary"));
            }
        }
        for e in &r.half_edges {
            if r.cells_on(e).len() != 2 {
                return param(format!("half-weight edge {e:?} is not interior"));
            }
        }
        Ok(r)
    }

    pub fn params(&self) -> &RegionParams {
        &self.params
    }

    pub fn cells(&self) -> &BTreeSet<TriCell> {
        &self.cells
    }

    pub fn free_edges(&self) -> &BTreeSet<LatticeEdge> {
        &self.free_edges
    }

    pub fn half_edges(&self) -> &BTreeSet<LatticeEdge> {
        &self.half_edges
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: &TriCell) -> bool {
        self.cells.contains(c)
    }

    pub fn is_closed(&self) -> bool {
        self.free_edges.is_empty()
    }

    /// Centre of the hexagonal families in doubled `(i, j)` coordinates.
    pub fn center2(&self) -> Option<(i64, i64)> {
        self.center2
    }

    pub fn count_orient(&self, o: Orient) -> usize {
        self.cells.iter().filter(|c| c.orient == o).count()
    }

    pub fn is_balanced(&self) -> bool {
        self.count_orient(Orient::Left) == self.count_orient(Orient::Right)
    }

    fn cells_on(&self, e: &LatticeEdge) -> Vec<TriCell> {
        let (p, q) = e.endpoints();
        let mut out = Vec::new();
        if !e.is_unit() {
            return out;
        }
        // the two triangles on an edge share its endpoints
        let candidates: Vec<TriCell> = if e.is_vertical() {
            let v = p.j.min(q.j) + 1;
            vec![TriCell::at(p.i - 1, v), TriCell::at(p.i, v)]
        } else {
            let u = p.i.min(q.i);
            let v = (p.j + q.j).div_euclid(2);
            (v - 1..=v + 2).map(|w| TriCell::at(u, w)).collect()
        };
        for c in candidates {
            let vs = c.vertices();
            if vs.contains(&p) && vs.contains(&q) && self.cells.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// Lattice edges with exactly one incident cell in the region.
    pub fn boundary_edges(&self) -> BTreeSet<LatticeEdge> {
        let mut count: BTreeMap<LatticeEdge, u8> = BTreeMap::new();
        for c in &self.cells {
            for e in c.edges() {
                *count.entry(e).or_default() += 1;
            }
        }
        count.into_iter().filter(|&(_, n)| n == 1).map(|(e, _)| e).collect()
    }

    /// Edge-connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<TriCell>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.cells {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(c) = queue.pop_front() {
                for (n, _) in c.neighbors() {
                    if self.cells.contains(&n) && seen.insert(n) {
                        comp.push(n);
                        queue.push_back(n);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn isometry(&self, kind: SymmetryKind) -> Result<Isometry> {
        match self.center2 {
            Some(c) => Ok(Isometry::new(kind, c)),
            None => Err(Error::SymmetryAbsent(format!(
                "{kind}: {} has no symmetry centre",
                self.params.family()
            ))),
        }
    }

    /// Whether the cell set and edge annotations are fixed by the isometry.
    pub fn is_fixed_by(&self, kind: SymmetryKind) -> bool {
        let Ok(g) = self.isometry(kind) else {
            return kind == SymmetryKind::Identity;
        };
        let cells_ok = self
            .cells
            .iter()
            .all(|c| g.apply(c).is_some_and(|d| self.cells.contains(&d)));
        let edges_ok = |set: &BTreeSet<LatticeEdge>| {
            set.iter().all(|e| g.apply_edge(e).is_some_and(|f| set.contains(&f)))
        };
        cells_ok && edges_ok(&self.free_edges) && edges_ok(&self.half_edges)
    }

    /// Inclusive bounds `(i_min, i_max, j_min, j_max)` of all cell vertices.
    pub fn bounds(&self) -> Option<(i32, i32, i32, i32)> {
        let mut it = self.cells.iter().flat_map(|c| c.vertices());
        let first = it.next()?;
        let init = (first.i, first.i, first.j, first.j);
        Some(it.fold(init, |(a, b, c, d), p| (a.min(p.i), b.max(p.i), c.min(p.j), d.max(p.j))))
    }
}

fn symmetry_center(p: &RegionParams) -> Option<(i64, i64)> {
    match p {
        RegionParams::Hexagon { a, b, c } => {
            let (a, b, c) = (*a as i64, *b as i64, *c as i64);
            Some((a + b, a - b + 2 * c))
        }
        RegionParams::HoledHexagon { a, b, .. } => Some((2 * *a as i64, 4 * *b as i64)),
        RegionParams::CoredHexagon { a, b, .. } => {
            Some((2 * (2 * *a as i64 - 1), 4 * *b as i64))
        }
        RegionParams::DRegion { .. } | RegionParams::RBarRegion { .. } => None,
    }
}

fn hexagon_cells(a: u32, b: u32, c: u32) -> BTreeSet<TriCell> {
    let (a, b, c) = (a as i32, b as i32, c as i32);
    let inside = |p: Point| {
        (0..=a + b).contains(&p.i)
            && (-2 * b..=2 * c).contains(&(p.j - p.i))
            && (0..=2 * a + 2 * c).contains(&(p.j + p.i))
    };
    let mut cells = BTreeSet::new();
    for u in 0..a + b {
        for v in -2 * b - 1..=2 * a + 2 * c + 1 {
            let cell = TriCell::at(u, v);
            if cell.vertices().iter().all(|&p| inside(p)) {
                cells.insert(cell);
            }
        }
    }
    cells
}

/// Hexagon with side lengths `a, b, c, a, b, c` clockwise from the northwest.
///
/// The western side lies on column 0 between `j = 0` and `j = 2c`.
pub fn hexagon(a: u32, b: u32, c: u32) -> Result<Region> {
    if a == 0 || b == 0 || c == 0 {
        return param(format!("hexagon sides must be positive, got ({a}, {b}, {c})"));
    }
    let cells = hexagon_cells(a, b, c);
    Region::from_parts(RegionParams::Hexagon { a, b, c }, cells, BTreeSet::new(), BTreeSet::new())
}

pub(crate) fn check_holes(a: u32, ks: &[u32]) -> Result<()> {
    for w in ks.windows(2) {
        if w[0] >= w[1] {
            return param(format!("hole positions must increase strictly, got {ks:?}"));
        }
    }
    if let Some(&k) = ks.iter().find(|&&k| k == 0 || 2 * k > a) {
        return param(format!("hole position {k} outside 1..={}", a / 2));
    }
    Ok(())
}

/// The four unit triangles of the left-pointing side-two hole whose vertical
/// side is on column `2k`, centred on row `axis`.
fn hole_cells(k: u32, axis: i32) -> [TriCell; 4] {
    let k = k as i32;
    [
        TriCell::at(2 * k - 2, axis),
        TriCell::at(2 * k - 1, axis),
        TriCell::at(2 * k - 1, axis - 1),
        TriCell::at(2 * k - 1, axis + 1),
    ]
}

/// Mirror across the vertical line `i = col`.
fn mirror_v(c: TriCell, col: i32) -> TriCell {
    TriCell::at(2 * col - c.u - 1, c.v)
}

fn holed_cells(a: u32, b: u32, ks: &[u32]) -> BTreeSet<TriCell> {
    let mut cells = hexagon_cells(a, a, 2 * b);
    let axis = 2 * b as i32;
    for &k in ks {
        for c in hole_cells(k, axis) {
            let removed = cells.remove(&c) & cells.remove(&mirror_v(c, a as i32));
            assert!(removed, "holes overlap");
        }
    }
    cells
}

/// Hexagon `a, a, 2b, a, a, 2b` with `2s` side-two triangular holes on its
/// horizontal axis.
///
/// Hole `k` points left and has its vertical side on column `2k`, so `k = 1`
/// touches the western side; each hole is paired with its mirror image.
///
/// `a = 0` without holes is the empty region, the end point of stripping
/// boundary holes.
pub fn holed_hexagon(a: u32, b: u32, ks: &[u32]) -> Result<Region> {
    if b == 0 || (a == 0 && !ks.is_empty()) {
        return param(format!("a and b must be positive, got ({a}, {b})"));
    }
    check_holes(a, ks)?;
    let cells = holed_cells(a, b, ks);
    let params = RegionParams::HoledHexagon { a, b, ks: ks.to_vec() };
    Region::from_parts(params, cells, BTreeSet::new(), BTreeSet::new())
}

/// First hole that would overlap a central rhombus of side `2x - 1` in the
/// holed hexagon of side `2a - 1`.
pub fn core_collision(a: u32, ks: &[u32], x: u32) -> Option<u32> {
    ks.iter().copied().find(|&k| a < k + x)
}

/// Holed hexagon of side `2a - 1` with its central horizontal rhombus of
/// side `2x - 1` removed.
pub fn cored_hexagon(a: u32, b: u32, ks: &[u32], x: u32) -> Result<Region> {
    if a == 0 || b == 0 {
        return param(format!("a and b must be positive, got ({a}, {b})"));
    }
    if x == 0 || x > a {
        return param(format!("core parameter x={x} outside 1..={a}"));
    }
    let side = 2 * a - 1;
    check_holes(side, ks)?;
    let n = (2 * x - 1) as i32;
    if let Some(k) = core_collision(a, ks, x) {
        return Err(Error::CoreCollision { k, side: n as u32 });
    }
    let mut cells = holed_cells(side, b, ks);
    let (aa, bb) = (side as i32, 2 * b as i32);
    let in_core = |p: Point| {
        (bb - aa - n..=bb - aa + n).contains(&(p.j - p.i))
            && (bb + aa - n..=bb + aa + n).contains(&(p.j + p.i))
    };
    cells.retain(|c| !c.vertices().iter().all(|&p| in_core(p)));
    let params = RegionParams::CoredHexagon { a, b, ks: ks.to_vec(), x };
    Region::from_parts(params, cells, BTreeSet::new(), BTreeSet::new())
}

fn check_index_list(name: &str, xs: &[u32], max: u32) -> Result<()> {
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return param(format!("{name} must increase strictly, got {xs:?}"));
    }
    if let Some(&i) = xs.iter().find(|&&i| i == 0 || i > max) {
        return param(format!("{name} index {i} outside 1..={max}"));
    }
    Ok(())
}

/// Upper-left quarter of the holed hexagon of side `2a` (`eps = -1`) or
/// `2a + 1` (`eps = 0`) whose hole set is the complement of `is`, with its
/// vertical boundary on the symmetry axis free.
pub fn d_region(a: u32, b: u32, eps: i32, is: &[u32]) -> Result<Region> {
    if a == 0 || b == 0 {
        return param(format!("a and b must be positive, got ({a}, {b})"));
    }
    let side = match eps {
        -1 => 2 * a,
        0 => 2 * a + 1,
        _ => return param(format!("eps must be -1 or 0, got {eps}")),
    };
    check_index_list("is", is, a)?;
    let ks: Vec<u32> = (1..=a).rev().filter(|r| !is.contains(r)).map(|r| a - r + 1).collect();
    let axis = 2 * b as i32;
    let col = side as i32;
    let cells: BTreeSet<TriCell> = holed_cells(side, b, &ks)
        .into_iter()
        .filter(|c| c.v > axis && c.u < col)
        .collect();
    let free = cells
        .iter()
        .filter(|c| c.u == col - 1 && c.orient == Orient::Left)
        .map(|c| LatticeEdge::new(Point::new(col, c.v - 1), Point::new(col, c.v + 1)))
        .collect();
    let params = RegionParams::DRegion { a, b, eps, is: is.to_vec() };
    Region::from_parts(params, cells, free, BTreeSet::new())
}

/// Half region cut from the hexagon `2a, 2a, 2b` (even form, `|q| = |l| + 1`)
/// or `2a + 1, 2a + 1, 2b` (odd form, `|q| = |l|`).
///
/// It consists of the part above the horizontal axis together with the axis
/// pairs left of the vertical axis. A missing upper index `i` removes the axis
/// pair `a - i` and the triangle above its right cell; a missing lower index
/// `t` removes the triangle on row `2b + 1` at column `2a + 2t` (even form) or
/// `2a + 2t` (odd form), right of the vertical axis. The vertical edge inside
/// each remaining axis pair carries weight 1/2.
pub fn rbar_region(l: &[u32], q: &[u32], base: u32) -> Result<Region> {
    if q.is_empty() {
        return param("upper index list q must be non-empty");
    }
    if base == 0 {
        return param("base must be positive");
    }
    let even = if q.len() == l.len() + 1 {
        true
    } else if q.len() == l.len() {
        false
    } else {
        return param(format!("list lengths {} and {} are incompatible", l.len(), q.len()));
    };
    let qmax = *q.iter().max().unwrap();
    let lmax = l.iter().max().copied().unwrap_or(0);
    let a = if even { qmax.max(lmax + 1) } else { qmax.max(lmax) };
    check_index_list("q", q, a)?;
    check_index_list("l", l, if even { a - 1 } else { a })?;

    let side = if even { 2 * a } else { 2 * a + 1 };
    let axis = 2 * base as i32;
    let ai = a as i32;
    let mut cells: BTreeSet<TriCell> = hexagon_cells(side, side, 2 * base)
        .into_iter()
        .filter(|c| c.v > axis)
        .collect();
    let mut half = BTreeSet::new();
    for m in 0..ai {
        let i = (ai - m) as u32;
        if q.contains(&i) {
            cells.insert(TriCell::at(2 * m, axis));
            cells.insert(TriCell::at(2 * m + 1, axis));
            let x = 2 * m + 1;
            half.insert(LatticeEdge::new(Point::new(x, axis - 1), Point::new(x, axis + 1)));
        } else {
            cells.remove(&TriCell::at(2 * m + 1, axis + 1));
        }
    }
    let tmax = if even { a - 1 } else { a };
    for t in 1..=tmax {
        if !l.contains(&t) {
            cells.remove(&TriCell::at(2 * ai + 2 * t as i32, axis + 1));
        }
    }
    let params = RegionParams::RBarRegion { l: l.to_vec(), q: q.to_vec(), base };
    Region::from_parts(params, cells, BTreeSet::new(), half)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_cell_counts() {
        for a in 1..5 {
            for b in 1..5 {
                for c in 1..5 {
                    let r = hexagon(a, b, c).unwrap();
                    assert_eq!(r.len() as u32, 2 * (a * b + b * c + c * a));
                    assert!(r.is_balanced());
                    assert!(r.is_connected());
                    assert!(r.is_fixed_by(SymmetryKind::Rot180));
                }
            }
        }
        let unit = hexagon(1, 1, 1).unwrap();
        assert_eq!(unit.count_orient(Orient::Left), 3);
        assert!(hexagon(0, 1, 1).is_err());
    }

    #[test]
    fn hexagon_symmetries() {
        let h = hexagon(2, 2, 2).unwrap();
        for k in SymmetryKind::ALL {
            assert!(h.is_fixed_by(k), "{k}");
        }
        let h = hexagon(1, 1, 2).unwrap();
        assert!(!h.is_fixed_by(SymmetryKind::Rot60));
        assert!(h.is_fixed_by(SymmetryKind::ReflV));
        assert!(h.is_fixed_by(SymmetryKind::ReflH));
        let h = hexagon(1, 2, 3).unwrap();
        assert!(!h.is_fixed_by(SymmetryKind::ReflV));
    }

    #[test]
    fn holed_hexagon_area_and_symmetry() {
        let r = holed_hexagon(15, 5, &[2, 5, 7]).unwrap();
        assert_eq!(r.len(), 1026);
        for (a, b, ks) in [(15, 5, vec![2, 5, 7]), (10, 4, vec![2, 4]), (2, 1, vec![1])] {
            let r = holed_hexagon(a, b, &ks).unwrap();
            assert_eq!(r.len() as u32, 2 * (a * a + 4 * a * b) - 8 * ks.len() as u32);
            assert!(r.is_balanced());
            for k in [SymmetryKind::ReflH, SymmetryKind::ReflV, SymmetryKind::Rot180] {
                assert!(r.is_fixed_by(k));
            }
        }
        assert!(holed_hexagon(4, 1, &[3]).is_err());
        assert!(holed_hexagon(6, 1, &[2, 2]).is_err());
        assert!(holed_hexagon(6, 1, &[0]).is_err());
    }

    #[test]
    fn touching_holes_split_small_hexagon() {
        let r = holed_hexagon(2, 2, &[1]).unwrap();
        assert_eq!(r.components().len(), 2);
    }

    #[test]
    fn cored_hexagon_area() {
        let r = cored_hexagon(8, 5, &[2, 4], 2).unwrap();
        let full = holed_hexagon(15, 5, &[2, 4]).unwrap();
        assert_eq!(full.len() - r.len(), 2 * 9);
        for k in [SymmetryKind::ReflH, SymmetryKind::ReflV, SymmetryKind::Rot180] {
            assert!(r.is_fixed_by(k));
        }
        let r = cored_hexagon(3, 2, &[], 1).unwrap();
        assert_eq!(hexagon(5, 5, 4).unwrap().len() - r.len(), 2);
        assert_eq!(
            cored_hexagon(4, 1, &[2, 3], 2),
            Err(Error::CoreCollision { k: 3, side: 3 })
        );
        assert!(cored_hexagon(4, 1, &[2, 3], 1).is_ok());
    }

    #[test]
    fn d_region_free_edges_are_boundary() {
        let r = d_region(5, 4, -1, &[1, 3, 5]).unwrap();
        assert!(!r.free_edges().is_empty());
        let boundary = r.boundary_edges();
        assert!(r.free_edges().iter().all(|e| boundary.contains(e)));
        assert!(d_region(3, 3, 0, &[1, 3]).is_ok());
        assert!(d_region(2, 1, -1, &[3]).is_err());
    }

    #[test]
    fn rbar_matches_lists() {
        let r = rbar_region(&[2, 4], &[1, 3, 5], 4).unwrap();
        assert_eq!(r.half_edges().len(), 3);
        assert!(rbar_region(&[], &[], 1).is_err());
        assert!(rbar_region(&[1, 2, 3], &[1], 1).is_err());
        let odd = rbar_region(&[1, 3], &[1, 3], 3).unwrap();
        assert_eq!(odd.half_edges().len(), 2);
    }
}
