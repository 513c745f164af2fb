use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lattice::{Isometry, Region, SymmetryKind, TriCell};

/// An isometry fixing a region, realised as a permutation of its cells.
///
/// `perm[k]` is the index of the image of the `k`-th cell in sorted order,
/// which is also the vertex numbering of [`super::dual_graph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryElement {
    pub kind: Option<SymmetryKind>,
    pub isometry: Isometry,
    pub perm: Vec<usize>,
}

impl SymmetryElement {
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &p)| k == p)
    }

    /// Number of applications needed to return to the identity.
    pub fn order(&self) -> usize {
        let mut p = self.perm.clone();
        let mut n = 1;
        while p.iter().enumerate().any(|(k, &x)| k != x) {
            p = p.iter().map(|&x| self.perm[x]).collect();
            n += 1;
        }
        n
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &SymmetryElement) -> SymmetryElement {
        SymmetryElement {
            kind: None,
            isometry: self.isometry.compose(&other.isometry),
            perm: other.perm.iter().map(|&x| self.perm[x]).collect(),
        }
    }

    pub fn fixed_points(&self) -> usize {
        self.perm.iter().enumerate().filter(|(k, &p)| *k == p).count()
    }
}

fn realise(r: &Region, g: Isometry, kind: Option<SymmetryKind>) -> Result<SymmetryElement> {
    let cells: Vec<TriCell> = r.cells().iter().copied().collect();
    let index: HashMap<TriCell, usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let name = kind.map_or_else(|| "composite".to_string(), |k| k.to_string());
    let mut perm = Vec::with_capacity(cells.len());
    for c in &cells {
        let img = g.apply(c).and_then(|d| index.get(&d).copied());
        match img {
            Some(k) => perm.push(k),
            None => return Err(Error::SymmetryAbsent(format!("{name} moves {c} outside"))),
        }
    }
    for (k, c) in cells.iter().enumerate() {
        for (n, _) in c.neighbors() {
            if let Some(&m) = index.get(&n) {
                assert!(cells[perm[k]].is_adjacent(&cells[perm[m]]), "isometry broke adjacency");
            }
        }
    }
    let annotations_fixed = [r.free_edges(), r.half_edges()]
        .iter()
        .all(|set| set.iter().all(|e| g.apply_edge(e).is_some_and(|f| set.contains(&f))));
    if !annotations_fixed {
        return Err(Error::SymmetryAbsent(format!("{name} moves the boundary annotations")));
    }
    Ok(SymmetryElement { kind, isometry: g, perm })
}

/// The named isometry of a region as a cell permutation.
pub fn symmetry(r: &Region, kind: SymmetryKind) -> Result<SymmetryElement> {
    realise(r, r.isometry(kind)?, Some(kind))
}

/// Finite group of region symmetries, identity first.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    pub elements: Vec<SymmetryElement>,
}

impl SymmetryGroup {
    /// Closure of the given generators.
    pub fn generate(r: &Region, gens: &[SymmetryKind]) -> Result<SymmetryGroup> {
        let center = r.center2().unwrap_or((0, 0));
        let mut elements = vec![realise(r, Isometry::identity(center), Some(SymmetryKind::Identity))?];
        let gens: Vec<SymmetryElement> =
            gens.iter().map(|&k| symmetry(r, k)).collect::<Result<_>>()?;
        let mut k = 0;
        while k < elements.len() {
            for g in &gens {
                let h = g.compose(&elements[k]);
                if !elements.iter().any(|e| e.isometry == h.isometry) {
                    elements.push(h);
                }
            }
            k += 1;
        }
        Ok(SymmetryGroup { elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// True if no element reverses orientation.
    pub fn is_rotation_group(&self) -> bool {
        self.elements.iter().all(|e| !e.isometry_reflects())
    }

    pub fn perms(&self) -> Vec<Vec<usize>> {
        self.elements.iter().map(|e| e.perm.clone()).collect()
    }
}

impl SymmetryElement {
    pub fn isometry_reflects(&self) -> bool {
        self.isometry.reflects()
    }
}
