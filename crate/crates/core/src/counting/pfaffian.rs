use std::collections::VecDeque;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::duality::MatchGraph;
use crate::error::{Error, Result};

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Orientation of every edge (`true` means `u -> v`) such that each face
/// except one has an odd number of edges running clockwise.
///
/// Spanning-tree edges are oriented arbitrarily; the remaining edges form a
/// spanning tree of the faces and are fixed leaf-first. With an even number
/// of vertices the unconstrained face satisfies the rule as well.
pub fn kasteleyn_orientation(g: &MatchGraph) -> Result<Vec<bool>> {
    let faces = g.faces()?;
    let m = g.edge_count();
    let adj = g.adjacency();
    let mut orient: Vec<Option<bool>> = vec![None; m];
    let mut seen = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    orient[e] = Some(true);
                    queue.push_back(y);
                }
            }
        }
    }
    let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut open = vec![0usize; faces.len()];
    for (f, face) in faces.iter().enumerate() {
        for &(e, _) in face {
            faces_of[e].push(f);
            if orient[e].is_none() {
                open[f] += 1;
            }
        }
    }
    let mut done = vec![false; faces.len()];
    // one root face per component, the last traced there
    let mut comp_root = vec![usize::MAX; g.vertex_count()];
    let comps = g.components();
    for (c, members) in comps.iter().enumerate() {
        for &v in members {
            comp_root[v] = c;
        }
    }
    let mut root_face = vec![usize::MAX; comps.len()];
    for (f, face) in faces.iter().enumerate() {
        root_face[comp_root[g.edges()[face[0].0].u]] = f;
    }
    for &f in &root_face {
        if f != usize::MAX {
            done[f] = true;
        }
    }
    let mut queue: VecDeque<usize> = (0..faces.len()).filter(|&f| open[f] == 1 && !done[f]).collect();
    while let Some(f) = queue.pop_front() {
        if done[f] || open[f] != 1 {
            continue;
        }
        done[f] = true;
        let mut against = 0;
        let mut pending = None;
        for &(e, fwd) in &faces[f] {
            match orient[e] {
                Some(o) => against += usize::from(o != fwd),
                None => pending = Some((e, fwd)),
            }
        }
        let (e, fwd) = pending.expect("one open edge");
        orient[e] = Some(if against % 2 == 0 { !fwd } else { fwd });
        for &h in &faces_of[e] {
            open[h] -= 1;
            if open[h] == 1 && !done[h] {
                queue.push_back(h);
            }
        }
    }
    orient
        .into_iter()
        .map(|o| o.ok_or_else(|| Error::Contract("face structure is not a tree".into())))
        .collect()
}

fn denominator_lcm(g: &MatchGraph) -> BigInt {
    g.edges().iter().fold(BigInt::one(), |acc, e| acc.lcm(e.weight.denom()))
}

/// Pfaffian matching generating function of a connected, loopless graph
/// with a planar rotation system.
fn pfaffian_connected(g: &MatchGraph) -> Result<BigRational> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Ok(BigRational::zero());
    }
    if n == 0 {
        return Ok(BigRational::one());
    }
    let orient = kasteleyn_orientation(g)?;
    let d = denominator_lcm(g);
    let scaled: Vec<BigInt> = g
        .edges()
        .iter()
        .map(|e| (&e.weight * BigRational::from_integer(d.clone())).to_integer())
        .collect();
    let value = if let Some(color) = g.bipartition() {
        let mut idx = vec![0; n];
        let (mut nb, mut nw) = (0, 0);
        for v in 0..n {
            if color[v] {
                idx[v] = nw;
                nw += 1;
            } else {
                idx[v] = nb;
                nb += 1;
            }
        }
        if nb != nw {
            return Ok(BigRational::zero());
        }
        let mut b = vec![vec![BigInt::zero(); nb]; nb];
        for (k, e) in g.edges().iter().enumerate() {
            let (black, white, along) =
                if !color[e.u] { (e.u, e.v, orient[k]) } else { (e.v, e.u, !orient[k]) };
            let w = &scaled[k];
            let cell = &mut b[idx[black]][idx[white]];
            *cell = if along { &*cell + w } else { &*cell - w };
        }
        bareiss_det(b).abs()
    } else {
        let mut a = vec![vec![BigInt::zero(); n]; n];
        for (k, e) in g.edges().iter().enumerate() {
            let (x, y) = if orient[k] { (e.u, e.v) } else { (e.v, e.u) };
            a[x][y] += &scaled[k];
            a[y][x] -= &scaled[k];
        }
        let det = bareiss_det(a);
        if det.sign() == Sign::Minus {
            return Err(Error::Contract("skew determinant is negative".into()));
        }
        let root = det.sqrt();
        if &root * &root != det {
            return Err(Error::Contract("skew determinant is not a square".into()));
        }
        root
    };
    let scale = num_traits::pow(d, n / 2);
    Ok(BigRational::new(value, scale))
}

const MAX_LOOPS: usize = 16;

/// Matching generating function of an embedded graph via Kasteleyn
/// orientations, one component at a time.
///
/// Loops are handled by summing over which loop vertices they cover.
pub fn pfaffian_mgf(g: &MatchGraph) -> Result<BigRational> {
    if g.rotation().is_none() {
        return Err(Error::EmbeddingRequired);
    }
    if g.has_optional() {
        return Err(Error::Contract("optional vertices need the transfer-matrix counter".into()));
    }
    let loops = g.loops();
    if loops.len() > MAX_LOOPS {
        return Err(Error::Contract(format!("{} loops exceed the limit {MAX_LOOPS}", loops.len())));
    }
    let mut total = BigRational::zero();
    for subset in 0u32..1 << loops.len() {
        let mut keep = vec![true; g.vertex_count()];
        let mut w = BigRational::one();
        let mut clash = false;
        for (k, (v, lw)) in loops.iter().enumerate() {
            if subset & (1 << k) != 0 {
                clash |= !keep[*v];
                keep[*v] = false;
                w *= lw;
            }
        }
        if clash {
            continue;
        }
        let (mut rest, _) = g.induced(&keep);
        rest = strip_loops(&rest);
        let mut value = w;
        for comp in rest.components() {
            let mut mask = vec![false; rest.vertex_count()];
            for &v in &comp {
                mask[v] = true;
            }
            value *= pfaffian_connected(&rest.induced(&mask).0)?;
            if value.is_zero() {
                break;
            }
        }
        total += value;
    }
    Ok(total)
}

fn strip_loops(g: &MatchGraph) -> MatchGraph {
    let mut out = MatchGraph::new();
    for (v, t) in g.tags().iter().enumerate() {
        out.add_vertex(t.clone(), g.is_optional(v));
    }
    for e in g.edges() {
        out.add_edge(e.u, e.v, e.weight.clone());
    }
    if let Some(rot) = g.rotation() {
        out.set_rotation(rot.to_vec()).expect("same edges");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::dual_graph;
    use crate::lattice::hexagon;

    fn int(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn bareiss_small_determinants() {
        assert_eq!(bareiss_det(int(&[&[2, 3], &[1, 4]])), 5.into());
        assert_eq!(bareiss_det(int(&[&[0, 1], &[1, 0]])), (-1).into());
        assert_eq!(bareiss_det(int(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), (-3).into());
        assert_eq!(bareiss_det(int(&[&[1, 2], &[2, 4]])), 0.into());
        assert_eq!(bareiss_det(vec![]), 1.into());
    }

    #[test]
    fn kasteleyn_faces_are_odd() {
        let g = dual_graph(&hexagon(2, 3, 2).unwrap());
        let orient = kasteleyn_orientation(&g).unwrap();
        let faces = g.faces().unwrap();
        let odd = faces
            .iter()
            .filter(|f| f.iter().filter(|&&(e, fwd)| orient[e] != fwd).count() % 2 == 1)
            .count();
        // the unconstrained face is odd too because the vertex count is even
        assert_eq!(odd, faces.len());
    }

    #[test]
    fn hexagon_counts() {
        let g = dual_graph(&hexagon(1, 1, 1).unwrap());
        assert_eq!(pfaffian_mgf(&g).unwrap(), BigRational::from_integer(2.into()));
        let g = dual_graph(&hexagon(2, 2, 2).unwrap());
        assert_eq!(pfaffian_mgf(&g).unwrap(), BigRational::from_integer(20.into()));
    }

    #[test]
    fn needs_embedding() {
        let g = MatchGraph::from_edges(2, &[(0, 1)]);
        assert_eq!(pfaffian_mgf(&g), Err(Error::EmbeddingRequired));
    }
}
