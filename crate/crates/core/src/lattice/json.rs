use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::cell::{LatticeEdge, Orient, Point, TriCell};
use super::region::{Region, RegionParams};
use crate::error::{Error, Result};

const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    v: u32,
    #[serde(flatten)]
    params: RegionParams,
    cells: Vec<(i32, i32, String)>,
    free_edges: Vec<[[i32; 2]; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    half_edges: Vec<[[i32; 2]; 2]>,
}

fn edge_pair(e: &LatticeEdge) -> [[i32; 2]; 2] {
    let (p, q) = e.endpoints();
    [[p.i, p.j], [q.i, q.j]]
}

/// Serializes a region as versioned JSON with cells in sorted order.
pub fn serialize_region(r: &Region) -> Vec<u8> {
    let doc = Doc {
        v: VERSION,
        params: r.params().clone(),
        cells: r
            .cells()
            .iter()
            .map(|c| (c.u, c.v, c.orient.symbol().to_string()))
            .collect(),
        free_edges: r.free_edges().iter().map(edge_pair).collect(),
        half_edges: r.half_edges().iter().map(edge_pair).collect(),
    };
    serde_json::to_vec(&doc).expect("region document is always serializable")
}

/// Byte offset of a 1-based line/column position.
fn byte_offset(input: &[u8], line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let mut start = 0;
    for _ in 1..line {
        match input[start..].iter().position(|&b| b == b'\n') {
            Some(k) => start += k + 1,
            None => return input.len(),
        }
    }
    (start + column.saturating_sub(1)).min(input.len())
}

fn parse_error(input: &[u8], e: serde_json::Error) -> Error {
    Error::Parse { offset: byte_offset(input, e.line(), e.column()), message: e.to_string() }
}

fn to_edge(pair: [[i32; 2]; 2]) -> Result<LatticeEdge> {
    let e = LatticeEdge::new(Point::new(pair[0][0], pair[0][1]), Point::new(pair[1][0], pair[1][1]));
    if !e.is_unit() {
        return Err(Error::Parse { offset: 0, message: format!("{pair:?} is not a lattice edge") });
    }
    Ok(e)
}

/// Parses a document produced by [`serialize_region`].
pub fn deserialize_region(input: &[u8]) -> Result<Region> {
    let doc: Doc = serde_json::from_slice(input).map_err(|e| parse_error(input, e))?;
    if doc.v != VERSION {
        return Err(Error::Parse { offset: 0, message: format!("unsupported version {}", doc.v) });
    }
    let mut cells = BTreeSet::new();
    for (u, v, o) in doc.cells {
        let cell = Orient::from_symbol(&o)
            .and_then(|o| TriCell::with_orient(u, v, o))
            .ok_or_else(|| Error::Parse {
                offset: 0,
                message: format!("invalid cell ({u}, {v}, {o})"),
            })?;
        cells.insert(cell);
    }
    let free = doc.free_edges.into_iter().map(to_edge).collect::<Result<_>>()?;
    let half = doc.half_edges.into_iter().map(to_edge).collect::<Result<_>>()?;
    Region::from_parts(doc.params, cells, free, half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{d_region, hexagon, holed_hexagon, rbar_region};

    #[test]
    fn roundtrip() {
        for r in [
            hexagon(2, 2, 2).unwrap(),
            d_region(3, 2, -1, &[1, 3]).unwrap(),
            rbar_region(&[2, 4], &[1, 3, 5], 4).unwrap(),
        ] {
            let bytes = serialize_region(&r);
            assert_eq!(deserialize_region(&bytes).unwrap(), r);
        }
    }

    #[test]
    fn metadata_is_echoed() {
        let r = holed_hexagon(10, 4, &[2, 4]).unwrap();
        let doc: serde_json::Value = serde_json::from_slice(&serialize_region(&r)).unwrap();
        assert_eq!(doc["v"], 1);
        assert_eq!(doc["family"], "HoledHexagon");
        assert_eq!(doc["params"]["a"], 10);
        assert_eq!(doc["params"]["b"], 4);
        assert_eq!(doc["params"]["ks"], serde_json::json!([2, 4]));
    }

    #[test]
    fn malformed_input_reports_offset() {
        assert!(matches!(deserialize_region(b"{}"), Err(Error::Parse { .. })));
        match deserialize_region(b"{\n  \"v\": 1,\n  \"cells\": [1,]}") {
            Err(Error::Parse { offset, .. }) => assert!(offset > 10),
            other => panic!("{other:?}"),
        }
        let bad = br#"{"v":1,"family":"Hexagon","params":{"a":1,"b":1,"c":1},"cells":[[0,0,"R"]],"free_edges":[]}"#;
        assert!(deserialize_region(bad).is_err());
    }
}
