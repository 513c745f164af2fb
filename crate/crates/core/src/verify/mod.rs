//! Both sides of every factorization identity, computed by separate routes.

mod planepart;
mod sweep;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub use planepart::{class_counts, for_each_plane_partition, PpClass};
pub use sweep::{grid_points, sweep, write_csv, Grid, KsChoice, SweepRow, THREADS_ENV};

use crate::counting::{
    count_matchings_pfaffian, count_symmetric_tilings, count_tilings, count_tilings_free,
    count_tilings_weighted, matching_mgf, SymMethod,
};
use crate::duality::{dual_graph, factorization_split, quotient_graph, SymmetryGroup};
use crate::error::{param, Error, Result};
use crate::formulas::{
    cored_count, cored_list, d_count, d_indices, hole_lists, holed_count_even, holed_count_odd,
    reduce_k1,
};
use crate::lattice::{
    cored_hexagon, d_region, hexagon, holed_hexagon, rbar_region, Region, SymmetryKind,
};

use SymmetryKind::{ReflH, ReflV, Rot120, Rot180, Rot60};

/// Identities the checker knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum IdentityId {
    /// `M(H) = M_|(H) M_-(H)` on `H = hexagon(a, a, 2b)`.
    I1_9,
    /// `M(H/Z2) = M_|(H/Z2)^2` on `hexagon(a, a, 2b)`.
    I1_10,
    /// `M(H/Z3) = M_|(H/Z3) M_-(H/Z3)` on `hexagon(2a, 2a, 2a)`.
    I1_11,
    /// `M(H/Z6) = M_|(H/Z6)^2` on `hexagon(2a, 2a, 2a)`.
    I1_12,
    /// Half-turn count equals the square of the doubly symmetric count on
    /// `holed_hexagon(a, b, ks)`.
    T2_1_even,
    /// The same on `cored_hexagon(a, b, ks, x)`.
    T2_1_cored,
    /// Half-turn count of `holed_hexagon(a, b, ks)` equals `2^(a/2 - s)`
    /// times the matching generating function of the split graph.
    E3_1,
    /// Product formula against the half-turn count of `holed_hexagon(2a, b, ks)`.
    E3_5,
    /// Quarter-region formula against the free-boundary count, width `2a`.
    E3_7,
    /// Half-turn count of `holed_hexagon(2a+1, b, ks)` against the weighted
    /// zig-zag region.
    E3_9,
    /// Product formula against the half-turn count of `holed_hexagon(2a+1, b, ks)`.
    E3_10,
    /// Quarter-region formula against the free-boundary count, width `2a + 1`.
    E3_12,
    /// Product formula against the half-turn count of `cored_hexagon(a, b, ks, x)`.
    E3_13,
    /// The four plane-partition identities through the tiling correspondence.
    FOUR_CLASS,
}

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        IdentityId::I1_9,
        IdentityId::I1_10,
        IdentityId::I1_11,
        IdentityId::I1_12,
        IdentityId::T2_1_even,
        IdentityId::T2_1_cored,
        IdentityId::E3_1,
        IdentityId::E3_5,
        IdentityId::E3_7,
        IdentityId::E3_9,
        IdentityId::E3_10,
        IdentityId::E3_12,
        IdentityId::E3_13,
        IdentityId::FOUR_CLASS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::I1_9 => "I1_9",
            IdentityId::I1_10 => "I1_10",
            IdentityId::I1_11 => "I1_11",
            IdentityId::I1_12 => "I1_12",
            IdentityId::T2_1_even => "T2_1_even",
            IdentityId::T2_1_cored => "T2_1_cored",
            IdentityId::E3_1 => "E3_1",
            IdentityId::E3_5 => "E3_5",
            IdentityId::E3_7 => "E3_7",
            IdentityId::E3_9 => "E3_9",
            IdentityId::E3_10 => "E3_10",
            IdentityId::E3_12 => "E3_12",
            IdentityId::E3_13 => "E3_13",
            IdentityId::FOUR_CLASS => "FOUR_CLASS",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<IdentityId> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Param(format!("unknown identity {s:?}")))
    }
}

/// Parameters of one check. Their meaning depends on the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub a: u32,
    pub b: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ks: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<u32>,
}

impl Params {
    pub fn new(a: u32, b: u32) -> Params {
        Params { a, b, ..Params::default() }
    }

    pub fn with_ks(mut self, ks: &[u32]) -> Params {
        self.ks = ks.to_vec();
        self
    }

    pub fn with_x(mut self, x: u32) -> Params {
        self.x = Some(x);
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={}", self.a, self.b)?;
        if !self.ks.is_empty() {
            let ks: Vec<String> = self.ks.iter().map(u32::to_string).collect();
            write!(f, " ks={}", ks.join(","))?;
        }
        if let Some(x) = self.x {
            write!(f, " x={x}")?;
        }
        Ok(())
    }
}

/// One side of an identity: its value, how it is written, and which code
/// path produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Side {
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    pub expr: String,
    pub source: &'static str,
}

fn ser_rational<S: serde::Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn big(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

impl Side {
    pub fn count(v: &BigUint, source: &'static str) -> Side {
        Side { value: big(v), expr: v.to_string(), source }
    }

    pub fn rational(v: BigRational, source: &'static str) -> Side {
        Side { expr: v.to_string(), value: v, source }
    }

    pub fn product(fs: &[BigUint], source: &'static str) -> Side {
        let value = fs.iter().fold(BigRational::one(), |acc, f| acc * big(f));
        let parts: Vec<String> = fs.iter().map(BigUint::to_string).collect();
        Side { value, expr: parts.join(" × "), source }
    }

    pub fn square(v: &BigUint, source: &'static str) -> Side {
        Side { value: big(v) * big(v), expr: format!("{v}^2"), source }
    }

    /// `2^e * v`.
    pub fn scaled(e: u32, v: BigRational, source: &'static str) -> Side {
        let value = BigRational::from_integer(BigInt::one() << e as usize) * &v;
        Side { value, expr: format!("2^{e} × {v}"), source }
    }
}

/// A sub-identity reported alongside the main one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartCheck {
    pub label: String,
    pub lhs: Side,
    pub rhs: Side,
    pub verdict: bool,
}

impl PartCheck {
    fn new(label: impl Into<String>, lhs: Side, rhs: Side) -> PartCheck {
        let verdict = lhs.value == rhs.value;
        PartCheck { label: label.into(), lhs, rhs, verdict }
    }
}

/// Result of checking one identity at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity_id: IdentityId,
    pub params: Params,
    pub lhs: Side,
    pub rhs: Side,
    /// Exact equality of both sides and of every part.
    pub verdict: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartCheck>,
}

impl IdentityCheck {
    fn new(id: IdentityId, params: &Params, lhs: Side, rhs: Side, parts: Vec<PartCheck>) -> IdentityCheck {
        let verdict = lhs.value == rhs.value && parts.iter().all(|p| p.verdict);
        IdentityCheck { identity_id: id, params: params.clone(), lhs, rhs, verdict, parts }
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.verdict { "OK" } else { "FAIL" };
        write!(f, "{} = {} {mark}", self.lhs.expr, self.rhs.expr)
    }
}

const ORBIT: &str = "orbit-graph";
const ENUM: &str = "enumeration";
const PFAFF: &str = "pfaffian";

fn sym_count(r: &Region, gens: &[SymmetryKind], method: SymMethod) -> Result<BigUint> {
    count_symmetric_tilings(r, gens, method)
}

/// Perfect matchings of the orbit graph, by the Pfaffian method.
fn quotient_pfaffian(r: &Region, gens: &[SymmetryKind]) -> Result<BigUint> {
    let group = SymmetryGroup::generate(r, gens)?;
    let q = quotient_graph(&dual_graph(r), &group)?;
    count_matchings_pfaffian(&q.graph)
}

fn half_turn(r: &Region) -> Result<BigUint> {
    sym_count(r, &[Rot180], SymMethod::Quotient)
}

fn need_x(p: &Params) -> Result<u32> {
    p.x.ok_or_else(|| Error::Param("this identity needs x".into()))
}

/// Reduced parameters of `holed_hexagon(side, b, ks)` as `(side', b', ks')`.
fn reduced(side: u32, b: u32, ks: &[u32]) -> (u32, u32, Vec<u32>) {
    reduce_k1(side, b, ks)
}

/// Computes both sides of `id` at `p`.
pub fn check(id: IdentityId, p: &Params) -> Result<IdentityCheck> {
    let (a, b) = (p.a, p.b);
    match id {
        IdentityId::I1_9 => {
            let r = hexagon(a, a, 2 * b)?;
            let lhs = Side::count(&count_tilings(&r)?, PFAFF);
            let v = sym_count(&r, &[ReflV], SymMethod::Enumerate)?;
            let h = sym_count(&r, &[ReflH], SymMethod::Enumerate)?;
            Ok(IdentityCheck::new(id, p, lhs, Side::product(&[v, h], ENUM), vec![]))
        }
        IdentityId::I1_10 => {
            let r = hexagon(a, a, 2 * b)?;
            let lhs = Side::count(&quotient_pfaffian(&r, &[Rot180])?, PFAFF);
            let rhs = Side::square(&sym_count(&r, &[Rot180, ReflV], SymMethod::Enumerate)?, ENUM);
            Ok(IdentityCheck::new(id, p, lhs, rhs, vec![]))
        }
        IdentityId::I1_11 => {
            let r = hexagon(2 * a, 2 * a, 2 * a)?;
            let lhs = Side::count(&quotient_pfaffian(&r, &[Rot120])?, PFAFF);
            let v = sym_count(&r, &[Rot120, ReflV], SymMethod::Enumerate)?;
            let h = sym_count(&r, &[Rot120, ReflH], SymMethod::Enumerate)?;
            Ok(IdentityCheck::new(id, p, lhs, Side::product(&[v, h], ENUM), vec![]))
        }
        IdentityId::I1_12 => {
            let r = hexagon(2 * a, 2 * a, 2 * a)?;
            let lhs = Side::count(&quotient_pfaffian(&r, &[Rot60])?, PFAFF);
            let rhs = Side::square(&sym_count(&r, &[Rot60, ReflV], SymMethod::Enumerate)?, ENUM);
            Ok(IdentityCheck::new(id, p, lhs, rhs, vec![]))
        }
        IdentityId::T2_1_even | IdentityId::T2_1_cored => {
            let r = if id == IdentityId::T2_1_even {
                holed_hexagon(a, b, &p.ks)?
            } else {
                cored_hexagon(a, b, &p.ks, need_x(p)?)?
            };
            let lhs = Side::count(&half_turn(&r)?, ORBIT);
            let rhs = Side::square(&sym_count(&r, &[Rot180, ReflV], SymMethod::Quotient)?, ORBIT);
            Ok(IdentityCheck::new(id, p, lhs, rhs, vec![]))
        }
        IdentityId::E3_1 => {
            let r = holed_hexagon(a, b, &p.ks)?;
            let lhs = Side::count(&half_turn(&r)?, ORBIT);
            let s = p.ks.len() as u32;
            let e = (a / 2).checked_sub(s).ok_or_else(|| Error::Param("more holes than half-width".into()))?;
            let split = factorization_split(&r)?;
            let mgf = matching_mgf(&split.subgraph)? * &split.loop_weight;
            let rhs = Side::scaled(e, mgf, "factorization-split");
            let parts = vec![PartCheck::new(
                "axis pairs",
                Side::count(&BigUint::from(split.multiplier_log2), "factorization-split"),
                Side::count(&BigUint::from(e), "parameters"),
            )];
            Ok(IdentityCheck::new(id, p, lhs, rhs, parts))
        }
        IdentityId::E3_5 | IdentityId::E3_10 => {
            let side = if id == IdentityId::E3_5 { 2 * a } else { 2 * a + 1 };
            let r = holed_hexagon(side, b, &p.ks)?;
            let (side2, b2, ks2) = reduced(side, b, &p.ks);
            let formula = if side2 / 2 == 0 {
                BigUint::one()
            } else if id == IdentityId::E3_5 {
                holed_count_even(side2 / 2, b2, &ks2)?
            } else {
                holed_count_odd(side2 / 2, b2, &ks2)?
            };
            let lhs = Side::count(&formula, "formula");
            Ok(IdentityCheck::new(id, p, lhs, Side::count(&half_turn(&r)?, ORBIT), vec![]))
        }
        IdentityId::E3_7 | IdentityId::E3_12 => {
            let (eps, side) = if id == IdentityId::E3_7 { (-1, 2 * a) } else { (0, 2 * a + 1) };
            holed_hexagon(side, b, &p.ks)?;
            let (side2, b2, ks2) = reduced(side, b, &p.ks);
            let half = side2 / 2;
            if half == 0 {
                let one = BigUint::one();
                return Ok(IdentityCheck::new(id, p, Side::count(&one, "formula"), Side::count(&one, "empty"), vec![]));
            }
            let is = d_indices(half, &ks2)?;
            let lhs = Side::count(&d_count(half, b2, eps, &is)?, "formula");
            let rhs = Side::count(&count_tilings_free(&d_region(half, b2, eps, &is)?)?, "free-boundary");
            Ok(IdentityCheck::new(id, p, lhs, rhs, vec![]))
        }
        IdentityId::E3_9 => {
            let r = holed_hexagon(2 * a + 1, b, &p.ks)?;
            let lhs = Side::count(&half_turn(&r)?, ORBIT);
            let (side2, b2, ks2) = reduced(2 * a + 1, b, &p.ks);
            let half = side2 / 2;
            let q = if half == 0 { vec![] } else { hole_lists(half, &ks2)?.q };
            Ok(IdentityCheck::new(id, p, lhs, zig_zag_side(&q, b2)?, vec![]))
        }
        IdentityId::E3_13 => {
            let x = need_x(p)?;
            let r = cored_hexagon(a, b, &p.ks, x)?;
            let rhs = Side::count(&half_turn(&r)?, ORBIT);
            let (side2, b2, ks2) = reduced(2 * a - 1, b, &p.ks);
            let a2 = side2.div_ceil(2);
            let lhs = Side::count(&cored_count(a2, b2, &ks2, x)?, "formula");
            let q = cored_list(a2, &ks2, x)?;
            let parts = vec![PartCheck::new("zig-zag route", rhs.clone(), zig_zag_side(&q, b2)?)];
            Ok(IdentityCheck::new(id, p, lhs, rhs, parts))
        }
        IdentityId::FOUR_CLASS => four_class(p),
    }
}

/// `2^|q|` times the weighted tilings of the zig-zag region with both lists
/// equal to `q`.
fn zig_zag_side(q: &[u32], b: u32) -> Result<Side> {
    if q.is_empty() {
        return Ok(Side::scaled(0, BigRational::one(), "zig-zag region"));
    }
    let m = count_tilings_weighted(&rbar_region(q, q, b)?)?;
    Ok(Side::scaled(q.len() as u32, m, "zig-zag region"))
}

/// Plane-partition classes through symmetric tilings of the hexagon of the
/// same box, each cross-checked against direct enumeration.
fn four_class(p: &Params) -> Result<IdentityCheck> {
    let (a, b) = (p.a, p.b);
    if a == 0 || b == 0 {
        return param("a and b must be positive");
    }
    let flat = hexagon(a, a, 2 * b)?;
    let cube = hexagon(2 * a, 2 * a, 2 * a)?;
    let tiling = |r: &Region, gens: &[SymmetryKind]| sym_count(r, gens, SymMethod::Enumerate);
    let p_ = count_tilings(&flat)?;
    let s = tiling(&flat, &[ReflV])?;
    let tc = tiling(&flat, &[ReflH])?;
    let sc = tiling(&flat, &[Rot180])?;
    let ssc = tiling(&flat, &[Rot180, ReflV])?;
    let cs = tiling(&cube, &[Rot120])?;
    let ts = tiling(&cube, &[Rot120, ReflV])?;
    let cstc = tiling(&cube, &[Rot120, ReflH])?;
    let cssc = tiling(&cube, &[Rot60])?;
    let tssc = tiling(&cube, &[Rot60, ReflV])?;

    let lhs = Side::count(&p_, "tilings");
    let rhs = Side::product(&[s.clone(), tc.clone()], "tilings");
    let mut parts = vec![
        PartCheck::new("SC = SSC^2", Side::count(&sc, "tilings"), Side::square(&ssc, "tilings")),
        PartCheck::new("CS = TS × CSTC", Side::count(&cs, "tilings"), Side::product(&[ts.clone(), cstc.clone()], "tilings")),
        PartCheck::new("CSSC = TSSC^2", Side::count(&cssc, "tilings"), Side::square(&tssc, "tilings")),
    ];
    let flat_classes = [PpClass::P, PpClass::S, PpClass::Tc, PpClass::Sc, PpClass::Ssc];
    let flat_pp = class_counts(a, a, 2 * b, &flat_classes);
    for ((k, t), pp) in flat_classes.iter().zip([&p_, &s, &tc, &sc, &ssc]).zip(&flat_pp) {
        parts.push(PartCheck::new(format!("{k}({a},{a},{})", 2 * b), Side::count(t, "tilings"), Side::count(pp, "plane-partitions")));
    }
    let cube_classes = [PpClass::Cs, PpClass::Ts, PpClass::Cstc, PpClass::Cssc, PpClass::Tssc];
    let n = 2 * a;
    let cube_pp = class_counts(n, n, n, &cube_classes);
    for ((k, t), pp) in cube_classes.iter().zip([&cs, &ts, &cstc, &cssc, &tssc]).zip(&cube_pp) {
        parts.push(PartCheck::new(format!("{k}({n},{n},{n})"), Side::count(t, "tilings"), Side::count(pp, "plane-partitions")));
    }
    Ok(IdentityCheck::new(IdentityId::FOUR_CLASS, p, lhs, rhs, parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_hexagon_factorizes() {
        let c = check(IdentityId::I1_9, &Params::new(1, 1)).unwrap();
        assert_eq!(c.to_string(), "3 = 3 × 1 OK");
    }

    #[test]
    fn parses_identity_names() {
        assert_eq!("t2_1_even".parse::<IdentityId>().unwrap(), IdentityId::T2_1_even);
        assert!("E9_9".parse::<IdentityId>().is_err());
    }

    #[test]
    fn holed_half_turn_square() {
        let c = check(IdentityId::T2_1_even, &Params::new(2, 1).with_ks(&[1])).unwrap();
        assert!(c.verdict);
    }
}
