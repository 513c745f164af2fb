//! Identity checks over parameter grids.

use std::io::Write;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::{check, IdentityId, Params};
use crate::error::{Error, Result};
use crate::lattice::core_collision;

/// Environment variable holding the worker count of [`sweep`].
pub const THREADS_ENV: &str = "LOZENGE_THREADS";

/// Which hole sets a grid visits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum KsChoice {
    /// No holes.
    #[default]
    None,
    /// Every legal hole set.
    All,
    /// The listed hole sets, where legal.
    Lists(Vec<Vec<u32>>),
}

/// A parameter grid such as `a=1..3,b=1..2,ks=all,x=1..2`.
///
/// Ranges are inclusive. A missing `a` or `b` leaves the grid empty; a missing
/// `x` visits every core size.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grid {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub ks: KsChoice,
    pub x: Option<Vec<u32>>,
}

fn parse_range(key: &str, v: &str) -> Result<Vec<u32>> {
    let num = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| Error::Param(format!("bad value {s:?} for {key}")))
    };
    let r: RangeInclusive<u32> = match v.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi.trim_start_matches('='))?,
        None => {
            let n = num(v)?;
            n..=n
        }
    };
    Ok(r.collect())
}

impl std::str::FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Grid> {
        let mut g = Grid::default();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Param(format!("grid item {item:?} is not key=value")))?;
            match key.trim() {
                "a" => g.a = parse_range("a", v)?,
                "b" => g.b = parse_range("b", v)?,
                "x" => g.x = Some(parse_range("x", v)?),
                "ks" => {
                    g.ks = match v.trim() {
                        "all" => KsChoice::All,
                        "none" | "" => KsChoice::None,
                        lists => KsChoice::Lists(
                            lists
                                .split('|')
                                .map(|l| {
                                    l.split('+')
                                        .filter(|t| !t.is_empty())
                                        .map(|t| {
                                            t.trim().parse::<u32>().map_err(|_| {
                                                Error::Param(format!("bad hole {t:?}"))
                                            })
                                        })
                                        .collect::<Result<Vec<u32>>>()
                                })
                                .collect::<Result<_>>()?,
                        ),
                    }
                }
                other => return Err(Error::Param(format!("unknown grid key {other:?}"))),
            }
        }
        Ok(g)
    }
}

/// Strictly increasing subsets of `1..=max`.
fn subsets(max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for k in 1..=max {
        let with: Vec<Vec<u32>> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.push(k);
                t
            })
            .collect();
        out.extend(with);
    }
    out.sort();
    out
}

enum Shape {
    /// No holes at all.
    Plain,
    /// Holes in a hexagon of this full side, as a function of `a`.
    Holed(fn(u32) -> u32),
    Cored,
}

fn shape(id: IdentityId) -> Shape {
    use IdentityId::*;
    match id {
        I1_9 | I1_10 | I1_11 | I1_12 | FOUR_CLASS => Shape::Plain,
        T2_1_even | E3_1 => Shape::Holed(|a| a),
        E3_5 | E3_7 => Shape::Holed(|a| 2 * a),
        E3_9 | E3_10 | E3_12 => Shape::Holed(|a| 2 * a + 1),
        T2_1_cored | E3_13 => Shape::Cored,
    }
}

fn hole_sets(choice: &KsChoice, side: u32) -> Vec<Vec<u32>> {
    let max = side / 2;
    match choice {
        KsChoice::None => vec![vec![]],
        KsChoice::All => subsets(max),
        KsChoice::Lists(ls) => ls
            .iter()
            .filter(|l| l.windows(2).all(|w| w[0] < w[1]) && l.iter().all(|&k| k >= 1 && k <= max))
            .cloned()
            .collect(),
    }
}

/// Legal parameter points of `grid` for `id`, in lexicographic order.
/// Hole sets that do not fit and cores that meet a hole are skipped.
pub fn grid_points(id: IdentityId, grid: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for &a in &grid.a {
        for &b in &grid.b {
            if a == 0 || b == 0 {
                continue;
            }
            match shape(id) {
                Shape::Plain => {
                    if grid.ks == KsChoice::None || grid.ks == KsChoice::All {
                        out.push(Params::new(a, b));
                    }
                }
                Shape::Holed(side) => {
                    for ks in hole_sets(&grid.ks, side(a)) {
                        out.push(Params::new(a, b).with_ks(&ks));
                    }
                }
                Shape::Cored => {
                    let xs = grid.x.clone().unwrap_or_else(|| (1..=a).collect());
                    for ks in hole_sets(&grid.ks, 2 * a - 1) {
                        for &x in xs.iter().filter(|&&x| x >= 1 && x <= a) {
                            if core_collision(a, &ks, x).is_none() {
                                out.push(Params::new(a, b).with_ks(&ks).with_x(x));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// One line of a sweep report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub identity: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    /// `OK`, `FAIL` or `error: <message>`.
    pub verdict: String,
}

impl SweepRow {
    pub fn passed(&self) -> bool {
        self.verdict == "OK"
    }
}

fn row(id: IdentityId, p: &Params) -> SweepRow {
    let (lhs, rhs, verdict) = match check(id, p) {
        Ok(c) => (
            c.lhs.value.to_string(),
            c.rhs.value.to_string(),
            if c.verdict { "OK" } else { "FAIL" }.to_string(),
        ),
        Err(e) => (String::new(), String::new(), format!("error: {e}")),
    };
    SweepRow { identity: id.to_string(), params: p.to_string(), lhs, rhs, verdict }
}

/// Checks every identity at every legal grid point, in parallel. Rows come
/// back in the order of `ids`, then grid order.
pub fn sweep(ids: &[IdentityId], grid: &Grid) -> Result<Vec<SweepRow>> {
    let jobs: Vec<(IdentityId, Params)> = ids
        .iter()
        .flat_map(|&id| grid_points(id, grid).into_iter().map(move |p| (id, p)))
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(n) = std::env::var(THREADS_ENV) {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Param(format!("{THREADS_ENV} must be a number, got {n:?}")))?;
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| Error::Param(e.to_string()))?;
    Ok(pool.install(|| jobs.par_iter().map(|(id, p)| row(*id, p)).collect()))
}

/// Writes rows as CSV with the header `identity,params,lhs,rhs,verdict`.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["identity", "params", "lhs", "rhs", "verdict"])?;
    for r in rows {
        w.write_record([&r.identity, &r.params, &r.lhs, &r.rhs, &r.verdict])?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grids() {
        let g: Grid = "a=1..3,b=2,ks=all,x=1..2".parse().unwrap();
        assert_eq!((g.a, g.b, g.ks, g.x), (vec![1, 2, 3], vec![2], KsChoice::All, Some(vec![1, 2])));
        let g: Grid = "ks=2+4|3".parse().unwrap();
        assert_eq!(g.ks, KsChoice::Lists(vec![vec![2, 4], vec![3]]));
        assert!("a=x".parse::<Grid>().is_err());
    }

    #[test]
    fn empty_grid_gives_empty_report() {
        let g: Grid = "".parse().unwrap();
        assert!(sweep(&IdentityId::ALL, &g).unwrap().is_empty());
        let g: Grid = "a=3..1,b=1".parse().unwrap();
        assert!(sweep(&[IdentityId::I1_9], &g).unwrap().is_empty());
    }

    #[test]
    fn grid_skips_colliding_cores() {
        let g: Grid = "a=3,b=1,ks=all".parse().unwrap();
        let pts = grid_points(IdentityId::T2_1_cored, &g);
        assert!(pts.iter().all(|p| core_collision(p.a, &p.ks, p.x.unwrap()).is_none()));
        assert!(pts.contains(&Params::new(3, 1).with_ks(&[2]).with_x(1)));
        assert!(!pts.contains(&Params::new(3, 1).with_ks(&[2]).with_x(2)));
    }

    #[test]
    fn csv_report() {
        let g: Grid = "a=1..2,b=1".parse().unwrap();
        let rows = sweep(&[IdentityId::I1_9], &g).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("identity,params,lhs,rhs,verdict"));
        assert_eq!(text.lines().nth(1), Some("I1_9,a=1 b=1,3,3,OK"));
        assert_eq!(text.lines().count(), 3);
    }
}
