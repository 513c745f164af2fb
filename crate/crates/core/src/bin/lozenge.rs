use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lozenge::counting::{count_symmetric_tilings, count_tilings, count_tilings_free, count_tilings_weighted, SymMethod};
use lozenge::duality::{dual_graph, factorization_split, quotient_graph, SymmetryGroup};
use lozenge::lattice::{Region, RegionParams, SymmetryKind};
use lozenge::render::{render_svg, Overlay, RenderOptions};
use lozenge::verify::{check, sweep, write_csv, Grid, IdentityId, Params};

#[derive(Parser)]
#[command(name = "lozenge", version, about = "Exact lozenge tiling counts, symmetry quotients and factorization checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print `{command, params, result}` as JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Number of tilings of a region.
    Count(RegionArgs),
    /// Number of tilings fixed by the given symmetries.
    CountSym {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        sym: SymArgs,
        #[arg(long, value_enum, default_value = "quotient")]
        method: Method,
    },
    /// Check one identity at one parameter point.
    Verify {
        #[arg(long)]
        id: IdentityId,
        #[command(flatten)]
        p: PointArgs,
    },
    /// Check identities over a grid and write a CSV report.
    Sweep {
        /// Comma-separated identities, or `all`.
        #[arg(long)]
        id: String,
        /// Grid such as `a=1..3,b=1..2,ks=all,x=1..2`.
        #[arg(long, default_value = "")]
        grid: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Draw a region as SVG.
    Render {
        #[command(flatten)]
        region: RegionArgs,
        /// Draw the tiling with this index.
        #[arg(long)]
        tiling: Option<usize>,
        #[arg(long, value_enum)]
        overlay: Option<OverlayKind>,
        /// Symmetries of the quotient overlay.
        #[command(flatten)]
        sym: SymArgs,
        #[arg(long)]
        out: Option<String>,
    },
    /// Export the orbit graph of the dual graph.
    Quotient {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        sym: SymArgs,
    },
    /// Export the factorization split of a doubly symmetric region.
    Split(RegionArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Hexagon,
    Holed,
    Cored,
    D,
    Rbar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Enumerate,
    Quotient,
}

#[derive(Clone, Copy, ValueEnum)]
enum OverlayKind {
    Dual,
    Quotient,
}

/// Comma-separated integers; empty means none.
#[derive(Clone, Debug, Default)]
struct List(Vec<u32>);

impl std::str::FromStr for List {
    type Err = String;

    fn from_str(s: &str) -> Result<List, String> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<u32>().map_err(|_| format!("not a number: {t:?}")))
            .collect::<Result<_, _>>()
            .map(List)
    }
}

/// Comma-separated symmetry names.
#[derive(Clone, Debug)]
struct Syms(Vec<SymmetryKind>);

impl std::str::FromStr for Syms {
    type Err = String;

    fn from_str(s: &str) -> Result<Syms, String> {
        s.split(',')
            .map(|t| t.trim().parse::<SymmetryKind>().map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()
            .map(Syms)
    }
}

#[derive(Args)]
struct RegionArgs {
    #[arg(long, value_enum, default_value = "hexagon")]
    family: Family,
    #[arg(long)]
    a: Option<u32>,
    /// Second side of a hexagon, half the vertical side otherwise, and the
    /// base of a zig-zag region.
    #[arg(long)]
    b: Option<u32>,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long, default_value = "")]
    ks: List,
    #[arg(long)]
    x: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<i32>,
    #[arg(long = "is", default_value = "")]
    is_: List,
    #[arg(long, default_value = "")]
    l: List,
    #[arg(long, default_value = "")]
    q: List,
}

#[derive(Args)]
struct SymArgs {
    /// Comma-separated symmetries: rot60, rot120, rot180, reflh, reflv.
    #[arg(long)]
    sym: Option<Syms>,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long)]
    a: u32,
    #[arg(long, default_value_t = 1)]
    b: u32,
    #[arg(long, default_value = "")]
    ks: List,
    #[arg(long)]
    x: Option<u32>,
}

/// A usage or runtime error, reported with exit status 2.
enum Failure {
    Usage(String),
}

impl From<lozenge::Error> for Failure {
    fn from(e: lozenge::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn need(v: Option<u32>, name: &str) -> Result<u32, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{name} is required for this family")))
}

impl RegionArgs {
    fn params(&self) -> Result<RegionParams, Failure> {
        Ok(match self.family {
            Family::Hexagon => RegionParams::Hexagon {
                a: need(self.a, "a")?,
                b: need(self.b, "b")?,
                c: need(self.c, "c")?,
            },
            Family::Holed => RegionParams::HoledHexagon { a: need(self.a, "a")?, b: need(self.b, "b")?, ks: self.ks.0.clone() },
            Family::Cored => RegionParams::CoredHexagon {
                a: need(self.a, "a")?,
                b: need(self.b, "b")?,
                ks: self.ks.0.clone(),
                x: need(self.x, "x")?,
            },
            Family::D => RegionParams::DRegion {
                a: need(self.a, "a")?,
                b: need(self.b, "b")?,
                eps: self.eps.ok_or_else(|| Failure::Usage("--eps is required for this family".into()))?,
                is: self.is_.0.clone(),
            },
            Family::Rbar => RegionParams::RBarRegion { l: self.l.0.clone(), q: self.q.0.clone(), base: need(self.b, "b")? },
        })
    }

    fn build(&self) -> Result<(Region, Value), Failure> {
        let p = self.params()?;
        let r = p.build()?;
        Ok((r, serde_json::to_value(&p).expect("params serialize")))
    }
}

fn gens(sym: &SymArgs) -> Result<Vec<SymmetryKind>, Failure> {
    sym.sym.clone().map(|s| s.0).ok_or_else(|| Failure::Usage("--sym is required".into()))
}

/// Human-readable text and JSON result of one command.
struct Output {
    text: String,
    params: Value,
    result: Value,
}

fn emit(out: Option<&str>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(&'static str, Output, bool), Failure> {
    let mut ok = true;
    let (name, out) = match &cli.command {
        Command::Count(ra) => {
            let (r, params) = ra.build()?;
            let v = if !r.is_closed() {
                count_tilings_free(&r)?.to_string()
            } else if !r.half_edges().is_empty() {
                count_tilings_weighted(&r)?.to_string()
            } else {
                count_tilings(&r)?.to_string()
            };
            ("count", Output { text: format!("{v}\n"), params, result: json!(v) })
        }
        Command::CountSym { region, sym, method } => {
            let (r, mut params) = region.build()?;
            let g = gens(sym)?;
            let m = match method {
                Method::Enumerate => SymMethod::Enumerate,
                Method::Quotient => SymMethod::Quotient,
            };
            let v = count_symmetric_tilings(&r, &g, m)?.to_string();
            params["sym"] = json!(g.iter().map(|k| k.name()).collect::<Vec<_>>());
            ("count-sym", Output { text: format!("{v}\n"), params, result: json!(v) })
        }
        Command::Verify { id, p } => {
            let mut params = Params::new(p.a, p.b).with_ks(&p.ks.0);
            params.x = p.x;
            let c = check(*id, &params)?;
            ok = c.verdict;
            let mut text = format!("{c}\n");
            for part in &c.parts {
                let mark = if part.verdict { "OK" } else { "FAIL" };
                text += &format!("  {}: {} = {} {mark}\n", part.label, part.lhs.expr, part.rhs.expr);
            }
            let result = serde_json::to_value(&c).expect("check serializes");
            ("verify", Output { text, params: json!({ "id": id.name(), "point": params }), result })
        }
        Command::Sweep { id, grid, out } => {
            let ids: Vec<IdentityId> = if id == "all" {
                IdentityId::ALL.to_vec()
            } else {
                id.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()?
            };
            let g: Grid = grid.parse()?;
            let rows = sweep(&ids, &g)?;
            ok = rows.iter().all(|r| r.passed());
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            let csv = String::from_utf8(buf).expect("csv is utf-8");
            let params = json!({ "id": id, "grid": grid });
            if out.is_some() || !cli.json {
                emit(out.as_deref(), &csv)?;
            }
            let result = serde_json::to_value(&rows).expect("rows serialize");
            ("sweep", Output { text: String::new(), params, result })
        }
        Command::Render { region, tiling, overlay, sym, out } => {
            let (r, params) = region.build()?;
            let overlay = match overlay {
                None => Overlay::None,
                Some(OverlayKind::Dual) => Overlay::Dual,
                Some(OverlayKind::Quotient) => Overlay::Quotient(gens(sym)?),
            };
            let svg = render_svg(&r, &RenderOptions { tiling: *tiling, overlay })?;
            let (text, result) = match out {
                Some(path) => {
                    emit(Some(path), &svg)?;
                    (String::new(), json!({ "out": path, "bytes": svg.len() }))
                }
                None => (svg.clone(), json!(svg)),
            };
            ("render", Output { text, params, result })
        }
        Command::Quotient { region, sym } => {
            let (r, mut params) = region.build()?;
            let g = gens(sym)?;
            let group = SymmetryGroup::generate(&r, &g)?;
            let q = quotient_graph(&dual_graph(&r), &group)?;
            params["sym"] = json!(g.iter().map(|k| k.name()).collect::<Vec<_>>());
            let text = q.graph.to_text();
            ("quotient", Output { result: json!({ "graph": text }), text, params })
        }
        Command::Split(ra) => {
            let (r, params) = ra.build()?;
            let s = factorization_split(&r)?;
            let text = format!(
                "# multiplier 2^{}\n# loop weight {}\n{}",
                s.multiplier_log2,
                s.loop_weight,
                s.subgraph.to_text()
            );
            let result = json!({
                "multiplier_log2": s.multiplier_log2,
                "loop_weight": s.loop_weight.to_string(),
                "graph": s.subgraph.to_text(),
            });
            ("split", Output { text, params, result })
        }
    };
    Ok((name, out, ok))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((name, out, ok)) => {
            let body = if cli.json {
                let v = json!({ "command": name, "params": out.params, "result": out.result });
                serde_json::to_string_pretty(&v).expect("json") + "\n"
            } else {
                out.text
            };
            if let Err(Failure::Usage(m)) = emit(None, &body) {
                eprintln!("error: {m}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
