//! A parallel sweep written as CSV to standard output.
//!
//! Usage: `cargo run --release --example sweep_report -- E3_5,E3_7 "a=1..3,b=1..2,ks=all"`
//! The worker count follows `LOZENGE_THREADS` when set.

use lozenge::verify::{sweep, write_csv, Grid, IdentityId};

fn main() -> lozenge::Result<()> {
    let mut args = std::env::args().skip(1);
    let ids: Vec<IdentityId> = args
        .next()
        .unwrap_or_else(|| "E3_5".into())
        .split(',')
        .map(str::parse)
        .collect::<lozenge::Result<_>>()?;
    let grid: Grid = args.next().unwrap_or_else(|| "a=1..3,b=1..2,ks=all".into()).parse()?;
    let rows = sweep(&ids, &grid)?;
    write_csv(&rows, std::io::stdout()).expect("stdout");
    let failed = rows.iter().filter(|r| !r.passed()).count();
    eprintln!("{} rows, {failed} not OK", rows.len());
    Ok(())
}
