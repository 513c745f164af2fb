//! Tilings of hexagons by three independent engines, against the box formula.
//!
//! Usage: `cargo run --example count_hexagon -- [max_side]`

use lozenge::counting::{count_matchings_frontier, count_matchings_oracle, count_matchings_pfaffian};
use lozenge::duality::dual_graph;
use lozenge::formulas::macmahon_box;
use lozenge::lattice::hexagon;

fn main() -> lozenge::Result<()> {
    let max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    println!("{:>3} {:>3} {:>3} {:>12} {:>12}", "a", "b", "c", "pfaffian", "formula");
    for a in 1..=max {
        for b in 1..=max {
            for c in 1..=max {
                let g = dual_graph(&hexagon(a, b, c)?);
                let pf = count_matchings_pfaffian(&g)?;
                let sweep = count_matchings_frontier(&g)?;
                assert_eq!(pf, sweep);
                if g.vertex_count() <= 40 {
                    assert_eq!(pf, count_matchings_oracle(&g)?);
                }
                println!("{a:>3} {b:>3} {c:>3} {pf:>12} {:>12}", macmahon_box(a, b, c));
            }
        }
    }
    Ok(())
}
