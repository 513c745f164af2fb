//! Orbit graphs of the regular hexagon under its rotation subgroups.

use lozenge::counting::count_matchings_pfaffian;
use lozenge::duality::{dual_graph, quotient_graph, SymmetryGroup};
use lozenge::lattice::{hexagon, SymmetryKind};

fn main() -> lozenge::Result<()> {
    let r = hexagon(2, 2, 2)?;
    let g = dual_graph(&r);
    println!("hexagon(2,2,2): {} vertices, {} edges", g.vertex_count(), g.edge_count());
    for k in [SymmetryKind::Rot180, SymmetryKind::Rot120, SymmetryKind::Rot60] {
        let group = SymmetryGroup::generate(&r, &[k])?;
        let q = quotient_graph(&g, &group)?;
        println!(
            "{k}: {} orbits, {} edges, {} loops, {} matchings",
            q.graph.vertex_count(),
            q.graph.edge_count(),
            q.graph.loops().len(),
            count_matchings_pfaffian(&q.graph)?
        );
    }
    let q = quotient_graph(&g, &SymmetryGroup::generate(&r, &[SymmetryKind::Rot120])?)?;
    print!("{}", q.graph.to_text());
    Ok(())
}
