//! Symmetric tilings of `hexagon(a, a, 2b)`, listed and counted on orbit graphs.

use lozenge::counting::{count_symmetric_tilings, SymMethod};
use lozenge::lattice::{hexagon, SymmetryKind::*};

fn main() -> lozenge::Result<()> {
    let classes = [
        ("reflv", vec![ReflV]),
        ("reflh", vec![ReflH]),
        ("rot180", vec![Rot180]),
        ("rot180+reflv", vec![Rot180, ReflV]),
    ];
    for (a, b) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
        let r = hexagon(a, a, 2 * b)?;
        print!("hexagon({a},{a},{})", 2 * b);
        for (name, gens) in &classes {
            let listed = count_symmetric_tilings(&r, gens, SymMethod::Enumerate)?;
            let orbit = count_symmetric_tilings(&r, gens, SymMethod::Quotient)?;
            assert_eq!(listed, orbit);
            print!("  {name}={listed}");
        }
        println!();
    }
    Ok(())
}
