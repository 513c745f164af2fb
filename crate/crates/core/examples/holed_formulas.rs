//! Product formulas for half-turn symmetric tilings of holed and cored
//! hexagons, next to the orbit-graph count.

use lozenge::counting::{count_symmetric_tilings, SymMethod};
use lozenge::formulas::{cored_count, holed_count_even, holed_count_odd, reduce_k1};
use lozenge::lattice::{cored_hexagon, holed_hexagon, SymmetryKind};

fn half_turn(r: &lozenge::lattice::Region) -> lozenge::Result<num_bigint::BigUint> {
    count_symmetric_tilings(r, &[SymmetryKind::Rot180], SymMethod::Quotient)
}

fn main() -> lozenge::Result<()> {
    println!("{:<28} {:>14} {:>14}", "region", "formula", "orbit graph");
    for (side, b, ks) in [(6, 2, vec![2, 3]), (7, 3, vec![2]), (8, 2, vec![2, 4]), (9, 1, vec![3, 4]), (8, 1, vec![1, 3])] {
        let (s, b2, ks2) = reduce_k1(side, b, &ks);
        let f = match (s, s % 2) {
            (0 | 1, _) => 1u32.into(),
            (_, 0) => holed_count_even(s / 2, b2, &ks2)?,
            _ => holed_count_odd(s / 2, b2, &ks2)?,
        };
        let name = format!("holed({side},{b},{ks:?})");
        println!("{name:<28} {f:>14} {:>14}", half_turn(&holed_hexagon(side, b, &ks)?)?);
    }
    for (a, b, ks, x) in [(4, 1, vec![], 2), (4, 3, vec![2], 1), (5, 2, vec![2, 3], 2)] {
        let name = format!("cored({a},{b},{ks:?},{x})");
        let f = cored_count(a, b, &ks, x)?;
        println!("{name:<28} {f:>14} {:>14}", half_turn(&cored_hexagon(a, b, &ks, x)?)?);
    }
    Ok(())
}
