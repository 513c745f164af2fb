//! The ten symmetry classes of plane partitions in small boxes, and the
//! four product relations between them.

use lozenge::verify::{check, class_counts, IdentityId, Params, PpClass};

fn main() -> lozenge::Result<()> {
    for n in 1..=2u32 {
        let (a, c) = (n, 2 * n);
        let flat = class_counts(a, a, c, &PpClass::ALL);
        let cube = class_counts(c, c, c, &PpClass::ALL);
        println!("box {a}x{a}x{c} and {c}x{c}x{c}:");
        for (k, (f, q)) in PpClass::ALL.iter().zip(flat.iter().zip(&cube)) {
            println!("  {k:<5} {f:>8} {q:>8}");
        }
        let c = check(IdentityId::FOUR_CLASS, &Params::new(n, n))?;
        println!("  P = S x TC: {c}");
        for part in c.parts.iter().take(3) {
            println!("  {}: {} = {}", part.label, part.lhs.expr, part.rhs.expr);
        }
    }
    Ok(())
}
