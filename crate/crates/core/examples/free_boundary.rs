//! Quarter regions with a free vertical side: transfer-matrix counts against
//! the binomial product formula, and its square against the half-turn count.

use lozenge::counting::count_tilings_free;
use lozenge::formulas::{d_count, d_indices, holed_count_even, holed_count_odd};
use lozenge::lattice::d_region;

fn main() -> lozenge::Result<()> {
    for (a, b, ks) in [(2, 2, vec![]), (3, 1, vec![2]), (3, 3, vec![3]), (4, 2, vec![2, 4])] {
        let is = d_indices(a, &ks)?;
        for eps in [-1, 0] {
            let free = count_tilings_free(&d_region(a, b, eps, &is)?)?;
            let f = d_count(a, b, eps, &is)?;
            let whole = if eps == -1 { holed_count_even(a, b, &ks)? } else { holed_count_odd(a, b, &ks)? };
            assert_eq!(&f * &f, whole);
            println!("a={a} b={b} eps={eps:>2} is={is:?}: free={free} formula={f} square={whole}");
        }
    }
    Ok(())
}
