//! Splitting the half-turn orbit graph of a holed hexagon in two along its
//! symmetry axis.
//!
//! Usage: `cargo run --example factorization -- a b k1,k2,...`

use lozenge::counting::{count_symmetric_tilings, matching_mgf, SymMethod};
use lozenge::duality::factorization_split;
use lozenge::lattice::{holed_hexagon, SymmetryKind};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() -> lozenge::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = args.first().and_then(|s| s.parse().ok()).unwrap_or(8);
    let b = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let ks: Vec<u32> = args
        .get(2)
        .map(|s| s.split(',').filter_map(|t| t.parse().ok()).collect())
        .unwrap_or_else(|| vec![2, 3]);
    let r = holed_hexagon(a, b, &ks)?;
    let full = count_symmetric_tilings(&r, &[SymmetryKind::Rot180], SymMethod::Quotient)?;
    let split = factorization_split(&r)?;
    let mgf = matching_mgf(&split.subgraph)?;
    let rebuilt = BigRational::from_integer(BigInt::from(1) << split.multiplier_log2 as usize)
        * &split.loop_weight
        * &mgf;
    println!("holed_hexagon({a}, {b}, {ks:?})");
    println!("  half-turn symmetric tilings  {full}");
    println!("  split graph                  {} vertices, {} edges", split.subgraph.vertex_count(), split.subgraph.edge_count());
    println!("  axis pairs                   {}", split.multiplier_log2);
    println!("  loop weight                  {}", split.loop_weight);
    println!("  weighted matchings           {mgf}");
    println!("  2^pairs x loop x matchings   {rebuilt}");
    match split.dual_region() {
        Ok(z) => println!("  zig-zag region               {:?}", z.params()),
        Err(e) => println!("  zig-zag region               none ({e})"),
    }
    Ok(())
}
