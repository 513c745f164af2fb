//! Round trip of a region through its JSON form.

use lozenge::lattice::{cored_hexagon, deserialize_region, serialize_region};

fn main() -> lozenge::Result<()> {
    let r = cored_hexagon(3, 1, &[], 2)?;
    let bytes = serialize_region(&r);
    let back = deserialize_region(&bytes)?;
    assert_eq!(back, r);
    println!("{}", String::from_utf8_lossy(&bytes));
    Ok(())
}
