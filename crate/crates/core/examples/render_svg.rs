//! Writes SVG pictures of a holed hexagon, one of its tilings, its half-turn
//! orbit graph and a quarter region with a free side.
//!
//! Usage: `cargo run --example render_svg -- [output_dir]`

use lozenge::lattice::{d_region, holed_hexagon, SymmetryKind};
use lozenge::render::{render_svg, Overlay, RenderOptions};

fn main() -> lozenge::Result<()> {
    let dir = std::path::PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let holed = holed_hexagon(8, 2, &[2, 4])?;
    let pictures = [
        ("holed.svg", &holed, RenderOptions::default()),
        ("holed_tiling.svg", &holed, RenderOptions { tiling: Some(1000), ..Default::default() }),
        ("holed_orbits.svg", &holed, RenderOptions { tiling: None, overlay: Overlay::Quotient(vec![SymmetryKind::Rot180]) }),
    ];
    for (name, r, opts) in pictures {
        let path = dir.join(name);
        std::fs::write(&path, render_svg(r, &opts)?).expect("write svg");
        println!("{}", path.display());
    }
    let quarter = d_region(4, 2, -1, &[1, 3, 4])?;
    let path = dir.join("quarter.svg");
    let opts = RenderOptions { tiling: Some(0), overlay: Overlay::Dual };
    std::fs::write(&path, render_svg(&quarter, &opts)?).expect("write svg");
    println!("{}", path.display());
    Ok(())
}
