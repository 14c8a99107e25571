//! Lozenge tilings of hexagons and of the regions T_a. Writes SVG drawings
//! of the regions into the current directory.
//!
//! cargo run --example lozenge_tilings

use lucas_count::tilings::{hexagon_region, m_t, macmahon, ta_region, table_value};

fn main() -> lucas_count::Result<()> {
    for (a, b, c) in [(1, 1, 1), (2, 2, 2), (2, 3, 4), (3, 3, 3)] {
        let region = hexagon_region(a, b, c)?;
        println!("H({a},{b},{c}): {} tilings, product formula {}", region.tilings(), macmahon(a, b, c));
    }
    for a in 1..=5 {
        let region = ta_region(a)?;
        let file = format!("t{a}.svg");
        std::fs::write(&file, region.to_svg(24.0))?;
        println!(
            "T_{a}: {} triangles, {} tilings, m(t_{a}) = {}, table {} ({file})",
            region.cells().len(),
            region.tilings(),
            m_t(a)?,
            table_value(a).expect("tabulated")
        );
    }
    Ok(())
}
