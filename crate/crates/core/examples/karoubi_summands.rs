//! Builds the two-colored cube of resolutions of a few link projections and
//! counts its direct summands against the Lucas-colorings.
//!
//! cargo run --example karoubi_summands

use lucas_count::karoubi::{cube, fixtures, link_components, summands};

fn main() -> lucas_count::Result<()> {
    for (name, p) in fixtures::all() {
        let c = cube(&p)?;
        let s = summands(&p)?;
        let luc = lucas_count::lucas::lucas_statistic(p.map()).count;
        println!(
            "{name}: {} crossings, {} components, {} resolutions, {} cube edges, {} summands, {luc} Lucas-colorings",
            p.crossings(),
            link_components(&p),
            c.resolutions.len(),
            c.edges.len(),
            s.count
        );
        let mut heights: Vec<_> = s.heights.iter().collect();
        heights.sort();
        println!("    summands by height: {heights:?}");
    }
    Ok(())
}
