//! Alternating sign matrices and restricted colorings of the grid graph G_n:
//! maps each ASM to its coloring and back.
//!
//! cargo run --example asm_bijection [-- n]

use lucas_count::asm_grid::{asm_to_coloring, coloring_to_asm, enumerate_asms, enumerate_restricted, grid_graph};
use lucas_count::planar_graph::Color;

fn main() -> lucas_count::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let grid = grid_graph(n)?;
    let asms = enumerate_asms(n)?;
    println!("{} ASMs of size {n}", asms.len());

    for a in &asms {
        let c = asm_to_coloring(&grid, a)?;
        assert_eq!(&coloring_to_asm(&grid, &c)?, a);
        let green = (0..grid.map().num_edges()).filter(|&e| c.coloring().get(e) == Color::Y).count();
        println!("{:?}  {green} green edges", a.rows());
    }
    if n <= 4 {
        let restricted = enumerate_restricted(&grid)?;
        println!("{} restricted colorings of G_{n}", restricted.len());
    }
    Ok(())
}
