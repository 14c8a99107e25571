//! Replaces every vertex of a planar map by a polygon and checks that the
//! perfect matchings of the result are counted by m(G).
//!
//! cargo run --example blow_up

use lucas_count::lucas::{is_lucas_coloring, lucas_statistic};
use lucas_count::matchings::{blow_up, count_perfect_matchings, enumerate_perfect_matchings};
use lucas_count::planar_graph::fixtures;

fn main() -> lucas_count::Result<()> {
    let triangle = fixtures::triangle();
    let b = blow_up(&triangle)?;
    let g = (&b.result).into();
    println!("triangle blow-up: {} vertices, {} edges", b.result.num_vertices(), b.result.num_edges());

    // every perfect matching of the blow-up restricts to a Lucas-coloring
    let all = enumerate_perfect_matchings(&g, None)?;
    for m in &all {
        let c = b.coloring_of_matching(&triangle, m);
        assert!(is_lucas_coloring(&triangle, &c));
        println!("  matching {:?} -> coloring {}", m, c.to_json(&triangle));
    }

    for (name, map) in [("cycle C5", fixtures::cycle(5)), ("W4", fixtures::wheel(4)), ("W5", fixtures::w5())] {
        let b = blow_up(&map)?;
        let pm = count_perfect_matchings(&(&b.result).into());
        println!("{name}: m(G) = {}, perfect matchings of blow-up = {}", lucas_statistic(&map).m, pm.0);
    }
    Ok(())
}
