//! Counts Lucas-colorings and the weighted sum m(G) = Σ 2^Sp for a few maps,
//! and prints the histogram of special-vertex counts.
//!
//! cargo run --example lucas_stats [-- path/to/map.json]

use lucas_count::lucas::{lucas_statistic_detailed, special_histogram};
use lucas_count::planar_graph::{fixtures, parse_map};
use lucas_count::tilings::t_graph;

fn main() -> lucas_count::Result<()> {
    let mut maps = vec![
        ("single vertex".to_string(), fixtures::single_vertex()),
        ("triangle".to_string(), fixtures::triangle()),
        ("hexagon".to_string(), fixtures::cycle(6)),
        ("wheel W5".to_string(), fixtures::w5()),
        ("t_3".to_string(), t_graph(3)?.map),
    ];
    if let Some(path) = std::env::args().nth(1) {
        maps.push((path.clone(), parse_map(&std::fs::read_to_string(&path)?)?));
    }
    for (name, map) in &maps {
        let stats = lucas_statistic_detailed(map);
        println!("{name}: {} colorings, m = {}", stats.count, stats.m);
        let hist = special_histogram(map);
        for (sp, k) in hist.iter().enumerate().filter(|(_, k)| **k > 0) {
            println!("    {k} with {sp} special vertices");
        }
    }
    Ok(())
}
