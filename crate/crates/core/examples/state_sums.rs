//! State sums: the Fibonacci tensor of a path, polygon sums, and gluing two
//! graphs along distinguished vertices.
//!
//! cargo run --example state_sums

use lucas_count::matching_algebra::{
    connected_sum_count, cyclic_closure, edge_glue_count, fibonacci_tensor, polygon_state_sum, state_sum,
    AlgebraElement,
};
use lucas_count::matchings::{count_perfect_matchings, Graph};

fn path(k: usize) -> Graph {
    Graph::new(k, (1..k).map(|i| (i - 1, i)).collect()).expect("valid path")
}

fn main() -> lucas_count::Result<()> {
    let y = AlgebraElement::Y;
    let n = AlgebraElement::N;
    println!("y*y = {:?}, y*n = {:?}, n*n = {:?}", y * y, y * n, n * n);

    // distinguishing every vertex of a path gives the Fibonacci tensor
    for k in 1..=6 {
        let s = state_sum(&path(k), &(0..k).collect::<Vec<_>>())?;
        assert_eq!(s, fibonacci_tensor(k)?);
        println!("F_{k} has {} words: {s}", s.support_len());
    }

    for k in 3..=6 {
        let p = polygon_state_sum(k)?;
        println!("polygon with {k} distinguished corners: {p}");
        assert_eq!(cyclic_closure(&fibonacci_tensor(k)?)?, p);
    }

    // identifying one vertex of a 4-cycle with one vertex of a 5-cycle
    let c4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5)).collect())?;
    let summed = connected_sum_count(&state_sum(&c4, &[0])?, &state_sum(&c5, &[0])?)?;
    let direct = Graph::new(8, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 0)])?;
    println!("C4 and C5 sharing a vertex: {summed} (direct count {})", count_perfect_matchings(&direct).0);

    // joining two adjacent vertices of a 4-cycle to two adjacent vertices of a 6-cycle
    let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6)).collect())?;
    let glued = edge_glue_count(&state_sum(&c4, &[0, 1])?, &state_sum(&c6, &[0, 1])?)?;
    let mut edges: Vec<_> = c4.edges().to_vec();
    edges.extend(c6.edges().iter().map(|&(a, b)| (a + 4, b + 4)));
    edges.extend([(0, 4), (1, 5)]);
    let direct = Graph::new(10, edges)?;
    println!("C4 and C6 joined by two edges: {glued} (direct count {})", count_perfect_matchings(&direct).0);
    Ok(())
}
