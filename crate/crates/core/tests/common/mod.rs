//! Brute-force oracles shared by the integration tests. They are written
//! from the definitions and use none of the library's counting code.

#![allow(dead_code)]

use lucas_count::planar_graph::PlanarMap;
use num_bigint::BigUint;
use rand::Rng;

/// Perfect matchings of a multigraph given as an edge list, by matching the
/// lowest uncovered vertex in every possible way.
pub fn brute_matchings(n: usize, edges: &[(usize, usize)]) -> u64 {
    fn go(covered: &mut Vec<bool>, adj: &[Vec<usize>]) -> u64 {
        let Some(v) = covered.iter().position(|c| !c) else {
            return 1;
        };
        covered[v] = true;
        let mut total = 0;
        for &u in &adj[v] {
            if !covered[u] {
                covered[u] = true;
                total += go(covered, adj);
                covered[u] = false;
            }
        }
        covered[v] = false;
        total
    }
    if n % 2 == 1 {
        return 0;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    go(&mut vec![false; n], &adj)
}

/// Perfect matchings of the subgraph induced by the vertices with `keep`.
pub fn brute_induced(n: usize, edges: &[(usize, usize)], keep: &[bool]) -> u64 {
    let index: Vec<Option<usize>> = {
        let mut next = 0;
        (0..n)
            .map(|v| {
                keep[v].then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let m = keep.iter().filter(|k| **k).count();
    let sub: Vec<(usize, usize)> =
        edges.iter().filter_map(|&(a, b)| Some((index[a]?, index[b]?))).collect();
    brute_matchings(m, &sub)
}

/// Brute-force state sum: word bit `t` set means distinguished vertex `t`
/// must be covered, clear means it is left free.
pub fn brute_state_sum(n: usize, edges: &[(usize, usize)], dist: &[usize]) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for word in 0u64..(1 << dist.len()) {
        let mut keep = vec![true; n];
        for (t, &d) in dist.iter().enumerate() {
            keep[d] = word >> t & 1 == 1;
        }
        let c = brute_induced(n, edges, &keep);
        if c > 0 {
            out.push((word, c));
        }
    }
    out
}

/// Edge list of a planar map, one pair per edge.
pub fn map_edges(m: &PlanarMap) -> Vec<(usize, usize)> {
    (0..m.num_edges()).map(|e| m.edge_endpoints(e)).collect()
}

/// `true` when every maximal cyclic run of `true` (an n-letter) has even length.
fn runs_even(word: &[bool]) -> bool {
    let k = word.len();
    if word.iter().all(|&x| x) {
        return k % 2 == 0;
    }
    let start = word.iter().position(|&x| !x).expect("has a y");
    let mut run = 0;
    for t in 1..=k {
        if word[(start + t) % k] {
            run += 1;
        } else {
            if run % 2 == 1 {
                return false;
            }
            run = 0;
        }
    }
    true
}

/// Every edge 2-coloring is tried. Returns, per Lucas-coloring, the number
/// of vertices whose edges are all n and the number whose edges are all y
/// (an isolated vertex is both).
pub fn brute_lucas(m: &PlanarMap) -> Vec<(u32, u32)> {
    let e = m.num_edges();
    assert!(e <= 24, "brute force is only for small maps");
    let mut out = Vec::new();
    for mask in 0u64..(1 << e) {
        let mut ok = true;
        let (mut all_n, mut all_y) = (0, 0);
        for rot in m.rotations() {
            let word: Vec<bool> = rot.iter().map(|&d| mask >> m.edge_index_of_dart(d) & 1 == 1).collect();
            if !runs_even(&word) {
                ok = false;
                break;
            }
            all_n += word.iter().all(|&x| x) as u32;
            all_y += word.iter().all(|&x| !x) as u32;
        }
        if ok {
            out.push((all_n, all_y));
        }
    }
    out
}

pub fn weighted(specials: impl Iterator<Item = u32>) -> BigUint {
    specials.map(|s| BigUint::from(1u8) << s).sum()
}

/// All n×n alternating sign matrices, built row by row: each row is a
/// ±1-alternating vector starting and ending with +1, and every column's
/// partial sums stay in {0, 1} and end at 1.
pub fn brute_asms(n: usize) -> Vec<Vec<Vec<i8>>> {
    let mut rows = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        let row: Vec<i8> = (0..n)
            .map(|_| {
                let d = (c % 3) as i8 - 1;
                c /= 3;
                d
            })
            .collect();
        let nz: Vec<i8> = row.iter().copied().filter(|&x| x != 0).collect();
        let alternating = nz.first() == Some(&1) && nz.windows(2).all(|w| w[0] != w[1]) && nz.last() == Some(&1);
        if alternating {
            rows.push(row);
        }
    }
    fn go(n: usize, rows: &[Vec<i8>], acc: &mut Vec<Vec<i8>>, col: &mut Vec<i8>, out: &mut Vec<Vec<Vec<i8>>>) {
        if acc.len() == n {
            if col.iter().all(|&s| s == 1) {
                out.push(acc.clone());
            }
            return;
        }
        for r in rows {
            if (0..n).all(|j| matches!(col[j] + r[j], 0 | 1)) {
                (0..n).for_each(|j| col[j] += r[j]);
                acc.push(r.clone());
                go(n, rows, acc, col, out);
                acc.pop();
                (0..n).for_each(|j| col[j] -= r[j]);
            }
        }
    }
    let mut out = Vec::new();
    go(n, &rows, &mut Vec::new(), &mut vec![0; n], &mut out);
    out
}

/// Dual graph of the Aztec diamond of order n: unit squares whose corners
/// all satisfy |x| + |y| ≤ n + 1, adjacent when they share a side.
pub fn aztec_squares(n: usize) -> (usize, Vec<(usize, usize)>) {
    let r = n as i64 + 1;
    let inside = |i: i64, j: i64| [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)].iter().all(|&(x, y)| x.abs() + y.abs() <= r);
    let squares: Vec<(i64, i64)> =
        (-r..r).flat_map(|i| (-r..r).map(move |j| (i, j))).filter(|&(i, j)| inside(i, j)).collect();
    let mut edges = Vec::new();
    for (a, &(i, j)) in squares.iter().enumerate() {
        for (b, &(k, l)) in squares.iter().enumerate().skip(a + 1) {
            if (i - k).abs() + (j - l).abs() == 1 {
                edges.push((a, b));
            }
        }
    }
    (squares.len(), edges)
}

/// Random multigraph on `n` vertices with about `p` edge density.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// `k` distinct vertices of `0..n` in random order.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize, k: usize) -> Vec<usize> {
    rand::seq::index::sample(rng, n, k).into_vec()
}
