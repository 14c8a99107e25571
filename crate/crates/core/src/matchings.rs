//! Exact perfect-matching counters and the polygon blow-up of a planar map.
//!
//! Two counters are provided and cross-checked in the tests: a memoized
//! recursion on the bitmask of unmatched vertices (up to 63 vertices) and a
//! frontier dynamic program over a breadth-first vertex order (any size).
//! Parallel edges are distinct edges, so a double edge has two matchings.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lucas::lucas_statistic;
use crate::planar_graph::{Color, EdgeColoring, PlanarMap};

/// An abstract multigraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, count: n });
                }
            }
        }
        Ok(Self { n, edges })
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `{"n":int,"edges":[[u,v],...]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "edges": self.edges })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let g: Graph = serde_json::from_str(text)?;
        Graph::new(g.n, g.edges)
    }

    /// Neighbor lists with multiplicity, loops dropped.
    fn weighted_adjacency(&self) -> Vec<Vec<(usize, u32)>> {
        let mut adj: Vec<HashMap<usize, u32>> = vec![HashMap::new(); self.n];
        for &(u, v) in &self.edges {
            if u != v {
                *adj[u].entry(v).or_default() += 1;
                *adj[v].entry(u).or_default() += 1;
            }
        }
        adj.into_iter()
            .map(|m| {
                let mut l: Vec<(usize, u32)> = m.into_iter().collect();
                l.sort_unstable();
                l
            })
            .collect()
    }

    /// The same graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        }
    }

    /// Induced subgraph on the vertices with `keep[v]`, renumbered in order.
    pub fn induced(&self, keep: &[bool]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        let mut count = 0;
        for v in 0..self.n {
            if keep[v] {
                index[v] = count;
                count += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph { n: count, edges }
    }

    /// Breadth-first order started from a peripheral vertex of each
    /// component (the last vertex reached by a first sweep).
    pub fn bandwidth_order(&self) -> Vec<usize> {
        let adj = self.weighted_adjacency();
        let bfs = |start: usize, seen: &mut Vec<bool>, out: &mut Vec<usize>| {
            let mut q = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = q.pop_front() {
                out.push(v);
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        q.push_back(w);
                    }
                }
            }
        };
        let mut order = Vec::with_capacity(self.n);
        let mut placed = vec![false; self.n];
        for s in 0..self.n {
            if placed[s] {
                continue;
            }
            let mut probe_seen = placed.clone();
            let mut probe = Vec::new();
            bfs(s, &mut probe_seen, &mut probe);
            let far = *probe.last().unwrap();
            bfs(far, &mut placed, &mut order);
        }
        order
    }
}

impl From<&PlanarMap> for Graph {
    fn from(m: &PlanarMap) -> Graph {
        Graph { n: m.num_vertices(), edges: m.edge_list() }
    }
}

/// Number of perfect matchings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MatchCount(pub BigUint);

impl MatchCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

/// Exact `M(G)`: bitmask recursion up to 63 vertices, frontier DP above.
pub fn count_perfect_matchings(g: &Graph) -> MatchCount {
    if g.num_vertices() % 2 == 1 {
        return MatchCount(BigUint::zero());
    }
    match count_bitmask(g) {
        Some(c) => MatchCount(c),
        None => MatchCount(count_frontier(g)),
    }
}

/// Memoized recursion on the set of unmatched vertices: take the lowest
/// unmatched vertex and branch over its unmatched neighbors. `None` above
/// 63 vertices.
pub fn count_bitmask(g: &Graph) -> Option<BigUint> {
    let n = g.num_vertices();
    if n > 63 {
        return None;
    }
    if n % 2 == 1 {
        return Some(BigUint::zero());
    }
    // relabel so that the lowest unmatched vertex has a compact frontier
    let order = g.bandwidth_order();
    let mut perm = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    let adj = g.relabel(&perm).weighted_adjacency();
    let nbr: Vec<Vec<(u64, u32)>> =
        adj.iter().map(|l| l.iter().map(|&(w, k)| (1u64 << w, k)).collect()).collect();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut memo: HashMap<u64, BigUint> = HashMap::new();
    Some(bitmask_rec(full, &nbr, &mut memo))
}

fn bitmask_rec(mask: u64, nbr: &[Vec<(u64, u32)>], memo: &mut HashMap<u64, BigUint>) -> BigUint {
    if mask == 0 {
        return BigUint::one();
    }
    if let Some(c) = memo.get(&mask) {
        return c.clone();
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << v);
    let mut total = BigUint::zero();
    for &(wbit, mult) in &nbr[v] {
        if rest & wbit != 0 {
            let sub = bitmask_rec(rest & !wbit, nbr, memo);
            if !sub.is_zero() {
                total += sub * mult;
            }
        }
    }
    memo.insert(mask, total.clone());
    total
}

/// Frontier dynamic program: vertices are processed in breadth-first order;
/// the state is the set of not-yet-processed vertices already matched to an
/// earlier vertex.
pub fn count_frontier(g: &Graph) -> BigUint {
    let n = g.num_vertices();
    if n % 2 == 1 {
        return BigUint::zero();
    }
    let order = g.bandwidth_order();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj = g.relabel(&pos).weighted_adjacency();
    let mut states: HashMap<Vec<u32>, BigUint> = HashMap::from([(Vec::new(), BigUint::one())]);
    for v in 0..n {
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::with_capacity(states.len());
        for (claimed, ways) in states {
            if let Ok(i) = claimed.binary_search(&(v as u32)) {
                let mut c = claimed;
                c.remove(i);
                *next.entry(c).or_default() += ways;
                continue;
            }
            for &(w, mult) in &adj[v] {
                if w <= v {
                    continue;
                }
                let w = w as u32;
                if let Err(i) = claimed.binary_search(&w) {
                    let mut c = claimed.clone();
                    c.insert(i, w);
                    *next.entry(c).or_default() += &ways * mult;
                }
            }
        }
        states = next;
    }
    states.remove(&Vec::new()).unwrap_or_default()
}

/// Explicit perfect matchings as sorted lists of edge indices. Without a
/// limit the graph may have at most 24 vertices.
pub fn enumerate_perfect_matchings(g: &Graph, limit: Option<usize>) -> Result<Vec<Vec<usize>>> {
    let n = g.num_vertices();
    if limit.is_none() && n > 24 {
        return Err(Error::TooLarge { what: "vertices", value: n as u64, max: 24 });
    }
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        if u != v {
            inc[u].push((v, k));
            inc[v].push((u, k));
        }
    }
    let mut out = Vec::new();
    if n % 2 == 1 {
        return Ok(out);
    }
    let mut matched = vec![false; n];
    let mut chosen = Vec::new();
    enumerate_rec(&inc, &mut matched, &mut chosen, &mut out, limit)?;
    Ok(out)
}

fn enumerate_rec(
    inc: &[Vec<(usize, usize)>],
    matched: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: Option<usize>,
) -> Result<()> {
    let Some(v) = matched.iter().position(|&m| !m) else {
        if limit.is_some_and(|l| out.len() >= l) {
            return Err(Error::LimitExceeded { limit: limit.unwrap() });
        }
        let mut m = chosen.clone();
        m.sort_unstable();
        out.push(m);
        return Ok(());
    };
    matched[v] = true;
    for &(w, k) in &inc[v] {
        if !matched[w] {
            matched[w] = true;
            chosen.push(k);
            enumerate_rec(inc, matched, chosen, out, limit)?;
            chosen.pop();
            matched[w] = false;
        }
    }
    matched[v] = false;
    Ok(())
}

/// The polygon blow-up of a planar map: each vertex of degree `d >= 2` is
/// replaced by a `d`-cycle whose vertices carry the original edges in
/// rotation order; pendant vertices are kept.
#[derive(Debug, Clone)]
pub struct BlowUp {
    pub result: PlanarMap,
    /// Source vertex of every result vertex.
    pub vertex_origin: Vec<usize>,
    /// Polygon vertices of each source vertex of degree >= 2, in rotation order.
    pub polygon_of: Vec<Option<Vec<usize>>>,
    /// Source edge index of every result edge, `None` for polygon edges.
    pub edge_origin: Vec<Option<usize>>,
}

pub fn blow_up(m: &PlanarMap) -> Result<BlowUp> {
    if m.num_vertices() < 2 {
        return Err(Error::TooSmall);
    }
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    // node carrying each source dart
    let mut node_of_dart = vec![0; m.num_darts()];
    let mut vertex_origin = Vec::new();
    let mut polygon_of = vec![None; m.num_vertices()];
    for v in 0..m.num_vertices() {
        let rot = m.rotation(v);
        if rot.len() == 1 {
            node_of_dart[rot[0]] = vertex_origin.len();
            vertex_origin.push(v);
        } else {
            let mut poly = Vec::with_capacity(rot.len());
            for &d in rot {
                node_of_dart[d] = vertex_origin.len();
                poly.push(vertex_origin.len());
                vertex_origin.push(v);
            }
            polygon_of[v] = Some(poly);
        }
    }
    let nodes = vertex_origin.len();
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for (e, &d) in m.edge_ids().iter().enumerate() {
        let (a, b) = (node_of_dart[d], node_of_dart[m.partner(d)]);
        edges.push((a, b));
        edge_origin.push(Some(e));
        rotation[a].push(edges.len() - 1);
        rotation[b].push(edges.len() - 1);
    }
    for poly in polygon_of.iter().flatten() {
        let k = poly.len();
        let first = edges.len();
        for i in 0..k {
            edges.push((poly[i], poly[(i + 1) % k]));
            edge_origin.push(None);
        }
        // counterclockwise at a polygon vertex: outer edge, towards the next
        // polygon vertex, towards the previous one
        for i in 0..k {
            rotation[poly[i]].push(first + i);
            rotation[poly[i]].push(first + (i + k - 1) % k);
        }
    }
    let result = PlanarMap::from_edges(nodes, &edges, &rotation)?;
    Ok(BlowUp { result, vertex_origin, polygon_of, edge_origin })
}

impl BlowUp {
    /// The Lucas-coloring of the source induced by a perfect matching of the
    /// blow-up: a source edge is `y` exactly when its copy is matched.
    pub fn coloring_of_matching(&self, source: &PlanarMap, matching: &[usize]) -> EdgeColoring {
        let mut colors = vec![Color::N; source.num_edges()];
        for &k in matching {
            if let Some(e) = self.edge_origin[k] {
                colors[e] = Color::Y;
            }
        }
        EdgeColoring::new(colors)
    }
}

/// Both sides of the blow-up identity, computed independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem5Report {
    pub m_of_g: BigUint,
    pub matchings_of_blow_up: BigUint,
    pub equal: bool,
}

/// Compares `Σ_A 2^Sp(A)` over Lucas-colorings of `m` with the number of
/// perfect matchings of its blow-up.
pub fn verify_theorem5(m: &PlanarMap) -> Result<Theorem5Report> {
    let b = blow_up(m)?;
    let lhs = lucas_statistic(m).m;
    let rhs = count_perfect_matchings(&Graph::from(&b.result)).0;
    Ok(Theorem5Report { equal: lhs == rhs, m_of_g: lhs, matchings_of_blow_up: rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lucas::{enumerate_lucas, is_lucas_coloring, special_count};
    use crate::planar_graph::fixtures::*;
    use crate::planar_graph::random_planar_map;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cycle_graph(k: usize) -> Graph {
        Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)).collect()).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_perfect_matchings(&cycle_graph(6)).0, big(2));
        assert_eq!(count_perfect_matchings(&cycle_graph(5)).0, big(0));
        assert_eq!(count_perfect_matchings(&Graph::new(0, vec![]).unwrap()).0, big(1));
        let p2 = Graph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(count_perfect_matchings(&p2).0, big(2));
        assert_eq!(count_frontier(&p2), big(2));
        // K4 has three perfect matchings
        let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(count_perfect_matchings(&k4).0, big(3));
        assert_eq!(count_frontier(&k4), big(3));
    }

    #[test]
    fn explicit_matchings() {
        let e = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(enumerate_perfect_matchings(&e, None).unwrap(), vec![vec![0]]);
        assert_eq!(enumerate_perfect_matchings(&cycle_graph(4), None).unwrap().len(), 2);
        let six = enumerate_perfect_matchings(&cycle_graph(6), None).unwrap();
        assert_eq!(six, vec![vec![0, 2, 4], vec![1, 3, 5]]);
        let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(enumerate_perfect_matchings(&k4, Some(2)), Err(Error::LimitExceeded { limit: 2 }));
        assert!(enumerate_perfect_matchings(&cycle_graph(26), None).is_err());
        assert_eq!(enumerate_perfect_matchings(&cycle_graph(26), Some(5)).unwrap().len(), 2);
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                    if rng.gen_bool(0.1) {
                        edges.push((v, u));
                    }
                }
            }
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn counters_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..150 {
            let n = 2 * rng.gen_range(0..11);
            let p = rng.gen_range(0.15..0.6);
            let g = random_graph(&mut rng, n, p);
            let a = count_bitmask(&g).unwrap();
            let b = count_frontier(&g);
            assert_eq!(a, b);
            if n <= 14 {
                let explicit = enumerate_perfect_matchings(&g, None).unwrap();
                assert_eq!(BigUint::from(explicit.len()), a);
            }
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(count_perfect_matchings(&g.relabel(&perm)).0, a);
        }
    }

    #[test]
    fn grid_counts() {
        // 2 x m grid graphs have Fibonacci many matchings; 4x4 has 36, 6x6 has 6728
        let grid = |r: usize, c: usize| {
            let mut edges = Vec::new();
            for i in 0..r {
                for j in 0..c {
                    if j + 1 < c {
                        edges.push((i * c + j, i * c + j + 1));
                    }
                    if i + 1 < r {
                        edges.push((i * c + j, (i + 1) * c + j));
                    }
                }
            }
            Graph::new(r * c, edges).unwrap()
        };
        assert_eq!(count_frontier(&grid(2, 10)), big(89));
        assert_eq!(count_frontier(&grid(4, 4)), big(36));
        assert_eq!(count_frontier(&grid(6, 6)), big(6728));
        assert_eq!(count_perfect_matchings(&grid(8, 8)).0, big(12988816));
        assert_eq!(count_frontier(&grid(8, 8)), big(12988816));
    }

    #[test]
    fn triangle_blow_up() {
        let t = triangle();
        let b = blow_up(&t).unwrap();
        assert_eq!(b.result.num_vertices(), 6);
        assert_eq!(b.result.num_edges(), 9);
        assert!(b.result.is_connected());
        let r = verify_theorem5(&t).unwrap();
        assert_eq!(r.m_of_g, big(9));
        assert!(r.equal);
        assert_eq!(blow_up(&single_vertex()).unwrap_err(), Error::TooSmall);
    }

    #[test]
    fn blow_up_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let n = rng.gen_range(2..8);
            let extra = rng.gen_range(0..7);
            let m = random_planar_map(&mut rng, n, extra);
            let b = blow_up(&m).unwrap();
            let big_degrees: usize = (0..n).map(|v| m.degree(v)).filter(|&d| d >= 2).sum();
            let pendants = (0..n).filter(|&v| m.degree(v) == 1).count();
            assert_eq!(b.result.num_vertices(), big_degrees + pendants);
            assert_eq!(b.result.num_edges(), m.num_edges() + big_degrees);
            for v in 0..n {
                if let Some(poly) = &b.polygon_of[v] {
                    assert_eq!(poly.len(), m.degree(v));
                    for &p in poly {
                        assert_eq!(b.vertex_origin[p], v);
                        assert_eq!(b.result.degree(p), 3);
                    }
                }
            }
        }
    }

    #[test]
    fn matchings_map_onto_lucas_colorings() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..40 {
            let n = rng.gen_range(2..6);
            let extra = rng.gen_range(0..4);
            let m = random_planar_map(&mut rng, n, extra);
            let b = blow_up(&m).unwrap();
            let g = Graph::from(&b.result);
            if g.num_vertices() > 24 {
                continue;
            }
            let mut fibres: HashMap<EdgeColoring, usize> = HashMap::new();
            for pm in enumerate_perfect_matchings(&g, None).unwrap() {
                let c = b.coloring_of_matching(&m, &pm);
                assert!(is_lucas_coloring(&m, &c));
                *fibres.entry(c).or_default() += 1;
            }
            let colorings: Vec<_> = enumerate_lucas(&m).collect();
            assert_eq!(fibres.len(), colorings.len());
            for w in colorings {
                assert_eq!(fibres[&w.coloring], 1 << special_count(&m, &w));
            }
        }
    }
}
