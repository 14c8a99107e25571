//! Lucas-colorings of embedded maps and the statistic `m(G) = Σ 2^Sp`.
//!
//! A coloring of the edges by `{y, n}` is a Lucas-coloring when, read
//! cyclically around every vertex, each maximal run of `n` has even length
//! (so the `n` edges split into pairs of rotation-adjacent edges).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planar_graph::{Color, EdgeColoring, PlanarMap};

/// True when every maximal run of `n` in the linear word has even length.
pub fn is_fibonacci_word(word: &[Color]) -> bool {
    let mut run = 0usize;
    for &c in word {
        match c {
            Color::N => run += 1,
            Color::Y => {
                if run % 2 == 1 {
                    return false;
                }
                run = 0;
            }
        }
    }
    run % 2 == 0
}

/// True when every maximal cyclic run of `n` has even length. The all-`n`
/// word is one run of the full length.
pub fn is_local_valid(cyclic_word: &[Color]) -> bool {
    match cyclic_word.iter().position(|&c| c == Color::Y) {
        None => cyclic_word.len() % 2 == 0,
        Some(start) => {
            let k = cyclic_word.len();
            let mut run = 0usize;
            for i in 1..=k {
                match cyclic_word[(start + i) % k] {
                    Color::N => run += 1,
                    Color::Y => {
                        if run % 2 == 1 {
                            return false;
                        }
                        run = 0;
                    }
                }
            }
            true
        }
    }
}

/// Partial version of [`is_local_valid`]: rejects only runs that are already
/// closed off by `y` on both sides.
fn partial_valid(word: &[Option<Color>]) -> bool {
    let Some(hole) = word.iter().position(Option::is_none) else {
        let full: Vec<Color> = word.iter().map(|c| c.unwrap()).collect();
        return is_local_valid(&full);
    };
    let k = word.len();
    let mut run: Option<usize> = None; // Some(len) once a run is opened by a y
    for i in 1..=k {
        match word[(hole + i) % k] {
            None => run = None,
            Some(Color::Y) => {
                if let Some(len) = run {
                    if len % 2 == 1 {
                        return false;
                    }
                }
                run = Some(0);
            }
            Some(Color::N) => {
                if let Some(len) = run.as_mut() {
                    *len += 1;
                }
            }
        }
    }
    true
}

/// A Lucas-coloring. The pairing of `n` darts at each vertex is recovered
/// on demand by [`LucasWitness::pairings`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LucasWitness {
    pub coloring: EdgeColoring,
}

impl LucasWitness {
    /// Pairs of rotation-adjacent `n` darts at every vertex. At a vertex of
    /// even degree whose darts are all `n` there are two pairings; the one
    /// starting at rotation position 0 is returned.
    pub fn pairings(&self, map: &PlanarMap) -> Vec<Vec<(usize, usize)>> {
        (0..map.num_vertices())
            .map(|v| {
                let rot = map.rotation(v);
                let k = rot.len();
                let colors: Vec<Color> =
                    rot.iter().map(|&d| self.coloring.dart_color(map, d)).collect();
                let start = colors.iter().position(|&c| c == Color::Y).map_or(0, |p| p + 1);
                let mut pairs = Vec::new();
                let mut i = 0;
                while i < k {
                    let p = (start + i) % k;
                    if colors[p] == Color::N {
                        pairs.push((rot[p], rot[(p + 1) % k]));
                        i += 2;
                    } else {
                        i += 1;
                    }
                }
                pairs
            })
            .collect()
    }
}

fn vertex_word(map: &PlanarMap, coloring: &EdgeColoring, v: usize) -> Vec<Color> {
    map.rotation(v).iter().map(|&d| coloring.dart_color(map, d)).collect()
}

/// Checks the local rule at every vertex.
pub fn is_lucas_coloring(map: &PlanarMap, coloring: &EdgeColoring) -> bool {
    coloring.len() == map.num_edges()
        && (0..map.num_vertices()).all(|v| is_local_valid(&vertex_word(map, coloring, v)))
}

/// Number of vertices all of whose edges are `n`. Isolated vertices count.
pub fn special_count(map: &PlanarMap, w: &LucasWitness) -> usize {
    count_monochrome(map, &w.coloring, Color::N)
}

/// Number of vertices all of whose edges are `y`. Isolated vertices count.
pub fn dual_special_count(map: &PlanarMap, w: &LucasWitness) -> usize {
    count_monochrome(map, &w.coloring, Color::Y)
}

fn count_monochrome(map: &PlanarMap, coloring: &EdgeColoring, color: Color) -> usize {
    (0..map.num_vertices())
        .filter(|&v| map.rotation(v).iter().all(|&d| coloring.dart_color(map, d) == color))
        .count()
}

/// The `y ↔ n` swap, defined on maps whose vertices all have even degree
/// at least 2.
///
/// At degree 2 and 4 the swap always yields a Lucas-coloring. From degree 6
/// on it need not: `nnynny` is valid but its swap `yynyyn` is not, and that
/// case is reported as [`Error::SwapLeavesLucas`].
pub fn dual_coloring(map: &PlanarMap, w: &LucasWitness) -> Result<LucasWitness> {
    for v in 0..map.num_vertices() {
        let degree = map.degree(v);
        if degree == 0 || degree % 2 == 1 {
            return Err(Error::OddDegreeVertex { vertex: v, degree });
        }
    }
    let swapped = w.coloring.swapped();
    if let Some(v) =
        (0..map.num_vertices()).find(|&v| !is_local_valid(&vertex_word(map, &swapped, v)))
    {
        return Err(Error::SwapLeavesLucas { vertex: v });
    }
    Ok(LucasWitness { coloring: swapped })
}

/// Depth-first enumeration over edges in canonical order, `y` before `n`,
/// pruning at each endpoint as soon as a closed odd run appears.
pub struct LucasIter<'a> {
    map: &'a PlanarMap,
    assigned: Vec<Color>,
    prefix_len: usize,
    started: bool,
    exhausted: bool,
}

impl<'a> LucasIter<'a> {
    fn new(map: &'a PlanarMap, prefix: Vec<Color>) -> Self {
        let prefix_len = prefix.len();
        Self { map, assigned: prefix, prefix_len, started: false, exhausted: false }
    }

    fn dart_color(&self, d: usize) -> Option<Color> {
        self.assigned.get(self.map.edge_index_of_dart(d)).copied()
    }

    fn vertex_ok(&self, v: usize) -> bool {
        let word: Vec<Option<Color>> =
            self.map.rotation(v).iter().map(|&d| self.dart_color(d)).collect();
        partial_valid(&word)
    }

    fn last_edge_ok(&self) -> bool {
        let (u, v) = self.map.edge_endpoints(self.assigned.len() - 1);
        self.vertex_ok(u) && self.vertex_ok(v)
    }

    fn prefix_ok(&self) -> bool {
        (0..self.map.num_vertices()).all(|v| self.vertex_ok(v))
    }

    /// Advance to the next sibling assignment; false once the subtree under
    /// the fixed prefix is exhausted.
    fn bump(&mut self) -> bool {
        loop {
            while self.assigned.len() > self.prefix_len && self.assigned.last() == Some(&Color::N) {
                self.assigned.pop();
            }
            if self.assigned.len() == self.prefix_len {
                return false;
            }
            *self.assigned.last_mut().unwrap() = Color::N;
            if self.last_edge_ok() {
                return true;
            }
        }
    }

    fn descend(&mut self) -> bool {
        loop {
            if self.assigned.len() == self.map.num_edges() {
                return true;
            }
            self.assigned.push(Color::Y);
            if !self.last_edge_ok() && !self.bump() {
                return false;
            }
        }
    }
}

impl Iterator for LucasIter<'_> {
    type Item = LucasWitness;

    fn next(&mut self) -> Option<LucasWitness> {
        if self.exhausted {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.prefix_ok() && self.descend()
        } else {
            self.bump() && self.descend()
        };
        if found {
            Some(LucasWitness { coloring: EdgeColoring::new(self.assigned.clone()) })
        } else {
            self.exhausted = true;
            None
        }
    }
}

/// All Lucas-colorings of `map`, each exactly once, in lexicographic order
/// over edge indices with `y < n`.
pub fn enumerate_lucas(map: &PlanarMap) -> LucasIter<'_> {
    LucasIter::new(map, Vec::new())
}

/// `|Luc(G)|`, `m(G)` and optionally every coloring with its special count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasStats {
    pub count: BigUint,
    pub m: BigUint,
    pub per_coloring: Option<Vec<(EdgeColoring, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct StatsDoc {
    count: String,
    m: String,
}

impl LucasStats {
    /// `{"count":"<bigint>","m":"<bigint>"}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(StatsDoc { count: self.count.to_string(), m: self.m.to_string() })
            .expect("stats serialize")
    }
}

/// Histogram of a per-coloring statistic: `hist[s]` colorings have value `s`.
fn histogram<F>(map: &PlanarMap, stat: F) -> Vec<u64>
where
    F: Fn(&EdgeColoring) -> usize + Sync,
{
    // Split the search tree on a short prefix so subtrees run in parallel.
    let split = map.num_edges().min(10);
    let prefixes: Vec<Vec<Color>> = {
        let mut out = vec![Vec::new()];
        for _ in 0..split {
            out = out
                .into_iter()
                .flat_map(|p: Vec<Color>| {
                    [Color::Y, Color::N].into_iter().map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .filter(|q| LucasIter::new(map, q.clone()).prefix_ok())
                .collect();
        }
        out
    };
    let bins = map.num_vertices() + 1;
    prefixes
        .into_par_iter()
        .map(|prefix| {
            let mut hist = vec![0u64; bins];
            for w in LucasIter::new(map, prefix) {
                hist[stat(&w.coloring)] += 1;
            }
            hist
        })
        .reduce(
            || vec![0u64; bins],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

/// `hist[s]` = number of Lucas-colorings with exactly `s` special vertices.
pub fn special_histogram(map: &PlanarMap) -> Vec<u64> {
    histogram(map, |c| count_monochrome(map, c, Color::N))
}

/// `hist[s]` = number of Lucas-colorings with exactly `s` all-`y` vertices.
pub fn dual_special_histogram(map: &PlanarMap) -> Vec<u64> {
    histogram(map, |c| count_monochrome(map, c, Color::Y))
}

/// `Σ_s hist[s] · 2^s`.
pub fn weighted_sum(hist: &[u64]) -> BigUint {
    hist.iter()
        .enumerate()
        .fold(BigUint::zero(), |acc, (s, &k)| acc + (BigUint::from(k) << s))
}

/// Exact `|Luc(G)|` and `m(G) = Σ_A 2^Sp(A)`.
pub fn lucas_statistic(map: &PlanarMap) -> LucasStats {
    let hist = special_histogram(map);
    LucasStats {
        count: hist.iter().map(|&k| BigUint::from(k)).sum(),
        m: weighted_sum(&hist),
        per_coloring: None,
    }
}

/// As [`lucas_statistic`], also listing every coloring (in enumeration
/// order) with its special count.
pub fn lucas_statistic_detailed(map: &PlanarMap) -> LucasStats {
    let mut count = BigUint::zero();
    let mut m = BigUint::zero();
    let mut list = Vec::new();
    for w in enumerate_lucas(map) {
        let sp = special_count(map, &w);
        count += BigUint::one();
        m += BigUint::one() << sp;
        list.push((w.coloring, sp));
    }
    LucasStats { count, m, per_coloring: Some(list) }
}
