//! The cube of resolutions of a 4-regular planar projection and its
//! two-colored refinement.
//!
//! Only the projection is modeled. Crossing information never enters: the
//! smoothings, the circles and the color-compatibility rule depend on the
//! planar map alone, so every diagram over the same projection gives the
//! same summand count.
//!
//! At a crossing with counterclockwise darts `(d0, d1, d2, d3)` the
//! 0-smoothing joins `d0–d1` and `d2–d3`, the 1-smoothing joins `d1–d2` and
//! `d3–d0`.

use std::collections::HashMap;

use num_bigint::BigUint;
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lucas::enumerate_lucas;
use crate::planar_graph::{parse_map_value, Color, PlanarMap};

/// A 4-regular connected loopless planar map with an ordering of its
/// vertices; crossing `i` of a resolution word is vertex `crossing_order[i]`.
#[derive(Debug, Clone)]
pub struct Projection {
    map: PlanarMap,
    crossing_order: Vec<usize>,
}

impl Projection {
    pub fn new(map: PlanarMap) -> Result<Self> {
        let order = (0..map.num_vertices()).collect();
        Self::with_order(map, order)
    }

    pub fn with_order(map: PlanarMap, crossing_order: Vec<usize>) -> Result<Self> {
        for v in 0..map.num_vertices() {
            if map.degree(v) != 4 {
                return Err(Error::NotFourRegular { vertex: v, degree: map.degree(v) });
            }
        }
        if map.num_vertices() == 0 || !map.is_connected() {
            return Err(Error::NotConnected);
        }
        let mut seen = vec![false; map.num_vertices()];
        if crossing_order.len() != seen.len() {
            return Err(Error::WordLengthMismatch { expected: seen.len(), got: crossing_order.len() });
        }
        for &v in &crossing_order {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidMap(format!("crossing order is not a permutation at {v}")));
            }
        }
        Ok(Self { map, crossing_order })
    }

    /// Planar-map JSON, optionally with `"crossing_order":[...]`.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let map = parse_map_value(value)?;
        match value.get("crossing_order") {
            None => Self::new(map),
            Some(order) => {
                let order: Vec<usize> = serde_json::from_value(order.clone())?;
                Self::with_order(map, order)
            }
        }
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn crossings(&self) -> usize {
        self.crossing_order.len()
    }

    pub fn crossing_order(&self) -> &[usize] {
        &self.crossing_order
    }

    /// The projection with every rotation reversed.
    pub fn mirror(&self) -> Projection {
        Projection { map: self.map.mirror(), crossing_order: self.crossing_order.clone() }
    }

    /// Dart joined to `d` inside its crossing under `smoothing` (0 or 1).
    fn mate(&self, d: usize, smoothing: u8) -> usize {
        let pos = self.map.position(d);
        let rot = self.map.rotation(self.map.vertex_of(d));
        let other = match (smoothing, pos) {
            (0, 0) => 1,
            (0, 1) => 0,
            (0, 2) => 3,
            (0, _) => 2,
            (_, 0) => 3,
            (_, 1) => 2,
            (_, 2) => 1,
            (_, _) => 0,
        };
        rot[other]
    }

    /// Bit of vertex `v` inside a resolution word.
    fn crossing_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.crossing_order.len()];
        for (i, &v) in self.crossing_order.iter().enumerate() {
            idx[v] = i;
        }
        idx
    }
}

/// Closed traces: from a dart cross its edge, then jump to `next(dart)`.
fn trace(map: &PlanarMap, next: impl Fn(usize) -> usize) -> (Vec<Vec<usize>>, Vec<usize>) {
    let darts = map.num_darts();
    let mut circle_of = vec![usize::MAX; darts];
    let mut circles = Vec::new();
    for start in 0..darts {
        if circle_of[start] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut circle = Vec::new();
        let mut d = start;
        loop {
            let p = map.partner(d);
            circle_of[d] = id;
            circle_of[p] = id;
            circle.push(d);
            circle.push(p);
            d = next(p);
            if d == start {
                break;
            }
        }
        circles.push(circle);
    }
    (circles, circle_of)
}

/// A complete resolution: the smoothing word and its circles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    /// Bit `i` is the smoothing at crossing `i`.
    pub u: u32,
    /// Darts of each circle, in trace order.
    pub circles: Vec<Vec<usize>>,
    pub circle_of_dart: Vec<usize>,
}

impl Resolution {
    pub fn num_circles(&self) -> usize {
        self.circles.len()
    }

    pub fn height(&self) -> u32 {
        self.u.count_ones()
    }
}

pub const MAX_CROSSINGS: usize = 16;

fn word_from_bits(bits: &[u8]) -> u32 {
    bits.iter().enumerate().fold(0, |acc, (i, &b)| acc | ((b as u32 & 1) << i))
}

/// Resolves every crossing according to `word` (one 0/1 entry per crossing).
pub fn resolve(p: &Projection, word: &[u8]) -> Result<Resolution> {
    if word.len() != p.crossings() {
        return Err(Error::WordLengthMismatch { expected: p.crossings(), got: word.len() });
    }
    if word.iter().any(|&b| b > 1) {
        return Err(Error::MalformedDocument("resolution words are over {0,1}".into()));
    }
    if p.crossings() > MAX_CROSSINGS {
        return Err(Error::TooLarge { what: "crossings", value: p.crossings() as u64, max: MAX_CROSSINGS as u64 });
    }
    Ok(resolve_bits(p, word_from_bits(word), &p.crossing_index()))
}

fn resolve_bits(p: &Projection, u: u32, index: &[usize]) -> Resolution {
    let (circles, circle_of_dart) = trace(&p.map, |d| {
        let bit = (u >> index[p.map.vertex_of(d)] & 1) as u8;
        p.mate(d, bit)
    });
    Resolution { u, circles, circle_of_dart }
}

/// Number of components of the link over this projection: traces that go
/// straight through every crossing.
pub fn link_components(p: &Projection) -> usize {
    trace(&p.map, |d| {
        let rot = p.map.rotation(p.map.vertex_of(d));
        rot[(p.map.position(d) + 2) % 4]
    })
    .0
    .len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Saddle {
    /// Circles `a` and `b` of the source become circle `c` of the target.
    Merge { a: usize, b: usize, c: usize },
    /// Circle `a` of the source becomes circles `b` and `c` of the target.
    Split { a: usize, b: usize, c: usize },
}

/// A cover relation `u ≺ v` differing at crossing `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverEdge {
    pub from: u32,
    pub to: u32,
    pub crossing: usize,
    pub sign: i8,
    pub saddle: Saddle,
    /// Source circle index to target circle index for every circle that
    /// avoids the changed crossing.
    pub spectators: Vec<(usize, usize)>,
}

/// All `2^n` resolutions (indexed by word) and all cover edges.
#[derive(Debug, Clone)]
pub struct Cube {
    pub resolutions: Vec<Resolution>,
    pub edges: Vec<CoverEdge>,
}

impl Cube {
    pub fn edge(&self, from: u32, to: u32) -> Option<&CoverEdge> {
        self.edges.iter().find(|e| e.from == from && e.to == to)
    }
}

/// `(-1)^(u_0 + ... + u_{k-1})`.
pub fn cube_sign(u: u32, k: usize) -> i8 {
    if (u & ((1u32 << k) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn cube(p: &Projection) -> Result<Cube> {
    let n = p.crossings();
    if n > MAX_CROSSINGS {
        return Err(Error::TooLarge { what: "crossings", value: n as u64, max: MAX_CROSSINGS as u64 });
    }
    let index = p.crossing_index();
    let resolutions: Vec<Resolution> = (0..1u32 << n).into_par_iter().map(|u| resolve_bits(p, u, &index)).collect();
    let edges = (0..1u32 << n)
        .into_par_iter()
        .flat_map_iter(|u| {
            let resolutions = &resolutions;
            (0..n).filter(move |&k| u >> k & 1 == 0).map(move |k| {
                cover_edge(p, &resolutions[u as usize], &resolutions[(u | 1 << k) as usize], k)
            })
        })
        .collect();
    Ok(Cube { resolutions, edges })
}

fn cover_edge(p: &Projection, src: &Resolution, dst: &Resolution, k: usize) -> CoverEdge {
    let darts = p.map.rotation(p.crossing_order[k]);
    let touched = |r: &Resolution| {
        let mut ids: Vec<usize> = darts.iter().map(|&d| r.circle_of_dart[d]).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    };
    let (before, after) = (touched(src), touched(dst));
    let saddle = match (before.as_slice(), after.as_slice()) {
        (&[a, b], &[c]) => Saddle::Merge { a, b, c },
        (&[a], &[b, c]) => Saddle::Split { a, b, c },
        _ => unreachable!("a planar saddle changes the circle count by one"),
    };
    let spectators = (0..src.num_circles())
        .filter(|c| !before.contains(c))
        .map(|c| (c, dst.circle_of_dart[src.circles[c][0]]))
        .collect();
    CoverEdge { from: src.u, to: dst.u, crossing: k, sign: cube_sign(src.u, k), saddle, spectators }
}

/// A resolution together with a color for each of its circles (bit `c` set
/// when circle `c` is red).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubeState {
    pub u: u32,
    pub colors: u64,
}

fn circle_color(colors: u64, c: usize) -> u64 {
    colors >> c & 1
}

/// Whether the differential between two states along a cover edge is
/// nonzero: spectators keep their color and all circles taking part in the
/// saddle share one color.
pub fn nonzero_differential(cube: &Cube, s: CubeState, t: CubeState) -> Result<bool> {
    let e = cube.edge(s.u, t.u).ok_or(Error::NotCoverPair)?;
    Ok(target_state(e, s.colors) == Some(t.colors))
}

/// The unique state reached by a nonzero differential, if any.
fn target_state(e: &CoverEdge, colors: u64) -> Option<u64> {
    let (participants, targets): (Vec<usize>, Vec<usize>) = match e.saddle {
        Saddle::Merge { a, b, c } => (vec![a, b], vec![c]),
        Saddle::Split { a, b, c } => (vec![a], vec![b, c]),
    };
    let col = circle_color(colors, participants[0]);
    if participants.iter().any(|&x| circle_color(colors, x) != col) {
        return None;
    }
    let mut out = 0u64;
    for &(from, to) in &e.spectators {
        out |= circle_color(colors, from) << to;
    }
    for t in targets {
        out |= col << t;
    }
    Some(out)
}

pub const MAX_STATES: u64 = 10_000_000;

/// Components of the graph on all two-colored states joined by nonzero
/// differentials, with the heights each component spans.
#[derive(Debug, Clone)]
pub struct Summands {
    pub count: usize,
    /// Sorted distinct heights `|u|` met by each component.
    pub heights: Vec<Vec<u32>>,
}

pub fn summands(p: &Projection) -> Result<Summands> {
    let cube = cube(p)?;
    let mut offset = Vec::with_capacity(cube.resolutions.len() + 1);
    let mut total = 0u64;
    for r in &cube.resolutions {
        offset.push(total);
        if r.num_circles() > 62 {
            return Err(Error::TooLarge { what: "circles", value: r.num_circles() as u64, max: 62 });
        }
        total += 1u64 << r.num_circles();
        if total > MAX_STATES {
            return Err(Error::TooLarge { what: "states", value: total, max: MAX_STATES });
        }
    }
    let links: Vec<(usize, usize)> = cube
        .edges
        .par_iter()
        .flat_map_iter(|e| {
            let k = cube.resolutions[e.from as usize].num_circles();
            let (a, b) = (offset[e.from as usize], offset[e.to as usize]);
            (0..1u64 << k).filter_map(move |c| target_state(e, c).map(|t| ((a + c) as usize, (b + t) as usize)))
        })
        .collect();
    let mut uf = UnionFind::<usize>::new(total as usize);
    for (x, y) in links {
        uf.union(x, y);
    }
    let labels = uf.into_labeling();
    let mut comp: HashMap<usize, Vec<u32>> = HashMap::new();
    for (u, r) in cube.resolutions.iter().enumerate() {
        for c in 0..1u64 << r.num_circles() {
            comp.entry(labels[(offset[u] + c) as usize]).or_default().push(r.height());
        }
    }
    let mut heights: Vec<Vec<u32>> = comp
        .into_values()
        .map(|mut h| {
            h.sort_unstable();
            h.dedup();
            h
        })
        .collect();
    heights.sort();
    Ok(Summands { count: heights.len(), heights })
}

/// Number of direct summands of the two-colored complex.
pub fn count_summands(p: &Projection) -> Result<BigUint> {
    Ok(BigUint::from(summands(p)?.count))
}

/// The edge coloring carried by a state: each edge takes its circle's color.
pub fn state_edge_colors(p: &Projection, r: &Resolution, colors: u64) -> Vec<Color> {
    p.map
        .edge_ids()
        .iter()
        .map(|&d| if circle_color(colors, r.circle_of_dart[d]) == 1 { Color::N } else { Color::Y })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Report {
    pub summands: BigUint,
    pub luc: BigUint,
    pub equal: bool,
}

impl Theorem2Report {
    /// `{"summands":"..","luc":"..","equal":true}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "summands": self.summands.to_string(),
            "luc": self.luc.to_string(),
            "equal": self.equal,
        })
    }
}

pub fn verify_theorem2(p: &Projection) -> Result<Theorem2Report> {
    let summands = count_summands(p)?;
    let luc = BigUint::from(enumerate_lucas(&p.map).count());
    Ok(Theorem2Report { equal: summands == luc, summands, luc })
}

/// Medial graphs of small plane maps give the standard projections.
pub mod fixtures {
    use super::*;
    use crate::planar_graph::fixtures::{cycle, wheel};

    /// The medial map: one vertex per edge of `m`, one edge per corner.
    /// Dart `x` of `m` contributes medial darts `2x` (towards the corner
    /// after `x`) and `2x + 1` (towards the corner before `x`).
    pub fn medial(m: &PlanarMap) -> Result<PlanarMap> {
        let a = |x: usize| 2 * x;
        let b = |x: usize| 2 * x + 1;
        let mut pairs = Vec::with_capacity(m.num_darts());
        for x in 0..m.num_darts() {
            pairs.push((a(x), b(m.next_ccw(x))));
        }
        let rotation = m
            .edge_ids()
            .iter()
            .map(|&d| {
                let e = m.partner(d);
                vec![b(e), a(d), b(d), a(e)]
            })
            .collect();
        PlanarMap::new(rotation, &pairs)
    }

    fn proj(m: PlanarMap) -> Projection {
        Projection::new(medial(&m).expect("medial of a plane map is plane")).expect("medial maps are 4-regular")
    }

    /// Two crossings, two components.
    pub fn hopf() -> Projection {
        proj(cycle(2))
    }

    /// The three-crossing (2,3) torus projection.
    pub fn trefoil() -> Projection {
        proj(cycle(3))
    }

    /// Four crossings: the medial of a triangle with one edge doubled.
    pub fn figure_eight() -> Projection {
        // edges 0,1 join vertices 0 and 1; edge 2 is 1–2; edge 3 is 2–0
        let m = PlanarMap::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 0)], &[vec![0, 1, 3], vec![2, 1, 0], vec![3, 2]])
            .expect("plane map");
        proj(m)
    }

    /// The five-crossing (2,5) torus projection.
    pub fn cinquefoil() -> Projection {
        proj(cycle(5))
    }

    /// Six crossings: the medial of the tetrahedron (the octahedron).
    pub fn borromean() -> Projection {
        proj(wheel(3))
    }

    /// Six crossings: the medial of two triangles sharing a vertex, a
    /// connected sum of two trefoil projections.
    pub fn bowtie() -> Projection {
        let edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)];
        let rotation = vec![vec![0, 2, 3, 5], vec![1, 0], vec![2, 1], vec![4, 3], vec![5, 4]];
        proj(PlanarMap::from_edges(5, &edges, &rotation).expect("plane map"))
    }

    /// Every bundled projection with its name.
    pub fn all() -> Vec<(&'static str, Projection)> {
        vec![
            ("hopf", hopf()),
            ("trefoil", trefoil()),
            ("figure-eight", figure_eight()),
            ("cinquefoil", cinquefoil()),
            ("borromean", borromean()),
            ("bowtie", bowtie()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::lucas::is_lucas_coloring;
    use crate::planar_graph::EdgeColoring;

    #[test]
    fn fixture_shapes() {
        let expected = [("hopf", 2, 2), ("trefoil", 3, 1), ("figure-eight", 4, 1), ("cinquefoil", 5, 1), ("borromean", 6, 3), ("bowtie", 6, 1)];
        for ((name, p), (ename, crossings, comps)) in all().into_iter().zip(expected) {
            assert_eq!(name, ename);
            assert_eq!(p.crossings(), crossings, "{name}");
            assert_eq!(link_components(&p), comps, "{name}");
        }
    }

    #[test]
    fn hopf_resolutions() {
        let p = hopf();
        assert_eq!(resolve(&p, &[0, 0]).unwrap().num_circles() + resolve(&p, &[1, 1]).unwrap().num_circles(), 4);
        assert_eq!(resolve(&p, &[0, 1]).unwrap().num_circles(), 1);
        assert_eq!(resolve(&p, &[1, 0]).unwrap().num_circles(), 1);
        assert_eq!(resolve(&p, &[0]), Err(Error::WordLengthMismatch { expected: 2, got: 1 }));
        let c = cube(&p).unwrap();
        assert_eq!((c.resolutions.len(), c.edges.len()), (4, 4));
    }

    #[test]
    fn cube_structure() {
        for (_, p) in all() {
            let n = p.crossings();
            let c = cube(&p).unwrap();
            assert_eq!(c.edges.len(), n << (n - 1));
            for e in &c.edges {
                let (x, y) = (c.resolutions[e.from as usize].num_circles(), c.resolutions[e.to as usize].num_circles());
                assert_eq!(x.abs_diff(y), 1);
            }
            for u in 0..1u32 << n {
                for i in 0..n {
                    for j in i + 1..n {
                        if u >> i & 1 == 0 && u >> j & 1 == 0 {
                            let (a, b, d) = (u | 1 << i, u | 1 << j, u | 1 << i | 1 << j);
                            let one = c.edge(u, a).unwrap().sign * c.edge(a, d).unwrap().sign;
                            let two = c.edge(u, b).unwrap().sign * c.edge(b, d).unwrap().sign;
                            assert_eq!(one, -two);
                        }
                    }
                }
            }
            for h in 0..=n {
                let layer = (0..1u32 << n).filter(|u| u.count_ones() as usize == h).count();
                let binom = (0..h).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
                assert_eq!(layer, binom);
            }
        }
    }

    #[test]
    fn differential_rule() {
        let p = hopf();
        let c = cube(&p).unwrap();
        // 00 has two circles that merge into the single circle of 10
        let e = c.edge(0, 1).unwrap();
        assert!(matches!(e.saddle, Saddle::Merge { .. }));
        let red_red = CubeState { u: 0, colors: 0b11 };
        assert!(nonzero_differential(&c, red_red, CubeState { u: 1, colors: 1 }).unwrap());
        assert!(!nonzero_differential(&c, red_red, CubeState { u: 1, colors: 0 }).unwrap());
        for t in 0..2 {
            assert!(!nonzero_differential(&c, CubeState { u: 0, colors: 0b01 }, CubeState { u: 1, colors: t }).unwrap());
        }
        let split = c.edge(1, 3).unwrap();
        assert!(matches!(split.saddle, Saddle::Split { .. }));
        for t in [0b01, 0b10] {
            assert!(!nonzero_differential(&c, CubeState { u: 1, colors: 0 }, CubeState { u: 3, colors: t }).unwrap());
        }
        assert_eq!(nonzero_differential(&c, red_red, CubeState { u: 3, colors: 0 }), Err(Error::NotCoverPair));
    }

    #[test]
    fn states_carry_lucas_colorings() {
        for (_, p) in all() {
            let c = cube(&p).unwrap();
            for r in &c.resolutions {
                for colors in 0..1u64 << r.num_circles() {
                    let col = EdgeColoring::new(state_edge_colors(&p, r, colors));
                    assert!(is_lucas_coloring(p.map(), &col));
                }
            }
        }
    }

    #[test]
    fn summands_equal_lucas_count() {
        for (name, p) in all() {
            let r = verify_theorem2(&p).unwrap();
            assert!(r.equal, "{name}: {r:?}");
            let m = verify_theorem2(&p.mirror()).unwrap();
            assert_eq!(m.summands, r.summands);
        }
    }

    #[test]
    fn components_span_intervals() {
        for (_, p) in all() {
            for h in summands(&p).unwrap().heights {
                assert_eq!(h.len() as u32, h.last().unwrap() - h[0] + 1);
            }
        }
    }

    #[test]
    fn relabeling_a_crossing_keeps_the_count() {
        // swapping 0 and 1 at one crossing is a quarter turn of its rotation
        for (_, p) in all() {
            let base = count_summands(&p).unwrap();
            let mut rot: Vec<Vec<usize>> = p.map().rotations().to_vec();
            rot[0].rotate_left(1);
            let pairs: Vec<(usize, usize)> = p.map().edge_ids().iter().map(|&d| (d, p.map().partner(d))).collect();
            let turned = Projection::new(PlanarMap::new(rot, &pairs).unwrap()).unwrap();
            assert_eq!(count_summands(&turned).unwrap(), base);
        }
    }

    #[test]
    fn random_medial_projections() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut tested = 0;
        while tested < 25 {
            let n = rng.gen_range(2..6);
            let extra = rng.gen_range(1..4);
            let m = crate::planar_graph::random_planar_map(&mut rng, n, extra);
            // a pendant vertex would give the medial map a loop
            if m.num_edges() > 8 || m.degree_sequence().contains(&1) {
                continue;
            }
            tested += 1;
            let p = Projection::new(medial(&m).unwrap()).unwrap();
            assert!(verify_theorem2(&p).unwrap().equal);
        }
    }

    #[test]
    fn rejects_non_projections() {
        let tri = crate::planar_graph::fixtures::triangle();
        assert_eq!(Projection::new(tri).unwrap_err(), Error::NotFourRegular { vertex: 0, degree: 2 });
    }
}
