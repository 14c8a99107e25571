//! Embedded planar multigraphs as combinatorial maps.
//!
//! A [`PlanarMap`] is given by darts (half-edges), a fixed-point-free
//! involution pairing darts into edges, and a rotation system listing the
//! darts around each vertex in counterclockwise order. Multi-edges are
//! allowed, loops are not. Edges are identified by the smaller of their two
//! darts.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Edge label. `Y` doubles as green and `N` as red in the grid and cube
/// modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "y", alias = "green")]
    Y,
    #[serde(rename = "n", alias = "red")]
    N,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Y => Color::N,
            Color::N => Color::Y,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Y => 'y',
            Color::N => 'n',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char(self.as_char())
    }
}

/// A total `{y, n}` coloring of the edges of a map, indexed by edge index
/// (the position of the edge in [`PlanarMap::edge_ids`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        Self { colors }
    }

    pub fn uniform(edges: usize, color: Color) -> Self {
        Self { colors: vec![color; edges] }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn get(&self, edge: usize) -> Color {
        self.colors[edge]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn swapped(&self) -> EdgeColoring {
        EdgeColoring { colors: self.colors.iter().map(|c| c.flip()).collect() }
    }

    /// Color of the edge carrying `dart`.
    pub fn dart_color(&self, map: &PlanarMap, dart: usize) -> Color {
        self.colors[map.edge_index_of_dart(dart)]
    }

    /// `{"edges":{"<edgeId>":"y"|"n"}}` keyed by canonical edge id.
    pub fn to_json(&self, map: &PlanarMap) -> serde_json::Value {
        let edges: BTreeMap<String, Color> = map
            .edge_ids()
            .iter()
            .zip(&self.colors)
            .map(|(id, c)| (id.to_string(), *c))
            .collect();
        serde_json::json!({ "edges": edges })
    }

    pub fn from_json(map: &PlanarMap, value: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Doc {
            edges: BTreeMap<String, Color>,
        }
        let doc: Doc = serde_json::from_value(value.clone())?;
        let mut colors = vec![None; map.num_edges()];
        for (key, color) in doc.edges {
            let id: usize = key
                .parse()
                .map_err(|_| Error::MalformedDocument(format!("edge id {key:?} is not an integer")))?;
            let idx = map
                .edge_ids()
                .binary_search(&id)
                .map_err(|_| Error::MalformedDocument(format!("unknown edge id {id}")))?;
            colors[idx] = Some(color);
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or_else(|| {
                    Error::MalformedDocument(format!("edge {} has no color", map.edge_ids()[i]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { colors })
    }
}

impl fmt::Display for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.colors {
            f.write_char(c.as_char())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct VertexDoc {
    id: usize,
    rotation: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct MapDocument {
    vertices: Vec<VertexDoc>,
    edges: Vec<[usize; 2]>,
}

/// An embedded loopless planar multigraph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    partner: Vec<usize>,
    vertex_of: Vec<usize>,
    rotation: Vec<Vec<usize>>,
    position: Vec<usize>,
    edge_ids: Vec<usize>,
    edge_index: Vec<usize>,
}

impl PlanarMap {
    /// Builds a map from per-vertex rotations (darts, counterclockwise) and
    /// the dart pairs forming edges.
    pub fn new(rotation: Vec<Vec<usize>>, edges: &[(usize, usize)]) -> Result<Self> {
        let darts = 2 * edges.len();
        let mut partner = vec![usize::MAX; darts];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge { dart: a });
            }
            for d in [a, b] {
                if d >= darts {
                    return Err(Error::InvalidMap(format!(
                        "dart {d} out of range, darts must be 0..{darts}"
                    )));
                }
                if partner[d] != usize::MAX {
                    return Err(Error::InvalidMap(format!("dart {d} appears in two edges")));
                }
            }
            partner[a] = b;
            partner[b] = a;
        }

        let mut vertex_of = vec![usize::MAX; darts];
        let mut position = vec![0; darts];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(Error::InvalidMap(format!("vertex {v} lists unknown dart {d}")));
                }
                if vertex_of[d] != usize::MAX {
                    return Err(Error::InvalidMap(format!("dart {d} appears in two rotations")));
                }
                vertex_of[d] = v;
                position[d] = i;
            }
        }
        if let Some(d) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(Error::InvalidMap(format!("dart {d} is in no rotation")));
        }
        for (d, &p) in partner.iter().enumerate() {
            if vertex_of[d] == vertex_of[p] {
                return Err(Error::LoopEdge { dart: d.min(p) });
            }
        }

        let mut edge_ids: Vec<usize> = (0..darts).filter(|&d| d < partner[d]).collect();
        edge_ids.sort_unstable();
        let mut edge_index = vec![0; darts];
        for (i, &e) in edge_ids.iter().enumerate() {
            edge_index[e] = i;
            edge_index[partner[e]] = i;
        }

        let map = Self { partner, vertex_of, rotation, position, edge_ids, edge_index };
        map.check_genus()?;
        Ok(map)
    }

    /// Convenience constructor from an edge list: edge `k = (u, v)` gets
    /// dart `2k` at `u` and `2k + 1` at `v`; `rotation[v]` lists edge
    /// indices around `v` counterclockwise.
    pub fn from_edges(
        num_vertices: usize,
        edges: &[(usize, usize)],
        rotation: &[Vec<usize>],
    ) -> Result<Self> {
        if rotation.len() != num_vertices {
            return Err(Error::InvalidMap("one rotation per vertex required".into()));
        }
        let mut darts_used = vec![[false; 2]; edges.len()];
        let mut rot_darts = Vec::with_capacity(num_vertices);
        for (v, rot) in rotation.iter().enumerate() {
            let mut darts = Vec::with_capacity(rot.len());
            for &k in rot {
                let (a, b) = *edges
                    .get(k)
                    .ok_or_else(|| Error::InvalidMap(format!("unknown edge {k}")))?;
                if a == b {
                    return Err(Error::LoopEdge { dart: 2 * k });
                }
                let side = if a == v && !darts_used[k][0] {
                    0
                } else if b == v && !darts_used[k][1] {
                    1
                } else {
                    return Err(Error::InvalidMap(format!("edge {k} listed wrongly at vertex {v}")));
                };
                darts_used[k][side] = true;
                darts.push(2 * k + side);
            }
            rot_darts.push(darts);
        }
        let pairs: Vec<(usize, usize)> = (0..edges.len()).map(|k| (2 * k, 2 * k + 1)).collect();
        Self::new(rot_darts, &pairs)
    }

    pub fn num_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn num_darts(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, dart: usize) -> usize {
        self.partner[dart]
    }

    pub fn vertex_of(&self, dart: usize) -> usize {
        self.vertex_of[dart]
    }

    pub fn rotation(&self, vertex: usize) -> &[usize] {
        &self.rotation[vertex]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.rotation[vertex].len()
    }

    /// Canonical edge ids (the smaller dart of each pair), ascending.
    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    pub fn edge_index_of_dart(&self, dart: usize) -> usize {
        self.edge_index[dart]
    }

    /// Endpoints of the edge with the given index, in dart order.
    pub fn edge_endpoints(&self, edge: usize) -> (usize, usize) {
        let d = self.edge_ids[edge];
        (self.vertex_of[d], self.vertex_of[self.partner[d]])
    }

    /// Counterclockwise successor of `dart` around its vertex.
    pub fn next_ccw(&self, dart: usize) -> usize {
        let rot = &self.rotation[self.vertex_of[dart]];
        rot[(self.position[dart] + 1) % rot.len()]
    }

    pub fn prev_ccw(&self, dart: usize) -> usize {
        let rot = &self.rotation[self.vertex_of[dart]];
        rot[(self.position[dart] + rot.len() - 1) % rot.len()]
    }

    /// Index of `dart` within its vertex rotation.
    pub fn position(&self, dart: usize) -> usize {
        self.position[dart]
    }

    /// Plain edge list `(u, v)` in edge-index order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        (0..self.num_edges()).map(|e| self.edge_endpoints(e)).collect()
    }

    /// Connected components as a vertex labelling and a count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &d in &self.rotation[v] {
                    let w = self.vertex_of[self.partner[d]];
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() > 0 && self.components().1 == 1
    }

    fn face_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.num_darts()];
        let mut faces = Vec::new();
        for start in 0..self.num_darts() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = self.next_ccw(self.partner[d]);
            }
            faces.push(face);
        }
        faces
    }

    /// Face boundaries as dart cycles. Each dart `d` in a cycle is followed
    /// by `next_ccw(partner(d))`; the corner between `prev_ccw(d)` and `d`
    /// lies inside the face containing `d`.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(self.face_orbits())
    }

    /// Every component with at least one edge must satisfy
    /// `V - E + F = 2`.
    fn check_genus(&self) -> Result<()> {
        let (comp, count) = self.components();
        let mut v = vec![0i64; count];
        let mut e = vec![0i64; count];
        let mut f = vec![0i64; count];
        for &c in &comp {
            v[c] += 1;
        }
        for &d in &self.edge_ids {
            e[comp[self.vertex_of[d]]] += 1;
        }
        for face in self.face_orbits() {
            f[comp[self.vertex_of[face[0]]]] += 1;
        }
        for c in 0..count {
            if e[c] > 0 && v[c] - e[c] + f[c] != 2 {
                return Err(Error::InvalidMap(format!(
                    "rotation system is not planar (V - E + F = {})",
                    v[c] - e[c] + f[c]
                )));
            }
        }
        Ok(())
    }

    /// Sorted vertex degrees.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.rotation.iter().map(Vec::len).collect();
        degs.sort_unstable();
        degs
    }

    /// The mirror image: every rotation reversed.
    pub fn mirror(&self) -> PlanarMap {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let pairs: Vec<(usize, usize)> =
            self.edge_ids.iter().map(|&d| (d, self.partner[d])).collect();
        PlanarMap::new(rotation, &pairs).expect("mirror of a valid map is valid")
    }

    /// Adds an edge between the vertices of `a` and `b`, inserting the new
    /// darts immediately before `a` and `b` in their rotations. When `a` and
    /// `b` lie on the same face the result stays planar.
    pub fn with_edge_before(&self, a: usize, b: usize) -> Result<PlanarMap> {
        let new_a = self.num_darts();
        let new_b = new_a + 1;
        let mut rotation = self.rotation.clone();
        for (anchor, fresh) in [(a, new_a), (b, new_b)] {
            let v = self.vertex_of[anchor];
            let pos = rotation[v].iter().position(|&d| d == anchor).expect("dart in rotation");
            rotation[v].insert(pos, fresh);
        }
        let mut pairs: Vec<(usize, usize)> =
            self.edge_ids.iter().map(|&d| (d, self.partner[d])).collect();
        pairs.push((new_a, new_b));
        PlanarMap::new(rotation, &pairs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_document()).expect("document serializes")
    }

    fn to_document(&self) -> MapDocument {
        MapDocument {
            vertices: self
                .rotation
                .iter()
                .enumerate()
                .map(|(id, r)| VertexDoc { id, rotation: r.clone() })
                .collect(),
            edges: self.edge_ids.iter().map(|&d| [d, self.partner[d]]).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serializes")
    }

    /// Graphviz rendering with one line per edge, so multiplicities survive.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.num_vertices() {
            if self.degree(v) == 0 {
                let _ = writeln!(out, "  {v};");
            }
        }
        for (u, v) in self.edge_list() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push('}');
        out.push('\n');
        out
    }
}

/// Parses the JSON map document
/// `{"vertices":[{"id":..,"rotation":[..]}],"edges":[[a,b],..]}`.
/// Vertex ids must be exactly `0..V` in some order. Unknown keys are ignored.
pub fn parse_map(document: &str) -> Result<PlanarMap> {
    let value: serde_json::Value = serde_json::from_str(document)?;
    parse_map_value(&value)
}

pub fn parse_map_value(value: &serde_json::Value) -> Result<PlanarMap> {
    let doc: MapDocument = serde_json::from_value(value.clone())?;
    let n = doc.vertices.len();
    let mut rotation = vec![None; n];
    for vd in doc.vertices {
        if vd.id >= n {
            return Err(Error::MalformedDocument(format!(
                "vertex id {} out of range, ids must be 0..{n}",
                vd.id
            )));
        }
        if rotation[vd.id].is_some() {
            return Err(Error::MalformedDocument(format!("duplicate vertex id {}", vd.id)));
        }
        rotation[vd.id] = Some(vd.rotation);
    }
    let rotation: Vec<Vec<usize>> = rotation.into_iter().map(Option::unwrap).collect();
    let pairs: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    PlanarMap::new(rotation, &pairs)
}

/// Small named maps used throughout tests, examples and the CLI.
pub mod fixtures {
    use super::*;

    /// The 3-cycle.
    pub fn triangle() -> PlanarMap {
        cycle(3)
    }

    /// The `k`-cycle for `k >= 2`; `k = 2` is a double edge.
    pub fn cycle(k: usize) -> PlanarMap {
        assert!(k >= 2);
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        // vertex i: edge to i+1 then edge to i-1
        let rotation: Vec<Vec<usize>> = (0..k).map(|i| vec![i, (i + k - 1) % k]).collect();
        PlanarMap::from_edges(k, &edges, &rotation).expect("cycle is planar")
    }

    /// The path on `k >= 1` vertices.
    pub fn path(k: usize) -> PlanarMap {
        assert!(k >= 1);
        let edges: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
        let rotation: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                let mut r = Vec::new();
                if i + 1 < k {
                    r.push(i);
                }
                if i > 0 {
                    r.push(i - 1);
                }
                r
            })
            .collect();
        PlanarMap::from_edges(k, &edges, &rotation).expect("path is planar")
    }

    pub fn single_vertex() -> PlanarMap {
        PlanarMap::new(vec![vec![]], &[]).expect("empty map")
    }

    pub fn single_edge() -> PlanarMap {
        path(2)
    }

    /// Hub 0 joined to a rim cycle `1..=rim`.
    pub fn wheel(rim: usize) -> PlanarMap {
        assert!(rim >= 3);
        let mut edges = Vec::new();
        for i in 0..rim {
            edges.push((0, 1 + i)); // spoke i
        }
        for i in 0..rim {
            edges.push((1 + i, 1 + (i + 1) % rim)); // rim edge i
        }
        let mut rotation = vec![(0..rim).collect::<Vec<_>>()];
        for i in 0..rim {
            // counterclockwise from outward: next rim edge, spoke, previous rim edge
            rotation.push(vec![rim + i, i, rim + (i + rim - 1) % rim]);
        }
        PlanarMap::from_edges(rim + 1, &edges, &rotation).expect("wheel is planar")
    }

    /// The wheel with a degree-4 hub and four rim vertices.
    pub fn w5() -> PlanarMap {
        wheel(4)
    }
}

/// Random loopless connected planar maps: a random plane tree followed by
/// `extra_edges` chords, each inserted inside a single face.
pub fn random_planar_map<R: Rng>(rng: &mut R, num_vertices: usize, extra_edges: usize) -> PlanarMap {
    assert!(num_vertices >= 1);
    let mut edges = Vec::new();
    for v in 1..num_vertices {
        edges.push((rng.gen_range(0..v), v));
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); num_vertices];
    for (k, &(u, v)) in edges.iter().enumerate() {
        rotation[u].push(k);
        rotation[v].push(k);
    }
    for r in rotation.iter_mut() {
        r.shuffle(rng);
    }
    let mut map = PlanarMap::from_edges(num_vertices, &edges, &rotation).expect("trees are planar");
    if num_vertices < 2 {
        return map;
    }
    let mut added = 0;
    let mut attempts = 0;
    while added < extra_edges && attempts < 100 * (extra_edges + 1) {
        attempts += 1;
        let faces = map.face_orbits();
        let face = &faces[rng.gen_range(0..faces.len())];
        let a = face[rng.gen_range(0..face.len())];
        let b = face[rng.gen_range(0..face.len())];
        if map.vertex_of(a) == map.vertex_of(b) {
            continue;
        }
        map = map.with_edge_before(a, b).expect("chord inside a face keeps planarity");
        added += 1;
    }
    map
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TRIANGLE_DOC: &str = r#"{
        "vertices": [
            {"id": 0, "rotation": [0, 5]},
            {"id": 1, "rotation": [2, 1]},
            {"id": 2, "rotation": [4, 3]}
        ],
        "edges": [[0, 1], [2, 3], [4, 5]]
    }"#;

    #[test]
    fn parses_triangle() {
        let m = parse_map(TRIANGLE_DOC).unwrap();
        assert_eq!(m.num_darts(), 6);
        assert_eq!(m.num_edges(), 3);
        assert_eq!(m.degree_sequence(), vec![2, 2, 2]);
        assert_eq!(m.faces().unwrap().len(), 2);
    }

    #[test]
    fn self_paired_dart_is_a_loop() {
        let doc = r#"{"vertices":[{"id":0,"rotation":[0,1]}],"edges":[[0,0]]}"#;
        assert_eq!(parse_map(doc), Err(Error::LoopEdge { dart: 0 }));
    }

    #[test]
    fn loop_at_one_vertex_is_rejected() {
        let doc = r#"{"vertices":[{"id":0,"rotation":[0,1]}],"edges":[[0,1]]}"#;
        assert_eq!(parse_map(doc), Err(Error::LoopEdge { dart: 0 }));
    }

    #[test]
    fn bad_documents() {
        assert!(matches!(parse_map("{"), Err(Error::MalformedDocument(_))));
        assert!(matches!(parse_map(r#"{"vertices":[]}"#), Err(Error::MalformedDocument(_))));
        let twice = r#"{"vertices":[{"id":0,"rotation":[0]},{"id":1,"rotation":[0]}],"edges":[[0,1]]}"#;
        assert!(matches!(parse_map(twice), Err(Error::InvalidMap(_))));
        let unlisted = r#"{"vertices":[{"id":0,"rotation":[0]},{"id":1,"rotation":[]}],"edges":[[0,1]]}"#;
        assert!(matches!(parse_map(unlisted), Err(Error::InvalidMap(_))));
    }

    #[test]
    fn toroidal_rotation_fails_genus_check() {
        // two vertices, three parallel edges, same cyclic order at both ends
        // gives one face: V - E + F = 0.
        let edges = [(0, 1), (0, 1), (0, 1)];
        let rot = vec![vec![0, 1, 2], vec![0, 1, 2]];
        assert!(matches!(PlanarMap::from_edges(2, &edges, &rot), Err(Error::InvalidMap(_))));
        let rot = vec![vec![0, 1, 2], vec![2, 1, 0]];
        assert!(PlanarMap::from_edges(2, &edges, &rot).is_ok());
    }

    #[test]
    fn face_counts() {
        assert_eq!(single_edge().faces().unwrap().len(), 1);
        assert_eq!(triangle().faces().unwrap().len(), 2);
        assert_eq!(w5().faces().unwrap().len(), 5);
        assert_eq!(cycle(2).faces().unwrap().len(), 2);
        let two = PlanarMap::new(vec![vec![], vec![]], &[]).unwrap();
        assert_eq!(two.faces(), Err(Error::NotConnected));
    }

    #[test]
    fn w5_shape() {
        assert_eq!(w5().degree_sequence(), vec![3, 3, 3, 3, 4]);
    }

    #[test]
    fn json_round_trip_is_a_fixed_point() {
        for m in [triangle(), w5(), cycle(2), path(4), single_vertex()] {
            let text = m.to_json_string();
            let back = parse_map(&text).unwrap();
            assert_eq!(back, m);
            assert_eq!(back.to_json_string(), text);
        }
    }

    #[test]
    fn dot_keeps_multiplicity() {
        let dot = cycle(2).to_dot();
        assert_eq!(dot.matches("0 -- 1").count() + dot.matches("1 -- 0").count(), 2);
        assert!(single_vertex().to_dot().contains("  0;"));
    }

    #[test]
    fn random_maps_are_planar_and_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(2..9);
            let extra = rng.gen_range(0..8);
            let m = random_planar_map(&mut rng, n, extra);
            assert!(m.is_connected());
            let f = m.faces().unwrap().len() as i64;
            assert_eq!(m.num_vertices() as i64 - m.num_edges() as i64 + f, 2);
            let mirror = m.mirror();
            assert_eq!(mirror.degree_sequence(), m.degree_sequence());
            assert_eq!(mirror.faces().unwrap().len(), m.faces().unwrap().len());
        }
    }
}
