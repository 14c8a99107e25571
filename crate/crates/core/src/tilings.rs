//! Lozenge regions on the triangular lattice and the graphs `t_a`.
//!
//! Lattice points are integer pairs `(x, y)` standing for `x·e1 + y·e2` with
//! `e1 = (1, 0)` and `e2 = (1/2, √3/2)`. The up cell `(x, y)` has corners
//! `(x,y), (x+1,y), (x,y+1)`; the down cell `(x, y)` has corners
//! `(x+1,y), (x,y+1), (x+1,y+1)`. All geometry is integer arithmetic.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lucas::lucas_statistic;
use crate::matchings::{count_perfect_matchings, Graph};
use crate::planar_graph::PlanarMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Up,
    Down,
}

/// A unit triangle, ordered row first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
    pub orientation: Orientation,
}

impl Cell {
    pub fn up(x: i32, y: i32) -> Cell {
        Cell { row: y, col: x, orientation: Orientation::Up }
    }

    pub fn down(x: i32, y: i32) -> Cell {
        Cell { row: y, col: x, orientation: Orientation::Down }
    }

    /// Lattice corners in counterclockwise order.
    pub fn corners(&self) -> [(i32, i32); 3] {
        let (x, y) = (self.col, self.row);
        match self.orientation {
            Orientation::Up => [(x, y), (x + 1, y), (x, y + 1)],
            Orientation::Down => [(x + 1, y), (x + 1, y + 1), (x, y + 1)],
        }
    }

    /// Three times the centroid, in lattice coordinates.
    fn centroid3(&self) -> (i32, i32) {
        let k = match self.orientation {
            Orientation::Up => 1,
            Orientation::Down => 2,
        };
        (3 * self.col + k, 3 * self.row + k)
    }

    /// The (up to three) cells sharing a side with this one.
    pub fn neighbors(&self) -> [Cell; 3] {
        let (x, y) = (self.col, self.row);
        match self.orientation {
            Orientation::Up => [Cell::down(x, y), Cell::down(x - 1, y), Cell::down(x, y - 1)],
            Orientation::Down => [Cell::up(x, y), Cell::up(x + 1, y), Cell::up(x, y + 1)],
        }
    }
}

/// A finite set of cells and its weak dual: one vertex per cell, one edge
/// per shared side. Lozenge tilings are perfect matchings of the dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularRegion {
    cells: Vec<Cell>,
    dual: Graph,
}

impl TriangularRegion {
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> TriangularRegion {
        let cells: Vec<Cell> = cells.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut edges = Vec::new();
        for (i, c) in cells.iter().enumerate() {
            if c.orientation == Orientation::Up {
                for nb in c.neighbors() {
                    if let Some(&j) = index.get(&nb) {
                        edges.push((i, j));
                    }
                }
            }
        }
        let dual = Graph::new(cells.len(), edges).expect("indices come from the cell list");
        TriangularRegion { cells, dual }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn dual(&self) -> &Graph {
        &self.dual
    }

    pub fn count(&self, o: Orientation) -> usize {
        self.cells.iter().filter(|c| c.orientation == o).count()
    }

    /// Number of lozenge tilings.
    pub fn tilings(&self) -> BigUint {
        count_perfect_matchings(&self.dual).0
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.binary_search(c).is_ok()
    }

    /// `{"cells":[[row,col,"up"|"down"],...]}`
    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<serde_json::Value> = self
            .cells
            .iter()
            .map(|c| {
                let o = match c.orientation {
                    Orientation::Up => "up",
                    Orientation::Down => "down",
                };
                serde_json::json!([c.row, c.col, o])
            })
            .collect();
        serde_json::json!({ "cells": cells })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<TriangularRegion> {
        let bad = || Error::MalformedDocument("cells must be [row, col, \"up\"|\"down\"] triples".into());
        let list = value.get("cells").and_then(|c| c.as_array()).ok_or_else(bad)?;
        let mut cells = Vec::with_capacity(list.len());
        for entry in list {
            let t = entry.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
            let row = t[0].as_i64().ok_or_else(bad)? as i32;
            let col = t[1].as_i64().ok_or_else(bad)? as i32;
            let orientation = match t[2].as_str() {
                Some("up") => Orientation::Up,
                Some("down") => Orientation::Down,
                _ => return Err(bad()),
            };
            cells.push(Cell { row, col, orientation });
        }
        Ok(TriangularRegion::from_cells(cells))
    }

    /// Flat SVG drawing of the cells, up cells and down cells shaded apart.
    pub fn to_svg(&self, scale: f64) -> String {
        let h = 3f64.sqrt() / 2.0;
        let to_xy = |(x, y): (i32, i32)| (x as f64 + y as f64 / 2.0, -(y as f64) * h);
        let pts: Vec<(f64, f64)> = self.cells.iter().flat_map(|c| c.corners()).map(to_xy).collect();
        let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
        if !pts.is_empty() {
            x0 = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
            x1 = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
            y0 = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
            y1 = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        }
        let pad = 0.5;
        let (w, ht) = ((x1 - x0 + 2.0 * pad) * scale, (y1 - y0 + 2.0 * pad) * scale);
        let mut svg = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.1}\" height=\"{ht:.1}\" viewBox=\"0 0 {w:.1} {ht:.1}\">\n"
        );
        for c in &self.cells {
            let fill = match c.orientation {
                Orientation::Up => "#f2e6c9",
                Orientation::Down => "#c9dcf2",
            };
            let points: Vec<String> = c
                .corners()
                .into_iter()
                .map(to_xy)
                .map(|(x, y)| format!("{:.2},{:.2}", (x - x0 + pad) * scale, (y - y0 + pad) * scale))
                .collect();
            let _ = writeln!(
                svg,
                "  <polygon points=\"{}\" fill=\"{fill}\" stroke=\"#333\" stroke-width=\"1\"/>",
                points.join(" ")
            );
        }
        svg.push_str("</svg>\n");
        svg
    }
}

/// The semiregular hexagon with sides `a, b, c, a, b, c`, corners
/// `(0,0), (a,0), (a,b), (a-c,b+c), (-c,b+c), (-c,c)`.
pub fn hexagon_region(a: u32, b: u32, c: u32) -> Result<TriangularRegion> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::TooSmall);
    }
    let (a, b, c) = (a as i32, b as i32, c as i32);
    let inside = |cell: &Cell| {
        let (s, t) = cell.centroid3();
        (0..=3 * (b + c)).contains(&t) && (-3 * c..=3 * a).contains(&s) && (0..=3 * (a + b)).contains(&(s + t))
    };
    let mut cells = Vec::new();
    for y in 0..b + c {
        for x in -c..a {
            for cell in [Cell::up(x, y), Cell::down(x, y)] {
                if inside(&cell) {
                    cells.push(cell);
                }
            }
        }
    }
    Ok(TriangularRegion::from_cells(cells))
}

/// `Π_{i≤a, j≤b, k≤c} (i+j+k-1)/(i+j+k-2)`, evaluated exactly.
pub fn macmahon(a: u32, b: u32, c: u32) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
        }
    }
    num / den
}

/// The six cells sharing the lattice point `(p, q)`.
pub fn hexagon_around(p: i32, q: i32) -> [Cell; 6] {
    [
        Cell::up(p, q),
        Cell::down(p - 1, q),
        Cell::up(p - 1, q),
        Cell::down(p - 1, q - 1),
        Cell::up(p, q - 1),
        Cell::down(p, q - 1),
    ]
}

/// Steps between neighboring hexagon centers, counterclockwise from 30°.
pub const CENTER_STEPS: [(i32, i32); 6] = [(1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1)];

/// Centers of the `a(a+1)/2` hexagons kept in `T_a`, listed row by row:
/// `(0,1) + i·(1,1) + j·(-1,2)` with `i + j < a`.
pub fn special_centers(a: u32) -> Vec<(i32, i32)> {
    let a = a as i32;
    let mut out = Vec::new();
    for j in 0..a {
        for i in 0..a - j {
            out.push((i - j, 1 + i + 2 * j));
        }
    }
    out
}

pub const TA_MAX: u32 = 6;

/// `T_a`: the hexagon `H(a,a,a)` with its three alternating corner
/// staircases removed. What remains is the union of the `a(a+1)/2`
/// disjoint unit hexagons around [`special_centers`].
pub fn ta_region(a: u32) -> Result<TriangularRegion> {
    if a == 0 {
        return Err(Error::TooSmall);
    }
    if a > TA_MAX {
        return Err(Error::TooLarge { what: "a", value: a as u64, max: TA_MAX as u64 });
    }
    Ok(TriangularRegion::from_cells(
        special_centers(a).into_iter().flat_map(|(p, q)| hexagon_around(p, q)),
    ))
}

/// The graph `t_a` on the hexagon centers of `T_a` together with the centers.
#[derive(Debug, Clone)]
pub struct TGraph {
    pub a: u32,
    pub map: PlanarMap,
    pub centers: Vec<(i32, i32)>,
}

/// The side-`a` triangular grid, embedded as drawn: vertices are the
/// hexagon centers and each vertex lists its neighbors by angle.
pub fn t_graph(a: u32) -> Result<TGraph> {
    if a == 0 {
        return Err(Error::TooSmall);
    }
    let centers = special_centers(a);
    let index: HashMap<(i32, i32), usize> = centers.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut edges = Vec::new();
    let mut edge_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, &(x, y)) in centers.iter().enumerate() {
        for &(dx, dy) in &CENTER_STEPS[..3] {
            if let Some(&v) = index.get(&(x + dx, y + dy)) {
                edge_of.insert((u, v), edges.len());
                edge_of.insert((v, u), edges.len());
                edges.push((u, v));
            }
        }
    }
    let rotation: Vec<Vec<usize>> = centers
        .iter()
        .enumerate()
        .map(|(u, &(x, y))| {
            CENTER_STEPS
                .iter()
                .filter_map(|&(dx, dy)| index.get(&(x + dx, y + dy)).map(|&v| edge_of[&(u, v)]))
                .collect()
        })
        .collect();
    let map = PlanarMap::from_edges(centers.len(), &edges, &rotation)?;
    Ok(TGraph { a, map, centers })
}

/// `Σ 2^Sp` over the Lucas-colorings of `t_a`.
pub fn m_t(a: u32) -> Result<BigUint> {
    Ok(lucas_statistic(&t_graph(a)?.map).m)
}

/// Tiling counts of `T_a` for `a = 1..=7`.
pub const TA_TABLE: [u64; 7] = [2, 9, 104, 3100, 240426, 48701198, 25827984000];

pub fn table_value(a: u32) -> Option<BigUint> {
    (1..=7).contains(&a).then(|| BigUint::from(TA_TABLE[a as usize - 1]))
}

/// Largest `a` whose region dual is counted directly.
pub const REGION_MAX: u32 = 5;

/// Each available side of the identity for one `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem4Report {
    pub a: u32,
    pub m_region: Option<BigUint>,
    pub m_t: Option<BigUint>,
    pub table_value: Option<BigUint>,
    pub all_equal: bool,
}

impl Theorem4Report {
    pub fn to_json(&self) -> serde_json::Value {
        let s = |v: &Option<BigUint>| v.as_ref().map(|x| x.to_string());
        serde_json::json!({
            "a": self.a,
            "m_region": s(&self.m_region),
            "m_t": s(&self.m_t),
            "table_value": s(&self.table_value),
            "all_equal": self.all_equal,
        })
    }
}

/// Compares the tiling count of `T_a`, the Lucas statistic of `t_a` and
/// the table. The region side is skipped above [`REGION_MAX`], the Lucas
/// side above 7 or when `lucas_side` is false.
pub fn verify_theorem4(a: u32, lucas_side: bool) -> Result<Theorem4Report> {
    if a == 0 {
        return Err(Error::TooSmall);
    }
    let m_region = if a <= REGION_MAX { Some(ta_region(a)?.tilings()) } else { None };
    let m_t = if lucas_side && a <= 7 { Some(m_t(a)?) } else { None };
    let table_value = table_value(a);
    let present: Vec<&BigUint> = [&m_region, &m_t, &table_value].into_iter().flatten().collect();
    let all_equal = present.len() >= 2 && present.windows(2).all(|w| w[0] == w[1]);
    Ok(Theorem4Report { a, m_region, m_t, table_value, all_equal })
}

/// Contracts each hexagon of `T_a`'s dual to a point. Returns the
/// multiplicity of every contracted edge keyed by hexagon indices, or
/// `None` when a dual edge leaves the union of hexagons.
pub fn contracted_dual(a: u32) -> Result<Option<BTreeMap<(usize, usize), usize>>> {
    let region = ta_region(a)?;
    let mut owner: HashMap<Cell, usize> = HashMap::new();
    for (h, &(p, q)) in special_centers(a).iter().enumerate() {
        for c in hexagon_around(p, q) {
            owner.insert(c, h);
        }
    }
    let mut bundles = BTreeMap::new();
    for &(u, v) in region.dual().edges() {
        let (Some(&hu), Some(&hv)) = (owner.get(&region.cells()[u]), owner.get(&region.cells()[v])) else {
            return Ok(None);
        };
        if hu != hv {
            *bundles.entry((hu.min(hv), hu.max(hv))).or_insert(0) += 1;
        }
    }
    Ok(Some(bundles))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lucas::enumerate_lucas;
    use crate::matchings::enumerate_perfect_matchings;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn macmahon_values() {
        assert_eq!(macmahon(1, 1, 1), big(2));
        assert_eq!(macmahon(2, 2, 2), big(20));
        assert_eq!(macmahon(1, 1, 5), big(6));
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    let m = macmahon(a, b, c);
                    assert_eq!(m, macmahon(b, c, a));
                    assert_eq!(m, macmahon(b, a, c));
                }
            }
        }
    }

    #[test]
    fn hexagon_shapes() {
        let h = hexagon_region(1, 1, 1).unwrap();
        assert_eq!(h.cells().len(), 6);
        assert_eq!(h.dual().edges().len(), 6);
        assert_eq!(enumerate_perfect_matchings(h.dual(), None).unwrap().len(), 2);
        for (a, b, c) in [(1, 2, 3), (2, 2, 2), (3, 1, 2), (2, 3, 2)] {
            let r = hexagon_region(a, b, c).unwrap();
            assert_eq!(r.cells().len() as u32, 2 * (a * b + b * c + c * a));
            assert_eq!(r.count(Orientation::Up), r.count(Orientation::Down));
            assert_eq!(r.tilings(), macmahon(a, b, c));
        }
    }

    #[test]
    fn dual_is_bipartite() {
        let r = hexagon_region(3, 2, 4).unwrap();
        for &(u, v) in r.dual().edges() {
            assert_ne!(r.cells()[u].orientation, r.cells()[v].orientation);
        }
    }

    #[test]
    fn ta_fits_inside_the_hexagon() {
        for a in 1..=5 {
            let t = ta_region(a).unwrap();
            let h = hexagon_region(a, a, a).unwrap();
            assert_eq!(t.cells().len() as u32, 3 * a * (a + 1));
            assert!(t.cells().iter().all(|c| h.contains(c)));
        }
        assert!(matches!(ta_region(7), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn small_ta_counts() {
        assert_eq!(ta_region(1).unwrap().tilings(), big(2));
        assert_eq!(ta_region(2).unwrap().tilings(), big(9));
        assert_eq!(ta_region(3).unwrap().tilings(), big(104));
    }

    #[test]
    fn t_graph_shapes() {
        let t1 = t_graph(1).unwrap();
        assert_eq!((t1.map.num_vertices(), t1.map.num_edges()), (1, 0));
        let t2 = t_graph(2).unwrap();
        assert_eq!((t2.map.num_vertices(), t2.map.num_edges()), (3, 3));
        let t3 = t_graph(3).unwrap();
        assert_eq!((t3.map.num_vertices(), t3.map.num_edges()), (6, 9));
        assert_eq!(enumerate_lucas(&t3.map).count(), 10);
        for a in 1..=6 {
            let t = t_graph(a).unwrap();
            assert_eq!(t.map.num_vertices() as u32, a * (a + 1) / 2);
            assert!(t.map.degree_sequence().iter().all(|d| d % 2 == 0 && *d <= 6));
            if a > 1 {
                assert_eq!(t.map.faces().unwrap().len() as u32, 2 + t.map.num_edges() as u32 - t.map.num_vertices() as u32);
            }
        }
    }

    #[test]
    fn contraction_recovers_t() {
        for a in 1..=5 {
            let bundles = contracted_dual(a).unwrap().expect("all dual edges stay inside hexagons");
            let t = t_graph(a).unwrap();
            let mut expected = BTreeMap::new();
            for (u, v) in t.map.edge_list() {
                expected.insert((u.min(v), u.max(v)), 1);
            }
            assert_eq!(bundles, expected);
        }
    }

    #[test]
    fn region_json_round_trip() {
        let r = ta_region(2).unwrap();
        let back = TriangularRegion::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let svg = r.to_svg(20.0);
        assert_eq!(svg.matches("<polygon").count(), 18);
    }
}
