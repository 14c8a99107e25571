//! Alternating sign matrices, the grid graph `G_n` and its restricted
//! Lucas-colorings, and the Aztec diamond.
//!
//! Grid conventions: horizontal lines `H_1..H_n` run top to bottom, vertical
//! lines `V_1..V_n` left to right, and the internal vertex `H_i ∩ V_j`
//! lists its edges counterclockwise as right, up, left, down. Boundary
//! labels: the left end of `H_i` is `i`, the top of `V_j` is `j'`, the
//! right end of `H_i` is `(n+1-i)_` and the bottom of `V_j` is `(n+1-j)''`.
//! With this placement the corner pairs `(1,1')`, `(n',n_)`, `(1_,1'')` and
//! `(n'',n)` are the four corners of the square.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lucas::is_local_valid;
use crate::matchings::Graph;
use crate::planar_graph::{Color, EdgeColoring, PlanarMap};

/// Green is `y`, red is `n`.
pub const GREEN: Color = Color::Y;
pub const RED: Color = Color::N;

/// An `n × n` matrix over `{-1, 0, 1}`; [`AsmMatrix::new`] checks the
/// alternating sign conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AsmMatrix {
    n: usize,
    rows: Vec<Vec<i8>>,
}

/// Rows and columns sum to 1 and their nonzero entries alternate starting
/// with `+1`. Equivalently every prefix sum of every line lies in `{0, 1}`
/// and the full sums are 1.
pub fn validate_asm(rows: &[Vec<i8>]) -> bool {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n || r.iter().any(|x| !(-1..=1).contains(x))) {
        return false;
    }
    let line_ok = |line: &mut dyn Iterator<Item = i8>| {
        let mut s = 0i32;
        for x in line {
            s += x as i32;
            if !(0..=1).contains(&s) {
                return false;
            }
        }
        s == 1
    };
    (0..n).all(|i| line_ok(&mut rows[i].iter().copied())) && (0..n).all(|j| line_ok(&mut rows.iter().map(|r| r[j])))
}

impl AsmMatrix {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidAsm("empty matrix".into()));
        }
        if !validate_asm(&rows) {
            return Err(Error::InvalidAsm(format!("{rows:?}")));
        }
        Ok(Self { n: rows.len(), rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| (0..n).map(|j| (i == j) as i8).collect()).collect();
        Self { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.rows[i][j]
    }

    /// `{"n":3,"rows":[[0,1,0],[1,-1,1],[0,1,0]]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "rows": self.rows })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let m: AsmMatrix = serde_json::from_str(text)?;
        if m.rows.len() != m.n {
            return Err(Error::InvalidAsm(format!("n = {} but {} rows", m.n, m.rows.len())));
        }
        AsmMatrix::new(m.rows)
    }
}

pub fn n_plus(a: &AsmMatrix) -> usize {
    a.rows.iter().flatten().filter(|&&x| x == 1).count()
}

pub fn n_minus(a: &AsmMatrix) -> usize {
    a.rows.iter().flatten().filter(|&&x| x == -1).count()
}

pub const ASM_MAX: usize = 7;

/// All `n × n` alternating sign matrices in lexicographic order of their
/// rows (with `-1 < 0 < 1`), built row by row while tracking the column
/// prefix sums.
pub fn enumerate_asms(n: usize) -> Result<Vec<AsmMatrix>> {
    if n == 0 {
        return Err(Error::TooSmall);
    }
    if n > ASM_MAX {
        return Err(Error::TooLarge { what: "n", value: n as u64, max: ASM_MAX as u64 });
    }
    let mut out = Vec::new();
    let mut rows = Vec::with_capacity(n);
    let mut cols = vec![0i8; n];
    asm_rows(n, &mut rows, &mut cols, &mut out);
    Ok(out)
}

fn asm_rows(n: usize, rows: &mut Vec<Vec<i8>>, cols: &mut [i8], out: &mut Vec<AsmMatrix>) {
    if rows.len() == n {
        if cols.iter().all(|&c| c == 1) {
            out.push(AsmMatrix { n, rows: rows.clone() });
        }
        return;
    }
    let mut row = vec![0i8; n];
    fill_row(n, 0, 0, &mut row, cols, rows, out);
}

fn fill_row(
    n: usize,
    j: usize,
    sum: i8,
    row: &mut Vec<i8>,
    cols: &mut [i8],
    rows: &mut Vec<Vec<i8>>,
    out: &mut Vec<AsmMatrix>,
) {
    if j == n {
        if sum == 1 {
            rows.push(row.clone());
            asm_rows(n, rows, cols, out);
            rows.pop();
        }
        return;
    }
    for x in [-1i8, 0, 1] {
        let (s, c) = (sum + x, cols[j] + x);
        if (0..=1).contains(&s) && (0..=1).contains(&c) {
            row[j] = x;
            cols[j] = c;
            fill_row(n, j + 1, s, row, cols, rows, out);
            cols[j] -= x;
        }
    }
    row[j] = 0;
}

/// The grid graph `G_n` with its boundary labels.
#[derive(Debug, Clone)]
pub struct GridGraph {
    n: usize,
    map: PlanarMap,
    labels: Vec<(usize, String)>,
}

impl GridGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    /// `(pendant vertex, label)` pairs, side by side.
    pub fn labels(&self) -> &[(usize, String)] {
        &self.labels
    }

    /// Internal vertex `H_i ∩ V_j` (0-based `i`, `j`).
    pub fn internal(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    /// Edge `k` (0..=n) along `H_i`, counted from the left end.
    pub fn h_edge(&self, i: usize, k: usize) -> usize {
        i * (self.n + 1) + k
    }

    /// Edge `k` (0..=n) along `V_j`, counted from the top end.
    pub fn v_edge(&self, k: usize, j: usize) -> usize {
        self.n * (self.n + 1) + j * (self.n + 1) + k
    }

    /// Pendant edges of the four sides, each listed by label `1..n`.
    pub fn side_edges(&self) -> [Vec<usize>; 4] {
        let n = self.n;
        [
            (0..n).map(|i| self.h_edge(i, 0)).collect(),
            (0..n).map(|j| self.v_edge(0, j)).collect(),
            (1..=n).map(|k| self.h_edge(n - k, n)).collect(),
            (1..=n).map(|k| self.v_edge(n, n - k)).collect(),
        ]
    }

    /// Edges at `H_i ∩ V_j` in rotation order: right, up, left, down.
    pub fn vertex_edges(&self, i: usize, j: usize) -> [usize; 4] {
        [self.h_edge(i, j + 1), self.v_edge(i, j), self.h_edge(i, j), self.v_edge(i + 1, j)]
    }
}

pub fn grid_graph(n: usize) -> Result<GridGraph> {
    if n == 0 {
        return Err(Error::TooSmall);
    }
    let internal = n * n;
    // pendant vertices: left, top, right, bottom, each indexed by line
    let left = |i: usize| internal + i;
    let top = |j: usize| internal + n + j;
    let right = |i: usize| internal + 2 * n + i;
    let bottom = |j: usize| internal + 3 * n + j;
    let mut edges = Vec::with_capacity(2 * n * (n + 1));
    for i in 0..n {
        for k in 0..=n {
            let a = if k == 0 { left(i) } else { i * n + k - 1 };
            let b = if k == n { right(i) } else { i * n + k };
            edges.push((a, b));
        }
    }
    for j in 0..n {
        for k in 0..=n {
            let a = if k == 0 { top(j) } else { (k - 1) * n + j };
            let b = if k == n { bottom(j) } else { k * n + j };
            edges.push((a, b));
        }
    }
    let h = |i: usize, k: usize| i * (n + 1) + k;
    let v = |k: usize, j: usize| n * (n + 1) + j * (n + 1) + k;
    let mut rotation = vec![Vec::new(); internal + 4 * n];
    for i in 0..n {
        for j in 0..n {
            rotation[i * n + j] = vec![h(i, j + 1), v(i, j), h(i, j), v(i + 1, j)];
        }
        rotation[left(i)] = vec![h(i, 0)];
        rotation[right(i)] = vec![h(i, n)];
        rotation[top(i)] = vec![v(0, i)];
        rotation[bottom(i)] = vec![v(n, i)];
    }
    let map = PlanarMap::from_edges(internal + 4 * n, &edges, &rotation)?;
    let mut labels = Vec::with_capacity(4 * n);
    for i in 0..n {
        labels.push((left(i), format!("{}", i + 1)));
    }
    for j in 0..n {
        labels.push((top(j), format!("{}'", j + 1)));
    }
    for k in 1..=n {
        labels.push((right(n - k), format!("{k}_")));
    }
    for k in 1..=n {
        labels.push((bottom(n - k), format!("{k}''")));
    }
    Ok(GridGraph { n, map, labels })
}

/// An edge coloring of `G_n` checked against the restricted rules.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RestrictedColoring {
    n: usize,
    coloring: EdgeColoring,
}

impl RestrictedColoring {
    pub fn new(grid: &GridGraph, coloring: EdgeColoring) -> Result<Self> {
        check_restricted(grid, &coloring)?;
        Ok(Self { n: grid.n, coloring })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }
}

fn check_restricted(grid: &GridGraph, c: &EdgeColoring) -> Result<()> {
    let n = grid.n;
    let bad = |m: String| Err(Error::InvalidColoring(m));
    if c.len() != grid.map.num_edges() {
        return bad(format!("{} colors for {} edges", c.len(), grid.map.num_edges()));
    }
    for i in 0..n {
        for j in 0..n {
            let word: Vec<Color> = grid.vertex_edges(i, j).iter().map(|&e| c.get(e)).collect();
            if !is_local_valid(&word) {
                return bad(format!("vertex ({}, {}) has scheme {:?}", i + 1, j + 1, word));
            }
        }
    }
    let sides = grid.side_edges();
    for side in &sides {
        if side.windows(2).any(|w| c.get(w[0]) == c.get(w[1])) {
            return bad("pendant edges on a side do not alternate".into());
        }
    }
    let corners = [(&sides[0][0], &sides[1][0]), (&sides[1][n - 1], &sides[2][n - 1]), (&sides[2][0], &sides[3][0]), (&sides[3][n - 1], &sides[0][n - 1])];
    for (a, b) in corners {
        if c.get(*a) != c.get(*b) {
            return bad("a corner pair is not monochromatic".into());
        }
    }
    if c.get(sides[0][0]) != GREEN {
        return bad("the edge at label 1 must be green".into());
    }
    Ok(())
}

/// Colors along each line: start from the seeded left (top) end and switch
/// color after every vertex whose entry is 0.
pub fn asm_to_coloring(grid: &GridGraph, a: &AsmMatrix) -> Result<RestrictedColoring> {
    let n = grid.n;
    if a.n != n {
        return Err(Error::InvalidAsm(format!("{}x{} matrix for G_{}", a.n, a.n, n)));
    }
    if !validate_asm(&a.rows) {
        return Err(Error::InvalidAsm(format!("{:?}", a.rows)));
    }
    let seed = |line: usize| if line % 2 == 0 { GREEN } else { RED };
    let mut colors = vec![GREEN; grid.map.num_edges()];
    for i in 0..n {
        let mut c = seed(i);
        colors[grid.h_edge(i, 0)] = c;
        for k in 0..n {
            if a.rows[i][k] == 0 {
                c = c.flip();
            }
            colors[grid.h_edge(i, k + 1)] = c;
        }
    }
    for j in 0..n {
        let mut c = seed(j);
        colors[grid.v_edge(0, j)] = c;
        for k in 0..n {
            if a.rows[k][j] == 0 {
                c = c.flip();
            }
            colors[grid.v_edge(k + 1, j)] = c;
        }
    }
    RestrictedColoring::new(grid, EdgeColoring::new(colors))
}

/// Zeros where both lines change color at a vertex; the remaining
/// positions of each row get `+1, -1, +1, ...`. The same filling down each
/// column must agree.
pub fn coloring_to_asm(grid: &GridGraph, c: &RestrictedColoring) -> Result<AsmMatrix> {
    let n = grid.n;
    check_restricted(grid, &c.coloring)?;
    let col = |e: usize| c.coloring.get(e);
    let zero: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| col(grid.h_edge(i, j)) != col(grid.h_edge(i, j + 1))).collect())
        .collect();
    let mut rows = vec![vec![0i8; n]; n];
    for i in 0..n {
        let mut sign = 1;
        for j in 0..n {
            if !zero[i][j] {
                rows[i][j] = sign;
                sign = -sign;
            }
        }
    }
    for j in 0..n {
        let mut sign = 1;
        for i in 0..n {
            let vertical_change = col(grid.v_edge(i, j)) != col(grid.v_edge(i + 1, j));
            if vertical_change != zero[i][j] {
                return Err(Error::InvalidColoring(format!("lines disagree at ({}, {})", i + 1, j + 1)));
            }
            if !zero[i][j] {
                if rows[i][j] != sign {
                    return Err(Error::ColumnInconsistent { row: i + 1, col: j + 1 });
                }
                sign = -sign;
            }
        }
    }
    AsmMatrix::new(rows)
}

pub const RESTRICTED_MAX: usize = 6;

/// Every restricted coloring of `G_n`, found by a search over edge colors
/// that only consults the local rule and the boundary conditions.
pub fn enumerate_restricted(grid: &GridGraph) -> Result<Vec<RestrictedColoring>> {
    let n = grid.n;
    if n > RESTRICTED_MAX {
        return Err(Error::TooLarge { what: "n", value: n as u64, max: RESTRICTED_MAX as u64 });
    }
    let mut out = Vec::new();
    for seeds in 0u32..1 << (2 * n) {
        let mut colors: Vec<Option<Color>> = vec![None; grid.map.num_edges()];
        let bit = |k: usize| if seeds >> k & 1 == 1 { RED } else { GREEN };
        for i in 0..n {
            colors[grid.h_edge(i, 0)] = Some(bit(i));
            colors[grid.v_edge(0, i)] = Some(bit(n + i));
        }
        grid_search(grid, 0, &mut colors, &mut out);
    }
    out.sort();
    Ok(out)
}

fn grid_search(grid: &GridGraph, cell: usize, colors: &mut Vec<Option<Color>>, out: &mut Vec<RestrictedColoring>) {
    let n = grid.n;
    if cell == n * n {
        let c = EdgeColoring::new(colors.iter().map(|x| x.expect("all edges colored")).collect());
        if let Ok(r) = RestrictedColoring::new(grid, c) {
            out.push(r);
        }
        return;
    }
    let (i, j) = (cell / n, cell % n);
    let [right, up, left, down] = grid.vertex_edges(i, j);
    for r in [GREEN, RED] {
        for d in [GREEN, RED] {
            let word = [r, colors[up].unwrap(), colors[left].unwrap(), d];
            if is_local_valid(&word) {
                colors[right] = Some(r);
                colors[down] = Some(d);
                grid_search(grid, cell + 1, colors, out);
            }
        }
    }
    colors[right] = None;
    colors[down] = None;
}

/// Weak dual of the Aztec diamond of order `n`: the unit squares inside
/// `|x| + |y| <= n + 1`, row by row from the bottom.
pub fn aztec_dual(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooSmall);
    }
    let r = n as i64 + 1;
    let inside = |x: i64, y: i64| {
        [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)].iter().all(|&(a, b)| a.abs() + b.abs() <= r)
    };
    let mut index = std::collections::HashMap::new();
    let mut squares = Vec::new();
    for y in -r..r {
        for x in -r..r {
            if inside(x, y) {
                index.insert((x, y), squares.len());
                squares.push((x, y));
            }
        }
    }
    let mut edges = Vec::new();
    for (k, &(x, y)) in squares.iter().enumerate() {
        for nb in [(x + 1, y), (x, y + 1)] {
            if let Some(&m) = index.get(&nb) {
                edges.push((k, m));
            }
        }
    }
    Graph::new(squares.len(), edges)
}

/// The three sides of the Aztec diamond identity, each computed on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Report {
    pub n: usize,
    pub matchings: BigUint,
    pub plus_sum: BigUint,
    pub minus_sum: BigUint,
    pub all_equal: bool,
}

pub fn verify_theorem1(n: usize) -> Result<Theorem1Report> {
    if n > 5 {
        return Err(Error::TooLarge { what: "n", value: n as u64, max: 5 });
    }
    let matchings = crate::matchings::count_perfect_matchings(&aztec_dual(n)?).0;
    let weigh = |asms: Vec<AsmMatrix>, f: fn(&AsmMatrix) -> usize| {
        asms.iter().fold(BigUint::zero(), |acc, a| acc + (BigUint::from(1u8) << f(a)))
    };
    let plus_sum = weigh(enumerate_asms(n)?, n_plus);
    let minus_sum = weigh(enumerate_asms(n + 1)?, n_minus);
    let all_equal = matchings == plus_sum && plus_sum == minus_sum;
    Ok(Theorem1Report { n, matchings, plus_sum, minus_sum, all_equal })
}
