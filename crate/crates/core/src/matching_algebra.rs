//! State sums over the two-letter matching algebra.
//!
//! The algebra has basis `y` (the vertex is still free) and `n` (the vertex
//! is already matched) with `y·y = y`, `y·n = n·y = n` and `n·n = 0`. A
//! graph with `k` distinguished vertices is summarized by an element of the
//! `k`-fold tensor power: the coefficient of a word records the number of
//! perfect matchings after deleting the distinguished vertices marked `y`.
//!
//! Words are bitmasks with bit `i` set when letter `i` is `n`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lucas::is_fibonacci_word;
use crate::matchings::{count_perfect_matchings, Graph};
use crate::planar_graph::Color;

pub const MAX_ARITY: usize = 62;

/// `coeff_y·y + coeff_n·n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    pub coeff_y: i64,
    pub coeff_n: i64,
}

impl AlgebraElement {
    pub const Y: AlgebraElement = AlgebraElement { coeff_y: 1, coeff_n: 0 };
    pub const N: AlgebraElement = AlgebraElement { coeff_y: 0, coeff_n: 1 };

    pub fn new(coeff_y: i64, coeff_n: i64) -> Self {
        Self { coeff_y, coeff_n }
    }

}

impl std::ops::Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeff_y: self.coeff_y * rhs.coeff_y,
            coeff_n: self.coeff_y * rhs.coeff_n + self.coeff_n * rhs.coeff_y,
        }
    }
}

/// An element of the `arity`-fold tensor power with nonnegative integer
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StateSum {
    arity: usize,
    terms: BTreeMap<u64, BigUint>,
}

fn check_arity(k: usize) -> Result<()> {
    if k > MAX_ARITY {
        Err(Error::ArityTooLarge(k))
    } else {
        Ok(())
    }
}

fn full_mask(k: usize) -> u64 {
    if k == 0 {
        0
    } else {
        u64::MAX >> (64 - k)
    }
}

pub fn word_to_string(word: u64, arity: usize) -> String {
    (0..arity).map(|i| if word >> i & 1 == 1 { 'n' } else { 'y' }).collect()
}

pub fn word_from_str(s: &str) -> Result<u64> {
    check_arity(s.len())?;
    let mut w = 0;
    for (i, c) in s.chars().enumerate() {
        match c {
            'y' => {}
            'n' => w |= 1 << i,
            other => return Err(Error::MalformedDocument(format!("letter {other:?} in word {s:?}"))),
        }
    }
    Ok(w)
}

fn word_colors(word: u64, arity: usize) -> Vec<Color> {
    (0..arity).map(|i| if word >> i & 1 == 1 { Color::N } else { Color::Y }).collect()
}

/// The bar involution: every `y` becomes `n` and vice versa.
pub fn bar(word: u64, arity: usize) -> u64 {
    !word & full_mask(arity)
}

impl StateSum {
    pub fn zero(arity: usize) -> Result<Self> {
        check_arity(arity)?;
        Ok(Self { arity, terms: BTreeMap::new() })
    }

    /// The arity-0 state sum with value `c`.
    pub fn scalar(c: BigUint) -> Self {
        let mut s = Self { arity: 0, terms: BTreeMap::new() };
        s.add_term(0, c);
        s
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, BigUint)>,
    {
        let mut s = Self::zero(arity)?;
        for (w, c) in terms {
            if w & !full_mask(arity) != 0 {
                return Err(Error::IndexOutOfRange { index: 63 - w.leading_zeros() as usize, arity });
            }
            s.add_term(w, c);
        }
        Ok(s)
    }

    /// Builds from `("yny", 3)`-style pairs; convenient in tests and examples.
    pub fn from_words(arity: usize, words: &[(&str, u64)]) -> Result<Self> {
        let mut s = Self::zero(arity)?;
        for &(w, c) in words {
            if w.len() != arity {
                return Err(Error::ArityMismatch { left: arity, right: w.len() });
            }
            s.add_term(word_from_str(w)?, BigUint::from(c));
        }
        Ok(s)
    }

    fn add_term(&mut self, word: u64, c: BigUint) {
        if c.is_zero() {
            return;
        }
        *self.terms.entry(word).or_default() += c;
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<u64, BigUint> {
        &self.terms
    }

    pub fn coeff(&self, word: u64) -> BigUint {
        self.terms.get(&word).cloned().unwrap_or_default()
    }

    pub fn coeff_str(&self, word: &str) -> Result<BigUint> {
        Ok(self.coeff(word_from_str(word)?))
    }

    /// Coefficient of the all-`n` word, which is `M(G)` for a graph state sum.
    pub fn all_n(&self) -> BigUint {
        self.coeff(full_mask(self.arity))
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Plain tensor product: `self` occupies the first positions.
    pub fn tensor(&self, other: &StateSum) -> Result<StateSum> {
        internal_mul(self, other, &[], &[])
    }

    pub fn add(&self, other: &StateSum) -> Result<StateSum> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: other.arity });
        }
        let mut s = self.clone();
        for (&w, c) in &other.terms {
            s.add_term(w, c.clone());
        }
        Ok(s)
    }

    /// The state sum with its letters cyclically shifted by `r` places:
    /// letter `i` moves to position `i + r`.
    pub fn rotate(&self, r: usize) -> StateSum {
        let k = self.arity;
        let mut s = StateSum { arity: k, terms: BTreeMap::new() };
        for (&w, c) in &self.terms {
            s.add_term(rotate_word(w, k, r), c.clone());
        }
        s
    }

    /// `{"arity":k,"terms":{"yny":"3"}}`
    pub fn to_json(&self) -> serde_json::Value {
        let terms: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(&w, c)| (word_to_string(w, self.arity), serde_json::Value::String(c.to_string())))
            .collect();
        serde_json::json!({ "arity": self.arity, "terms": terms })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<StateSum> {
        let bad = |m: &str| Error::MalformedDocument(m.to_string());
        let arity = value.get("arity").and_then(|a| a.as_u64()).ok_or_else(|| bad("missing arity"))? as usize;
        let terms = value.get("terms").and_then(|t| t.as_object()).ok_or_else(|| bad("missing terms"))?;
        let mut s = StateSum::zero(arity)?;
        for (word, c) in terms {
            if word.len() != arity {
                return Err(Error::ArityMismatch { left: arity, right: word.len() });
            }
            let c = match c {
                serde_json::Value::String(t) => t.parse::<BigUint>().map_err(|_| bad("bad coefficient"))?,
                serde_json::Value::Number(x) => BigUint::from(x.as_u64().ok_or_else(|| bad("bad coefficient"))?),
                _ => return Err(bad("bad coefficient")),
            };
            s.add_term(word_from_str(word)?, c);
        }
        Ok(s)
    }
}

fn rotate_word(w: u64, k: usize, r: usize) -> u64 {
    if k == 0 {
        return w;
    }
    let r = r % k;
    ((w << r) | (w >> (k - r))) & full_mask(k)
}

impl fmt::Display for StateSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}·")?;
            }
            if self.arity == 0 {
                write!(f, "1")?;
            } else {
                write!(f, "{}", word_to_string(w, self.arity))?;
            }
        }
        Ok(())
    }
}

/// Internal multiplication along 0-based index sets: position `I[t]` of
/// `w` is multiplied with position `J[t]` of `v` and stays where it is in
/// `w`'s frame; the unpaired letters of `v` follow in their order.
pub fn internal_mul(w: &StateSum, v: &StateSum, i_set: &[usize], j_set: &[usize]) -> Result<StateSum> {
    if i_set.len() != j_set.len() {
        return Err(Error::ArityMismatch { left: i_set.len(), right: j_set.len() });
    }
    for (set, arity) in [(i_set, w.arity), (j_set, v.arity)] {
        for (t, &x) in set.iter().enumerate() {
            if x >= arity {
                return Err(Error::IndexOutOfRange { index: x, arity });
            }
            if t > 0 && set[t - 1] >= x {
                return Err(Error::UnsortedIndices);
            }
        }
    }
    let arity = w.arity + v.arity - i_set.len();
    check_arity(arity)?;
    let leftovers: Vec<usize> = (0..v.arity).filter(|j| !j_set.contains(j)).collect();
    let mut out = StateSum { arity, terms: BTreeMap::new() };
    for (&a, ca) in &w.terms {
        for (&b, cb) in &v.terms {
            let mut word = a;
            let mut vanished = false;
            for (&i, &j) in i_set.iter().zip(j_set) {
                let (x, y) = (a >> i & 1, b >> j & 1);
                if x & y == 1 {
                    vanished = true;
                    break;
                }
                word |= (x | y) << i;
            }
            if vanished {
                continue;
            }
            for (t, &j) in leftovers.iter().enumerate() {
                word |= (b >> j & 1) << (w.arity + t);
            }
            out.add_term(word, ca * cb);
        }
    }
    Ok(out)
}

/// Gluing form of [`internal_mul`]: identifying the last `j` distinguished
/// vertices of one graph with the first `j` of another.
pub fn patch(w: &StateSum, v: &StateSum, i_set: &[usize], j_set: &[usize]) -> Result<StateSum> {
    internal_mul(w, v, i_set, j_set)
}

/// The state sum of `g` with respect to the ordered `distinguished` list,
/// computed by counting matchings of all `2^k` reduced graphs.
pub fn state_sum(g: &Graph, distinguished: &[usize]) -> Result<StateSum> {
    let n = g.num_vertices();
    let k = distinguished.len();
    check_arity(k)?;
    let mut seen = vec![false; n];
    for &d in distinguished {
        if d >= n {
            return Err(Error::VertexOutOfRange { vertex: d, count: n });
        }
        if seen[d] {
            return Err(Error::DuplicateDistinguished { vertex: d });
        }
        seen[d] = true;
    }
    if k > 24 {
        return Err(Error::TooLarge { what: "distinguished vertices", value: k as u64, max: 24 });
    }
    let terms: Vec<(u64, BigUint)> = (0..1u64 << k)
        .into_par_iter()
        .filter_map(|word| {
            let deleted = k - word.count_ones() as usize;
            if (n - deleted) % 2 == 1 {
                return None;
            }
            let mut keep = vec![true; n];
            for (i, &d) in distinguished.iter().enumerate() {
                if word >> i & 1 == 0 {
                    keep[d] = false;
                }
            }
            let c = count_perfect_matchings(&g.induced(&keep)).0;
            (!c.is_zero()).then_some((word, c))
        })
        .collect();
    StateSum::from_terms(k, terms)
}

/// Sum of all Fibonacci words of length `k`, each with coefficient 1.
pub fn fibonacci_tensor(k: usize) -> Result<StateSum> {
    check_arity(k)?;
    if k > 40 {
        return Err(Error::TooLarge { what: "fibonacci tensor length", value: k as u64, max: 40 });
    }
    let mut s = StateSum::zero(k)?;
    // build words directly: a run is either `y` or `nn`
    fn extend(pos: usize, k: usize, word: u64, s: &mut StateSum) {
        if pos == k {
            s.add_term(word, BigUint::one());
            return;
        }
        extend(pos + 1, k, word, s);
        if pos + 2 <= k {
            extend(pos + 2, k, word | 0b11 << pos, s);
        }
    }
    extend(0, k, 0, &mut s);
    debug_assert!(s.terms.keys().all(|&w| is_fibonacci_word(&word_colors(w, k))));
    Ok(s)
}

/// `F_k + n ⊗ F_{k-2} ⊗ n`, the state sum of the `k`-cycle (a double edge
/// when `k = 2`) with every vertex distinguished.
pub fn polygon_state_sum(k: usize) -> Result<StateSum> {
    if k < 2 {
        return Err(Error::TooSmall);
    }
    let n1 = StateSum::from_words(1, &[("n", 1)])?;
    let wrapped = n1.tensor(&fibonacci_tensor(k - 2)?)?.tensor(&n1)?;
    fibonacci_tensor(k)?.add(&wrapped)
}

/// The rotation closure of the support with unit coefficients; for even
/// arity the all-`n` word, when present, gets coefficient 2.
pub fn cyclic_closure(t: &StateSum) -> Result<StateSum> {
    let k = t.arity;
    if k == 0 {
        return Err(Error::TooSmall);
    }
    let mut s = StateSum::zero(k)?;
    for &w in t.terms.keys() {
        for r in 0..k {
            s.terms.insert(rotate_word(w, k, r), BigUint::one());
        }
    }
    let all = full_mask(k);
    if k % 2 == 0 {
        if let Some(c) = s.terms.get_mut(&all) {
            *c = BigUint::from(2u8);
        }
    }
    Ok(s)
}

/// `Σ_ε W(ε)·V(ε̄)`: the matching count of the graph obtained by identifying
/// the distinguished vertices pairwise.
pub fn connected_sum_count(w: &StateSum, v: &StateSum) -> Result<BigUint> {
    if w.arity != v.arity {
        return Err(Error::ArityMismatch { left: w.arity, right: v.arity });
    }
    Ok(w.terms
        .iter()
        .filter_map(|(&e, c)| v.terms.get(&bar(e, w.arity)).map(|d| c * d))
        .sum())
}

/// `Σ_ε W(ε)·V(ε)`: the matching count after joining the `i`-th
/// distinguished vertices of the two graphs by a new edge, for every `i`.
pub fn edge_glue_count(w: &StateSum, v: &StateSum) -> Result<BigUint> {
    if w.arity != v.arity {
        return Err(Error::ArityMismatch { left: w.arity, right: v.arity });
    }
    Ok(w.terms.iter().filter_map(|(e, c)| v.terms.get(e).map(|d| c * d)).sum())
}

/// `g` with edge `edge` replaced by a path through `inserted` new vertices.
pub fn subdivide_edge(g: &Graph, edge: usize, inserted: usize) -> Result<Graph> {
    let edges = g.edges();
    if edge >= edges.len() {
        return Err(Error::IndexOutOfRange { index: edge, arity: edges.len() });
    }
    let (u, v) = edges[edge];
    let n = g.num_vertices();
    let mut out: Vec<(usize, usize)> =
        edges.iter().enumerate().filter(|&(i, _)| i != edge).map(|(_, &e)| e).collect();
    let mut prev = u;
    for t in 0..inserted {
        out.push((prev, n + t));
        prev = n + t;
    }
    out.push((prev, v));
    Graph::new(n + inserted, out)
}

fn subdivision_compare(g: &Graph, distinguished: &[usize], edge: usize, inserted: usize) -> Result<bool> {
    let (u, v) = *g
        .edges()
        .get(edge)
        .ok_or(Error::IndexOutOfRange { index: edge, arity: g.edges().len() })?;
    if u == v || !distinguished.contains(&u) || !distinguished.contains(&v) {
        return Err(Error::NotDistinguishedEndpoints(u, v));
    }
    let before = state_sum(g, distinguished)?;
    let after = state_sum(&subdivide_edge(g, edge, inserted)?, distinguished)?;
    Ok(before == after)
}

/// Whether inserting `2·pairs` undistinguished vertices along `edge` leaves
/// the state sum unchanged. Both endpoints of the edge must be distinguished.
pub fn check_subdivision_invariance(g: &Graph, distinguished: &[usize], edge: usize, pairs: usize) -> Result<bool> {
    subdivision_compare(g, distinguished, edge, 2 * pairs)
}

/// Companion of [`check_subdivision_invariance`] with an odd number of new
/// vertices; the state sum then changes whenever it is nonzero.
pub fn check_odd_subdivision(g: &Graph, distinguished: &[usize], edge: usize, pairs: usize) -> Result<bool> {
    subdivision_compare(g, distinguished, edge, 2 * pairs + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ss(arity: usize, words: &[(&str, u64)]) -> StateSum {
        StateSum::from_words(arity, words).unwrap()
    }

    fn line(k: usize) -> Graph {
        Graph::new(k, (1..k).map(|i| (i - 1, i)).collect()).unwrap()
    }

    fn polygon(k: usize) -> Graph {
        Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)).collect()).unwrap()
    }

    fn all(k: usize) -> Vec<usize> {
        (0..k).collect()
    }

    #[test]
    fn algebra_table() {
        let (y, n) = (AlgebraElement::Y, AlgebraElement::N);
        assert_eq!(y * y, y);
        assert_eq!(y * n, n);
        assert_eq!(n * y, n);
        assert_eq!(n * n, AlgebraElement::default());
        assert_eq!(AlgebraElement::new(2, 3) * AlgebraElement::new(1, 1), AlgebraElement::new(2, 5));
    }

    #[test]
    fn internal_mul_layout() {
        // letters are distinct pure words so the layout can be read off
        let w = ss(3, &[("ynn", 1)]);
        let v = ss(4, &[("yyny", 1)]);
        // positions 1,2 of w against 0,3 of v: y, n·y, n·y, then v's y, n
        let out = internal_mul(&w, &v, &[1, 2], &[0, 3]).unwrap();
        assert_eq!(out, ss(5, &[("ynnyn", 1)]));
        let killed = internal_mul(&w, &ss(4, &[("nyyy", 1)]), &[1, 2], &[0, 3]).unwrap();
        assert_eq!(killed.support_len(), 0);
        let plain = internal_mul(&w, &v, &[], &[]).unwrap();
        assert_eq!(plain, ss(7, &[("ynnyyny", 1)]));
        assert_eq!(internal_mul(&w, &v, &[2, 1], &[0, 3]), Err(Error::UnsortedIndices));
        assert_eq!(internal_mul(&w, &v, &[3], &[0]), Err(Error::IndexOutOfRange { index: 3, arity: 3 }));
        assert!(matches!(internal_mul(&w, &v, &[1], &[0, 1]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn fibonacci_growth() {
        // gluing one more edge onto the end of the line
        let edge = fibonacci_tensor(2).unwrap();
        let fib = [1usize, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89];
        for k in 1..=10 {
            let fk = fibonacci_tensor(k).unwrap();
            assert_eq!(fk.support_len(), fib[k]);
            let next = internal_mul(&fk, &edge, &[k - 1], &[0]).unwrap();
            assert_eq!(next, fibonacci_tensor(k + 1).unwrap());
        }
        assert_eq!(fibonacci_tensor(2).unwrap(), ss(2, &[("yy", 1), ("nn", 1)]));
        let y = ss(1, &[("y", 1)]);
        let nn = ss(2, &[("nn", 1)]);
        for k in 3..=10 {
            let rec = fibonacci_tensor(k - 1)
                .unwrap()
                .tensor(&y)
                .unwrap()
                .add(&fibonacci_tensor(k - 2).unwrap().tensor(&nn).unwrap())
                .unwrap();
            assert_eq!(rec, fibonacci_tensor(k).unwrap());
        }
    }

    #[test]
    fn small_graph_state_sums() {
        assert_eq!(state_sum(&line(2), &[0, 1]).unwrap(), ss(2, &[("yy", 1), ("nn", 1)]));
        let p2 = Graph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(state_sum(&p2, &[0, 1]).unwrap(), ss(2, &[("nn", 2), ("yy", 1)]));
        assert_eq!(state_sum(&line(3), &[0, 1, 2]).unwrap(), ss(3, &[("yyy", 1), ("nny", 1), ("ynn", 1)]));
        assert_eq!(state_sum(&line(3), &[0, 0]), Err(Error::DuplicateDistinguished { vertex: 0 }));
        for k in 1..=10 {
            assert_eq!(state_sum(&line(k), &all(k)).unwrap(), fibonacci_tensor(k).unwrap());
        }
    }

    #[test]
    fn polygons() {
        assert_eq!(
            polygon_state_sum(3).unwrap(),
            ss(3, &[("yyy", 1), ("nny", 1), ("ynn", 1), ("nyn", 1)])
        );
        assert_eq!(polygon_state_sum(4).unwrap().coeff_str("nnnn").unwrap(), BigUint::from(2u8));
        assert_eq!(polygon_state_sum(2).unwrap(), ss(2, &[("nn", 2), ("yy", 1)]));
        for k in 3..=8 {
            let p = polygon_state_sum(k).unwrap();
            assert_eq!(state_sum(&polygon(k), &all(k)).unwrap(), p);
            assert_eq!(p.rotate(1), p);
            assert_eq!(cyclic_closure(&fibonacci_tensor(k).unwrap()).unwrap(), p);
        }
        assert_eq!(cyclic_closure(&ss(3, &[("yyy", 1)])).unwrap(), ss(3, &[("yyy", 1)]));
    }

    #[test]
    fn polygon_from_line_and_edge() {
        let p8 = internal_mul(&fibonacci_tensor(8).unwrap(), &fibonacci_tensor(2).unwrap(), &[0, 7], &[0, 1]).unwrap();
        assert_eq!(p8, polygon_state_sum(8).unwrap());
        let l3 = fibonacci_tensor(3).unwrap();
        assert_eq!(patch(&l3, &l3, &[2], &[0]).unwrap(), fibonacci_tensor(5).unwrap());
    }

    #[test]
    fn gluing_formulas_on_tiny_cases() {
        let l2 = fibonacci_tensor(2).unwrap();
        assert_eq!(connected_sum_count(&l2, &l2).unwrap(), BigUint::from(2u8));
        assert_eq!(edge_glue_count(&l2, &l2).unwrap(), BigUint::from(2u8));
        let p2 = polygon_state_sum(2).unwrap();
        assert_eq!(edge_glue_count(&p2, &p2).unwrap(), BigUint::from(5u8));
        let two_p2 = Graph::new(4, vec![(0, 1), (1, 0), (2, 3), (3, 2), (0, 2), (1, 3)]).unwrap();
        assert_eq!(count_perfect_matchings(&two_p2).0, BigUint::from(5u8));
        let a = StateSum::scalar(BigUint::from(3u8));
        let b = StateSum::scalar(BigUint::from(7u8));
        assert_eq!(edge_glue_count(&a, &b).unwrap(), BigUint::from(21u8));
        assert!(connected_sum_count(&l2, &fibonacci_tensor(3).unwrap()).is_err());
    }

    #[test]
    fn subdivision() {
        let e = line(2);
        assert!(check_subdivision_invariance(&e, &[0, 1], 0, 1).unwrap());
        assert!(!check_odd_subdivision(&e, &[0, 1], 0, 0).unwrap());
        let l3_ends = state_sum(&line(3), &[0, 2]).unwrap();
        assert_eq!(l3_ends, ss(2, &[("yn", 1), ("ny", 1)]));
        let tri = polygon(3);
        assert!(check_subdivision_invariance(&tri, &[0, 1], 0, 2).unwrap());
        assert_eq!(check_subdivision_invariance(&tri, &[0], 0, 1), Err(Error::NotDistinguishedEndpoints(0, 1)));
    }

    #[test]
    fn json_round_trip() {
        let p = polygon_state_sum(4).unwrap();
        let j = p.to_json();
        assert_eq!(j["terms"]["nnnn"], "2");
        assert_eq!(StateSum::from_json(&j).unwrap(), p);
        assert_eq!(p.to_string().matches('+').count(), p.support_len() - 1);
    }

    #[test]
    fn parity_and_all_n() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let n = rng.gen_range(2..10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let k = rng.gen_range(0..=n.min(5));
            let d: Vec<usize> = (0..k).collect();
            let s = state_sum(&g, &d).unwrap();
            assert_eq!(s.all_n(), count_perfect_matchings(&g).0);
            for &w in s.terms().keys() {
                let deleted = k - w.count_ones() as usize;
                assert_eq!((n - deleted) % 2, 0);
            }
        }
    }
}
