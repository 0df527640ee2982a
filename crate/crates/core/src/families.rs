//! Deterministic generators for the named graph families and constructions.
//!
//! Vertex orderings are part of each generator's contract so that witness
//! sets in reports can be mapped back to labels.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

fn capacity(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            what,
            n,
            limit: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,leaves}` with the center at index 0.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::input("a star needs at least one leaf"));
    }
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Parts laid out consecutively; edges exactly between distinct parts.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::input("complete multipartite sizes must be a nonempty list of positive numbers"));
    }
    let n: usize = sizes.iter().sum();
    capacity("complete multipartite", n)?;
    let mut part = Vec::with_capacity(n);
    for (p, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(p, s));
    }
    let part = &part;
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| part[u] != part[v]).map(move |v| (u, v))),
    )
}

/// Disjoint union with all edges between the two sides; `g` comes first.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (a, b) = (g.n(), h.n());
    capacity("join", a + b)?;
    let inner = g.edges().chain(h.edges().map(|(u, v)| (u + a, v + a)));
    let cross = (0..a).flat_map(|u| (0..b).map(move |v| (u, v + a)));
    Graph::from_edges(a + b, inner.chain(cross).collect::<Vec<_>>())
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let a = g.n();
    capacity("disjoint union", a + h.n())?;
    Graph::from_edges(
        a + h.n(),
        g.edges().chain(h.edges().map(|(u, v)| (u + a, v + a))).collect::<Vec<_>>(),
    )
}

/// `G □ H`; vertex `(g, h)` gets index `g·n(H) + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (a, b) = (g.n(), h.n());
    let n = a.saturating_mul(b);
    capacity("cartesian product", n)?;
    let mut edges = Vec::new();
    for x in 0..a {
        for (u, v) in h.edges() {
            edges.push((x * b + u, x * b + v));
        }
    }
    for (x, y) in g.edges() {
        for u in 0..b {
            edges.push((x * b + u, y * b + u));
        }
    }
    Graph::from_edges(n, edges)
}

/// `K_n □ K_2`: vertices `2i` and `2i+1` are the two copies of clique vertex `i`.
pub fn prism_complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::input(format!("prism over K_n needs n >= 2, got {n}")));
    }
    cartesian_product(&complete(n)?, &complete(2)?)
}

/// `Q_d` on bitstrings `0..2^d`; edges join strings at Hamming distance 1.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::input("hypercube dimension must be positive"));
    }
    if d >= usize::BITS as usize || 1usize << d > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "hypercube",
            n: 1usize.checked_shl(d as u32).unwrap_or(usize::MAX),
            limit: MAX_VERTICES,
        });
    }
    let n = 1usize << d;
    Graph::from_edges(
        n,
        (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ 1 << b)).filter(|(v, u)| v < u)),
    )
}

/// The `r`-subsets of `{0..n-1}` in lexicographic order: the vertex labels of
/// [`kneser`].
pub fn kneser_labels(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// `K(n, r)`: `r`-subsets of `[n]`, adjacent when disjoint.
pub fn kneser(n: usize, r: usize) -> Result<Graph> {
    if r == 0 || n < 2 * r {
        return Err(Error::input(format!("Kneser graph needs r >= 1 and n >= 2r, got n = {n}, r = {r}")));
    }
    let count = binomial(n, r);
    capacity("kneser", count)?;
    let labels: Vec<VertexSet> = kneser_labels(n, r).into_iter().map(|s| s.into_iter().collect()).collect();
    let mut edges = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate().skip(i + 1) {
            if a.is_disjoint(b) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(count, edges)
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Labels of [`crossed_prism`]: `u1..un` then `v1..vn`.
pub fn crossed_prism_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("u{i}")).chain((1..=n).map(|i| format!("v{i}"))).collect()
}

/// Index of `u_i` (1-based `i`) in [`crossed_prism`].
pub fn crossed_prism_u(n: usize, i: usize) -> usize {
    (i + n - 1) % n
}

/// Index of `v_i` (1-based `i`) in [`crossed_prism`].
pub fn crossed_prism_v(n: usize, i: usize) -> usize {
    n + (i + n - 1) % n
}

/// Two `n`-cycles `u_1…u_n` and `v_1…v_n` (indices `0..n` and `n..2n`) with
/// cross edges `v_s u_{s+1}` for odd `s` and `v_t u_{t-1}` for even `t`, all
/// indices 1-based and taken mod `n`.
pub fn crossed_prism(n: usize) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::input(format!("crossed prism needs an even n >= 4, got {n}")));
    }
    capacity("crossed prism", 2 * n)?;
    let u = |i: usize| crossed_prism_u(n, i);
    let v = |i: usize| crossed_prism_v(n, i);
    let mut edges = Vec::new();
    for i in 1..=n {
        edges.push((u(i), u(i + 1)));
        edges.push((v(i), v(i + 1)));
        if i % 2 == 1 {
            edges.push((v(i), u(i + 1)));
        } else {
            edges.push((v(i), u(i + n - 1)));
        }
    }
    Graph::from_edges(2 * n, edges)
}

/// `x_1..x_n` independent, `y_1..y_n` and `z_1..z_n` cliques, plus `x_i y_i`
/// and `y_i z_i`. Indices: `x_i = i-1`, `y_i = n+i-1`, `z_i = 2n+i-1`.
pub fn gap_family(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("gap family needs n >= 1"));
    }
    capacity("gap family", 3 * n)?;
    let (x, y, z) = (|i: usize| i, |i: usize| n + i, |i: usize| 2 * n + i);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((y(i), y(j)));
            edges.push((z(i), z(j)));
        }
        edges.push((x(i), y(i)));
        edges.push((y(i), z(i)));
    }
    Graph::from_edges(3 * n, edges)
}

/// Vertex indices of [`bipartite_ht_family`]. `a(i, j)` takes 1-based `i ∈ [n]`
/// and `j ∈ [3]`.
#[derive(Debug, Clone, Copy)]
pub struct HtLayout {
    pub n: usize,
}

impl HtLayout {
    pub fn a(&self, i: usize, j: usize) -> usize {
        3 * (i - 1) + (j - 1)
    }
    pub fn x(&self) -> usize {
        3 * self.n
    }
    pub fn y(&self) -> usize {
        3 * self.n + 1
    }
    pub fn u(&self, i: usize) -> usize {
        3 * self.n + 2 + (i - 1)
    }
    pub fn w(&self, i: usize) -> usize {
        4 * self.n + 2 + (i - 1)
    }
    /// The side `{a_{i,j}} ∪ {x, y}`.
    pub fn side_a(&self) -> VertexSet {
        VertexSet::full(3 * self.n + 2)
    }
}

/// Bipartite graph with sides `A = {a_{i,j}} ∪ {x, y}` and
/// `B = {u_i} ∪ {w_i}`: `x, y` see all of `B`, `a_{i,1}` sees `u_i, w_i`, and
/// `a_{i,2}, a_{i,3}` see only `u_i`. Layout in [`HtLayout`].
pub fn bipartite_ht_family(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("this bipartite family needs n >= 3, got {n}")));
    }
    capacity("bipartite family", 5 * n + 2)?;
    let l = HtLayout { n };
    let mut edges = Vec::new();
    for i in 1..=n {
        for b in [l.u(i), l.w(i)] {
            edges.push((l.x(), b));
            edges.push((l.y(), b));
        }
        edges.push((l.a(i, 1), l.u(i)));
        edges.push((l.a(i, 1), l.w(i)));
        edges.push((l.a(i, 2), l.u(i)));
        edges.push((l.a(i, 3), l.u(i)));
    }
    Graph::from_edges(5 * n + 2, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Path,
    Cycle,
    Complete,
    /// `K_{1,n}`: `n` leaves around center 0.
    Star,
    Empty,
}

pub fn basic(kind: BasicKind, n: usize) -> Result<Graph> {
    match kind {
        BasicKind::Path => path(n),
        BasicKind::Cycle => cycle(n),
        BasicKind::Complete => complete(n),
        BasicKind::Star => star(n),
        BasicKind::Empty => Graph::empty(n),
    }
}

/// `G_{xy}`: `x` and `y` merged into a new last vertex `w` with
/// `N(w) = (N(x) ∪ N(y)) − {x, y}`. The other vertices keep their relative
/// order.
pub fn identify_vertices(g: &Graph, x: usize, y: usize) -> Result<Graph> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::input(format!("cannot identify vertex {x} with itself")));
    }
    if g.n() < 2 {
        return Err(Error::input("identification needs two vertices"));
    }
    let rest = g.vertices().without(x).without(y);
    let new_index = |v: usize| v - usize::from(v > x) - usize::from(v > y);
    let w = g.n() - 2;
    let merged = (g.neighbors(x) | g.neighbors(y)) & rest;
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| rest.contains(u) && rest.contains(v))
        .map(|(u, v)| (new_index(u), new_index(v)))
        .collect();
    edges.extend(merged.iter().map(|v| (new_index(v), w)));
    Graph::from_edges(g.n() - 1, edges)
}
