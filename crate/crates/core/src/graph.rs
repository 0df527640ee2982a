//! Immutable simple undirected graphs over dense vertex indices.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency rows are bitsets; closed neighborhoods are cached because nearly
/// every solver works with `N[v]` rather than `N(v)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("a graph needs at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "graph order",
                n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
            closed: (0..n).map(VertexSet::singleton).collect(),
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops are
    /// rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from open-neighborhood rows, validating symmetry and the
    /// absence of loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if !row.is_subset(&all) {
                return Err(Error::input(format!("row {v} names a vertex >= {n}")));
            }
            if row.contains(v) {
                return Err(Error::input(format!("loop at vertex {v}")));
            }
            for u in row {
                if !adj[u].contains(v) {
                    return Err(Error::input(format!("adjacency not symmetric at ({v},{u})")));
                }
            }
        }
        for (v, row) in adj.into_iter().enumerate() {
            g.closed[v] = row.with(v);
            g.adj[v] = row;
        }
        Ok(g)
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.closed[u].insert(v);
        self.closed[v].insert(u);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, a: &VertexSet) -> Result<()> {
        match (*a - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`. Panics when `v >= n`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`. Panics when `v >= n`.
    #[inline]
    pub fn closed(&self, v: usize) -> VertexSet {
        self.closed[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].above(u).iter().map(move |v| (u, v)))
    }

    /// Checked `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed[v])
    }

    /// `N(A) = ⋃_{a∈A} N(a)`.
    pub fn open_neighborhood_of_set(&self, a: &VertexSet) -> VertexSet {
        a.iter().fold(VertexSet::new(), |acc, v| acc | self.adj[v])
    }

    /// `N[A] = ⋃_{a∈A} N[a]`; empty for `A = ∅`.
    pub fn closed_neighborhood_of_set(&self, a: &VertexSet) -> VertexSet {
        a.iter().fold(VertexSet::new(), |acc, v| acc | self.closed[v])
    }

    pub fn dominates(&self, a: &VertexSet) -> bool {
        self.closed_neighborhood_of_set(a) == self.vertices()
    }

    /// `pn[a, A] = { w : N[w] ∩ A = {a} }`.
    pub fn private_neighborhood(&self, a: usize, set: &VertexSet) -> Result<VertexSet> {
        self.check_set(set)?;
        if !set.contains(a) {
            return Err(Error::input(format!("vertex {a} is not a member of {set}")));
        }
        Ok(self.pn(a, set))
    }

    /// Unchecked private neighborhood: `N[a] − N[A − {a}]`.
    #[inline]
    pub(crate) fn pn(&self, a: usize, set: &VertexSet) -> VertexSet {
        self.closed[a] - self.closed_neighborhood_of_set(&set.without(a))
    }

    /// Every member has a nonempty private neighborhood. `∅` is irredundant.
    pub fn is_irredundant(&self, set: &VertexSet) -> bool {
        set.iter().all(|a| !self.pn(a, set).is_empty())
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(&self.adj[v]))
    }

    pub fn is_minimal_dominating(&self, set: &VertexSet) -> bool {
        self.dominates(set) && self.is_irredundant(set)
    }

    pub fn is_maximal_independent(&self, set: &VertexSet) -> bool {
        self.is_independent(set) && self.dominates(set)
    }

    pub fn is_maximal_irredundant(&self, set: &VertexSet) -> bool {
        self.is_irredundant(set)
            && (self.vertices() - *set)
                .iter()
                .all(|v| !self.is_irredundant(&set.with(v)))
    }

    /// Unordered pairs `{u, v}`, `u < v`, with `N[u] = N[v]`.
    pub fn find_twins(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            // Closed twins are adjacent, so only neighbors need checking.
            for v in self.adj[u].above(u) {
                if self.closed[u] == self.closed[v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_twin_free(&self) -> bool {
        self.find_twins().is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood_of_set(&frontier) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// A 2-coloring `(side containing vertex 0 of each component, other side)`
    /// or `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].expect("queued vertices are colored");
                for u in self.adj[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let left: VertexSet = (0..self.n).filter(|&v| color[v] == Some(false)).collect();
        Some((left, self.vertices() - left))
    }

    /// Shortest cycle length, by BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                for u in self.adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn structural_predicates(&self) -> Structure {
        let bipartition = self.bipartition();
        let girth = self.girth();
        Structure {
            connected: self.is_connected(),
            bipartite: bipartition.is_some(),
            bipartition,
            girth,
            triangle_free: girth > Girth::Finite(3),
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u].is_disjoint(&self.adj[v]))
    }

    /// `G⟨A⟩`, relabeled `0..|A|` in increasing original order. The returned
    /// map sends each new index to its original vertex.
    pub fn induced_subgraph(&self, a: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(a)?;
        if a.is_empty() {
            return Err(Error::input("induced subgraph of the empty set"));
        }
        let map = a.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & *a).iter().map(|u| index[u]).collect())
            .collect();
        Ok((Graph::from_adjacency(adj)?, map))
    }

    /// `G − v`, remaining vertices keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_subgraph(&self.vertices().without(v))?.0)
    }

    /// Vertex permutation: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n || perm.iter().collect::<VertexSet>().len() != self.n
            || perm.iter().any(|&p| p >= self.n)
        {
            return Err(Error::input("relabeling is not a permutation"));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| all - self.closed[v]).collect();
        Graph::from_adjacency(adj).expect("complement of a valid graph is valid")
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// `K_{1,r}` for some `r ≥ 1`.
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.edge_count() == self.n - 1
            && (0..self.n).any(|v| self.degree(v) == self.n - 1)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        self >= Girth::Finite(k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub connected: bool,
    pub bipartite: bool,
    pub bipartition: Option<(VertexSet, VertexSet)>,
    pub girth: Girth,
    pub triangle_free: bool,
}
