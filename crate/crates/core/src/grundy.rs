//! Legal (closed neighborhood) sequences and the Grundy domination number.
//!
//! A set `T` is achievable when it is the underlying set of a legal sequence:
//! `T = ∅`, or some `v ∈ T` has `N[v] ⊄ N[T − v]` with `T − v` achievable.
//! Reachability depends only on `T`, so searches memoize on the chosen set
//! and never look at orders.

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

/// A legal sequence with the vertices each position newly dominates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LegalSequence {
    vertices: Vec<usize>,
    newly_dominated: Vec<VertexSet>,
}

impl LegalSequence {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `N[x_i] − ⋃_{j<i} N[x_j]` for each position `i`.
    pub fn newly_dominated(&self) -> &[VertexSet] {
        &self.newly_dominated
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `Ŝ`.
    pub fn underlying_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// `N[Ŝ]`.
    pub fn dominated(&self) -> VertexSet {
        self.newly_dominated.iter().fold(VertexSet::new(), |acc, s| acc | *s)
    }
}

/// Outcome of [`check_legal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Legality {
    Legal(LegalSequence),
    /// The first position whose vertex dominates nothing new.
    Illegal { position: usize },
}

impl Legality {
    pub fn is_legal(&self) -> bool {
        matches!(self, Legality::Legal(_))
    }

    pub fn into_sequence(self) -> Option<LegalSequence> {
        match self {
            Legality::Legal(s) => Some(s),
            Legality::Illegal { .. } => None,
        }
    }
}

pub fn check_legal(g: &Graph, seq: &[usize]) -> Result<Legality> {
    let mut seen = VertexSet::new();
    for &v in seq {
        g.check_vertex(v)?;
        if seen.contains(v) {
            return Err(Error::input(format!("vertex {v} repeats in the sequence")));
        }
        seen.insert(v);
    }
    let mut dominated = VertexSet::new();
    let mut newly_dominated = Vec::with_capacity(seq.len());
    for (position, &v) in seq.iter().enumerate() {
        let fresh = g.closed(v) - dominated;
        if fresh.is_empty() {
            return Ok(Legality::Illegal { position });
        }
        dominated |= fresh;
        newly_dominated.push(fresh);
    }
    Ok(Legality::Legal(LegalSequence {
        vertices: seq.to_vec(),
        newly_dominated,
    }))
}

/// `f_S`: each dominated vertex mapped to the position that footprints it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FootprintMap {
    position: Vec<Option<usize>>,
    vertices: Vec<usize>,
}

impl FootprintMap {
    /// Position in the sequence of the footprinter of `v`.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.position.get(v).copied().flatten()
    }

    /// The footprinter of `v` itself.
    pub fn footprinter(&self, v: usize) -> Option<usize> {
        self.position(v).map(|p| self.vertices[p])
    }

    /// `N[Ŝ]`.
    pub fn domain(&self) -> VertexSet {
        (0..self.position.len()).filter(|&v| self.position[v].is_some()).collect()
    }
}

pub fn footprint_map(g: &Graph, seq: &LegalSequence) -> FootprintMap {
    let mut position = vec![None; g.n()];
    for (p, fresh) in seq.newly_dominated.iter().enumerate() {
        for v in *fresh {
            position[v] = Some(p);
        }
    }
    FootprintMap {
        position,
        vertices: seq.vertices.clone(),
    }
}

/// Bounded set of visited states; past the budget it stops remembering and the
/// search continues unmemoized.
struct Memo {
    seen: HashSet<VertexSet>,
    budget: usize,
}

impl Memo {
    fn new(budget: usize) -> Self {
        Memo {
            seen: HashSet::new(),
            budget,
        }
    }

    /// `true` when `t` was already recorded.
    fn visited(&mut self, t: VertexSet) -> bool {
        if self.seen.contains(&t) {
            return true;
        }
        if self.seen.len() < self.budget {
            self.seen.insert(t);
        }
        false
    }
}

struct GrundySearch<'a> {
    g: &'a Graph,
    all: VertexSet,
    memo: Memo,
    path: Vec<usize>,
    best: Vec<usize>,
}

impl GrundySearch<'_> {
    fn run(&mut self, t: VertexSet, dominated: VertexSet) {
        if self.path.len() > self.best.len() {
            self.best.clone_from(&self.path);
        }
        if t.len() + (self.all - dominated).len() <= self.best.len() {
            return;
        }
        if self.memo.visited(t) {
            return;
        }
        let mut cands: Vec<(usize, usize)> = (self.all - t)
            .iter()
            .map(|v| (v, (self.g.closed(v) - dominated).len()))
            .filter(|&(_, k)| k > 0)
            .collect();
        cands.sort_by_key(|&(v, k)| (std::cmp::Reverse(k), v));
        for (v, _) in cands {
            self.path.push(v);
            self.run(t.with(v), dominated | self.g.closed(v));
            self.path.pop();
        }
    }
}

/// γ_gr(G) with the first longest legal sequence met by the search.
pub fn grundy_domination_number(g: &Graph, limits: &Limits) -> Result<(usize, LegalSequence)> {
    Limits::check("Grundy domination number", g.n(), limits.grundy_max_n)?;
    let mut s = GrundySearch {
        g,
        all: g.vertices(),
        memo: Memo::new(limits.memo_budget),
        path: Vec::new(),
        best: Vec::new(),
    };
    s.run(VertexSet::new(), VertexSet::new());
    let seq = check_legal(g, &s.best)?
        .into_sequence()
        .ok_or_else(|| Error::Consistency("Grundy search produced an illegal sequence".into()))?;
    Ok((seq.len(), seq))
}

/// Visits every nonempty achievable set exactly once, until the visitor
/// breaks. Returns the number of visits.
pub fn for_each_achievable_set(
    g: &Graph,
    limits: &Limits,
    mut visit: impl FnMut(VertexSet) -> ControlFlow<()>,
) -> Result<usize> {
    Limits::check("achievable set enumeration", g.n(), limits.grundy_max_n)?;

    fn rec(
        g: &Graph,
        t: VertexSet,
        dominated: VertexSet,
        seen: &mut HashSet<VertexSet>,
        count: &mut usize,
        visit: &mut dyn FnMut(VertexSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        for v in g.vertices() - t {
            if g.closed(v).is_subset(&dominated) {
                continue;
            }
            let next = t.with(v);
            if seen.insert(next) {
                *count += 1;
                visit(next)?;
                rec(g, next, dominated | g.closed(v), seen, count, visit)?;
            }
        }
        ControlFlow::Continue(())
    }

    let mut seen = HashSet::new();
    let mut count = 0;
    let _ = rec(g, VertexSet::new(), VertexSet::new(), &mut seen, &mut count, &mut visit);
    Ok(count)
}

/// Every nonempty achievable set, sorted lexicographically.
pub fn enumerate_achievable_sets(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for_each_achievable_set(g, limits, |t| {
        out.push(t);
        ControlFlow::Continue(())
    })?;
    out.sort_unstable();
    Ok(out)
}

/// A legal sequence with underlying set `t`, or `None` when `t` is not
/// achievable. Peels removable vertices off the end, smallest index first.
pub fn legal_order(g: &Graph, t: &VertexSet) -> Result<Option<LegalSequence>> {
    g.check_set(t)?;

    fn peel(g: &Graph, t: VertexSet, dead: &mut HashSet<VertexSet>, out: &mut Vec<usize>) -> bool {
        if t.is_empty() {
            return true;
        }
        if dead.contains(&t) {
            return false;
        }
        for v in t {
            let rest = t.without(v);
            if !g.closed(v).is_subset(&g.closed_neighborhood_of_set(&rest)) && peel(g, rest, dead, out) {
                out.push(v);
                return true;
            }
        }
        dead.insert(t);
        false
    }

    let mut order = Vec::with_capacity(t.len());
    if !peel(g, *t, &mut HashSet::new(), &mut order) {
        return Ok(None);
    }
    Ok(check_legal(g, &order)?.into_sequence())
}

/// `true` iff every permutation of `Ŝ` is legal.
pub fn is_commutative(g: &Graph, seq: &LegalSequence, limits: &Limits) -> Result<bool> {
    Limits::check("commutativity check", seq.len(), limits.commutativity_max_len)?;

    fn all_orders(g: &Graph, rest: VertexSet, dominated: VertexSet) -> bool {
        rest.iter().all(|v| {
            let nv = g.closed(v);
            !nv.is_subset(&dominated) && all_orders(g, rest.without(v), dominated | nv)
        })
    }

    Ok(all_orders(g, seq.underlying_set(), VertexSet::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, complete, cycle, path, star};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn lim() -> Limits {
        Limits::default()
    }

    fn set<const K: usize>(v: [usize; K]) -> VertexSet {
        VertexSet::from(v)
    }

    /// Oracle: every ordered sequence of distinct vertices, checked position
    /// by position against the definition.
    fn ordered_brute_force(g: &Graph) -> (BTreeSet<VertexSet>, usize) {
        fn rec(g: &Graph, seq: &mut Vec<usize>, out: &mut BTreeSet<VertexSet>, best: &mut usize) {
            for v in 0..g.n() {
                if seq.contains(&v) {
                    continue;
                }
                let earlier: VertexSet = seq.iter().flat_map(|&x| g.closed(x)).collect();
                if (g.closed(v) - earlier).is_empty() {
                    continue;
                }
                seq.push(v);
                out.insert(seq.iter().copied().collect());
                *best = (*best).max(seq.len());
                rec(g, seq, out, best);
                seq.pop();
            }
        }
        let mut out = BTreeSet::new();
        let mut best = 0;
        rec(g, &mut Vec::new(), &mut out, &mut best);
        (out, best)
    }

    #[test]
    fn check_legal_examples() {
        let p3 = path(3).unwrap();
        let s = check_legal(&p3, &[0, 2]).unwrap().into_sequence().unwrap();
        assert_eq!(s.newly_dominated(), &[set([0, 1]), set([2])]);
        assert_eq!(check_legal(&p3, &[1, 0]).unwrap(), Legality::Illegal { position: 1 });
        assert_eq!(check_legal(&complete(4).unwrap(), &[0, 1]).unwrap(), Legality::Illegal { position: 1 });
        assert!(matches!(check_legal(&p3, &[0, 0]), Err(Error::Input(_))));
        assert!(matches!(check_legal(&p3, &[3]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn footprint_examples() {
        let p3 = path(3).unwrap();
        let s = check_legal(&p3, &[0, 2]).unwrap().into_sequence().unwrap();
        let f = footprint_map(&p3, &s);
        assert_eq!((0..3).map(|v| f.footprinter(v)).collect::<Vec<_>>(), vec![Some(0), Some(0), Some(2)]);

        let k13 = star(3).unwrap();
        let s = check_legal(&k13, &[0]).unwrap().into_sequence().unwrap();
        let f = footprint_map(&k13, &s);
        assert!((0..4).all(|v| f.footprinter(v) == Some(0)));

        let c4 = cycle(4).unwrap();
        let s = check_legal(&c4, &[0, 2]).unwrap().into_sequence().unwrap();
        let f = footprint_map(&c4, &s);
        assert_eq!((0..4).map(|v| f.footprinter(v)).collect::<Vec<_>>(), vec![Some(0), Some(0), Some(2), Some(0)]);
        assert_eq!(f.domain(), c4.vertices());

        let s = check_legal(&path(5).unwrap(), &[0]).unwrap().into_sequence().unwrap();
        let f = footprint_map(&path(5).unwrap(), &s);
        assert_eq!(f.domain(), set([0, 1]));
        assert_eq!(f.position(4), None);
    }

    #[test]
    fn grundy_examples() {
        assert_eq!(grundy_domination_number(&complete(5).unwrap(), &lim()).unwrap().0, 1);
        assert_eq!(grundy_domination_number(&families::hypercube(3).unwrap(), &lim()).unwrap().0, 4);
        assert_eq!(grundy_domination_number(&families::gap_family(3).unwrap(), &lim()).unwrap().0, 6);
        assert_eq!(grundy_domination_number(&path(4).unwrap(), &lim()).unwrap().0, 3);
        assert!(grundy_domination_number(&Graph::empty(25).unwrap(), &lim()).unwrap_err().is_capacity());
    }

    #[test]
    fn tiny_memo_budget_gives_same_answer() {
        let g = families::crossed_prism(6).unwrap();
        let mut tight = lim();
        tight.memo_budget = 3;
        assert_eq!(
            grundy_domination_number(&g, &tight).unwrap().0,
            grundy_domination_number(&g, &lim()).unwrap().0
        );
    }

    #[test]
    fn achievable_examples() {
        let p3 = enumerate_achievable_sets(&path(3).unwrap(), &lim()).unwrap();
        assert_eq!(p3, vec![set([0]), set([0, 1]), set([0, 2]), set([1]), set([1, 2]), set([2])]);
        let k3 = enumerate_achievable_sets(&complete(3).unwrap(), &lim()).unwrap();
        assert_eq!(k3, vec![set([0]), set([1]), set([2])]);
        let c4: BTreeSet<_> = enumerate_achievable_sets(&cycle(4).unwrap(), &lim()).unwrap().into_iter().collect();
        let expected: BTreeSet<_> = [
            set([0]), set([1]), set([2]), set([3]), set([0, 1]), set([1, 2]),
            set([2, 3]), set([0, 3]), set([0, 2]), set([1, 3]),
        ]
        .into_iter()
        .collect();
        assert_eq!(c4, expected);
    }

    #[test]
    fn achievable_visitor_can_stop() {
        let mut seen = 0;
        let count = for_each_achievable_set(&cycle(5).unwrap(), &lim(), |_| {
            seen += 1;
            if seen == 3 { ControlFlow::Break(()) } else { ControlFlow::Continue(()) }
        })
        .unwrap();
        assert_eq!((seen, count), (3, 3));
    }

    #[test]
    fn commutativity_examples() {
        let p3 = path(3).unwrap();
        let s = check_legal(&p3, &[0, 1]).unwrap().into_sequence().unwrap();
        assert!(!is_commutative(&p3, &s, &lim()).unwrap());
        let c4 = cycle(4).unwrap();
        let s = check_legal(&c4, &[0, 2]).unwrap().into_sequence().unwrap();
        assert!(is_commutative(&c4, &s, &lim()).unwrap());
        let p20 = path(20).unwrap();
        let s = check_legal(&p20, &(0..9).map(|i| 2 * i).collect::<Vec<_>>()).unwrap().into_sequence().unwrap();
        assert!(is_commutative(&p20, &s, &lim()).unwrap_err().is_capacity());
    }

    #[test]
    fn legal_order_examples() {
        let p3 = path(3).unwrap();
        let s = legal_order(&p3, &set([0, 1])).unwrap().unwrap();
        assert_eq!(s.underlying_set(), set([0, 1]));
        assert_eq!(legal_order(&complete(3).unwrap(), &set([0, 1])).unwrap(), None);
        assert!(legal_order(&p3, &VertexSet::new()).unwrap().unwrap().is_empty());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn achievable_sets_match_ordered_brute_force(g in arb_graph(5)) {
            let (sets, longest) = ordered_brute_force(&g);
            let ours: BTreeSet<_> = enumerate_achievable_sets(&g, &lim()).unwrap().into_iter().collect();
            prop_assert_eq!(&ours, &sets);
            prop_assert_eq!(grundy_domination_number(&g, &lim()).unwrap().0, longest);
            for t in &sets {
                let seq = legal_order(&g, t).unwrap().unwrap();
                prop_assert_eq!(seq.underlying_set(), *t);
            }
        }

        #[test]
        fn sequences_extend_to_dominating_ones(g in arb_graph(8)) {
            let sets: HashSet<_> = enumerate_achievable_sets(&g, &lim()).unwrap().into_iter().collect();
            for t in &sets {
                if !g.dominates(t) {
                    prop_assert!((g.vertices() - *t).iter().any(|v| sets.contains(&t.with(v))));
                }
            }
        }

        #[test]
        fn irredundant_underlying_sets_commute(g in arb_graph(8)) {
            for t in enumerate_achievable_sets(&g, &lim()).unwrap() {
                if t.len() > 6 {
                    continue;
                }
                let seq = legal_order(&g, &t).unwrap().unwrap();
                let commutes = is_commutative(&g, &seq, &lim()).unwrap();
                if g.is_irredundant(&t) {
                    prop_assert!(commutes);
                }
                // Conversely, a commutative sequence has every member last,
                // which forces a private neighbor for each.
                prop_assert_eq!(commutes, g.is_irredundant(&t));
            }
        }

        #[test]
        fn witness_is_legal_and_optimal(g in arb_graph(9)) {
            let (k, seq) = grundy_domination_number(&g, &lim()).unwrap();
            prop_assert_eq!(k, seq.len());
            prop_assert!(g.dominates(&seq.underlying_set()));
            let newly = seq.newly_dominated();
            for (i, &v) in seq.vertices().iter().enumerate() {
                prop_assert!(!newly[i].is_empty());
                prop_assert!(newly[i].is_subset(&g.closed(v)));
            }
            let longest = enumerate_achievable_sets(&g, &lim()).unwrap().iter().map(VertexSet::len).max().unwrap();
            prop_assert_eq!(k, longest);
        }
    }
}
