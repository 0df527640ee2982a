//! Exact solvers for the domination chain `ir ≤ γ ≤ i ≤ α ≤ Γ ≤ IR ≤ γ_gr`.
//!
//! α uses branch and bound with a greedy clique-cover bound. The five
//! irredundance-based invariants come from one depth-first walk over the
//! irredundant sets: irredundance is hereditary, minimal dominating sets and
//! maximal independent sets are irredundant, so every optimum is visited.
//! The walk extends sets in ascending vertex order, which visits sets in
//! lexicographic order; keeping the first optimum of each kind makes every
//! witness the lexicographically least one.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grundy;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

/// Number of cliques in a greedy clique cover of `cands`; an upper bound on
/// the independence number of `G⟨cands⟩`.
fn clique_cover_bound(g: &Graph, mut cands: VertexSet) -> usize {
    let mut count = 0;
    while let Some(u) = cands.first() {
        cands.remove(u);
        let mut common = cands & g.neighbors(u);
        while let Some(w) = common.first() {
            cands.remove(w);
            common &= g.neighbors(w);
        }
        count += 1;
    }
    count
}

struct AlphaSearch<'a> {
    g: &'a Graph,
    best: usize,
}

impl AlphaSearch<'_> {
    fn run(&mut self, cands: VertexSet, size: usize) {
        if cands.is_empty() {
            self.best = self.best.max(size);
            return;
        }
        if size + clique_cover_bound(self.g, cands) <= self.best {
            return;
        }
        let degree = |v: usize| (self.g.neighbors(v) & cands).len();
        let (low, low_deg) = cands.iter().map(|v| (v, degree(v))).min_by_key(|&(_, d)| d).expect("nonempty");
        if low_deg <= 1 {
            // Some maximum independent set contains a vertex of degree <= 1.
            self.run(cands - self.g.closed(low), size + 1);
            return;
        }
        let (v, _) = cands.iter().map(|v| (v, degree(v))).max_by_key(|&(v, d)| (d, std::cmp::Reverse(v))).expect("nonempty");
        self.run(cands - self.g.closed(v), size + 1);
        self.run(cands.without(v), size);
    }
}

/// α of the induced subgraph on `cands`.
pub(crate) fn alpha_within(g: &Graph, cands: VertexSet) -> usize {
    let mut s = AlphaSearch { g, best: 0 };
    s.run(cands, 0);
    s.best
}

/// α(G) with the lexicographically least maximum independent set.
pub fn independence_number(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    Limits::check("independence number", g.n(), limits.alpha_max_n)?;
    let alpha = alpha_within(g, g.vertices());
    let mut chosen = VertexSet::new();
    let mut cands = g.vertices();
    while chosen.len() < alpha {
        let need = alpha - chosen.len();
        let v = cands
            .iter()
            .find(|&v| 1 + alpha_within(g, cands.above(v) - g.closed(v)) >= need)
            .ok_or_else(|| Error::Consistency("independent set extension vanished".into()))?;
        chosen.insert(v);
        cands = cands.above(v) - g.closed(v);
    }
    Ok((alpha, chosen))
}

/// Visits every maximum independent set in lexicographic order until the
/// visitor breaks. Returns α(G).
pub fn for_each_maximum_independent_set(
    g: &Graph,
    limits: &Limits,
    mut visit: impl FnMut(VertexSet) -> ControlFlow<()>,
) -> Result<usize> {
    Limits::check("maximum independent set enumeration", g.n(), limits.enumeration_max_n)?;
    let alpha = alpha_within(g, g.vertices());

    fn rec(
        g: &Graph,
        alpha: usize,
        chosen: VertexSet,
        cands: VertexSet,
        visit: &mut dyn FnMut(VertexSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if chosen.len() == alpha {
            return visit(chosen);
        }
        if chosen.len() + clique_cover_bound(g, cands) < alpha {
            return ControlFlow::Continue(());
        }
        for v in cands {
            rec(g, alpha, chosen.with(v), cands.above(v) - g.closed(v), visit)?;
        }
        ControlFlow::Continue(())
    }

    let _ = rec(g, alpha, VertexSet::new(), g.vertices(), &mut visit);
    Ok(alpha)
}

/// All maximum independent sets, sorted lexicographically.
pub fn enumerate_maximum_independent_sets(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for_each_maximum_independent_set(g, limits, |s| {
        out.push(s);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Running state of the irredundant-set walk: vertices dominated once and
/// vertices dominated at least twice by `set`.
#[derive(Clone, Copy)]
struct Coverage {
    set: VertexSet,
    once: VertexSet,
    multi: VertexSet,
}

impl Coverage {
    fn empty() -> Self {
        Coverage {
            set: VertexSet::new(),
            once: VertexSet::new(),
            multi: VertexSet::new(),
        }
    }

    /// `set ∪ {v}` if it is still irredundant.
    #[inline]
    fn extend(&self, g: &Graph, v: usize) -> Option<Coverage> {
        let nv = g.closed(v);
        let once = (self.once - nv) | (nv - self.once - self.multi);
        let next = Coverage {
            set: self.set.with(v),
            once,
            multi: self.multi | (self.once & nv),
        };
        next.set.iter().all(|a| g.closed(a).intersects(&once)).then_some(next)
    }

    fn dominated(&self) -> VertexSet {
        self.once | self.multi
    }
}

/// Visits every irredundant set (including `∅`) in lexicographic order, with
/// its closed neighborhood. Returning `false` skips the supersets.
fn for_each_irredundant_set(g: &Graph, mut visit: impl FnMut(&VertexSet, VertexSet) -> bool) {
    fn rec(g: &Graph, cov: Coverage, next: VertexSet, visit: &mut dyn FnMut(&VertexSet, VertexSet) -> bool) {
        if !visit(&cov.set, cov.dominated()) {
            return;
        }
        for v in next {
            if let Some(c) = cov.extend(g, v) {
                rec(g, c, next.above(v), visit);
            }
        }
    }
    rec(g, Coverage::empty(), g.vertices(), &mut visit);
}

fn is_maximal_irredundant(g: &Graph, set: &VertexSet) -> bool {
    let mut cov = Coverage::empty();
    for v in set {
        cov = cov.extend(g, v).expect("visited sets are irredundant");
    }
    (g.vertices() - *set).iter().all(|v| cov.extend(g, v).is_none())
}

/// Optimal sets of the irredundance-based invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrredundanceScan {
    /// Minimum maximal irredundant set.
    pub ir: VertexSet,
    /// Minimum dominating set.
    pub gamma: VertexSet,
    /// Minimum independent dominating set.
    pub i: VertexSet,
    /// Maximum minimal dominating set.
    pub upper_gamma: VertexSet,
    /// Maximum irredundant set.
    pub upper_ir: VertexSet,
}

pub fn irredundance_scan(g: &Graph, limits: &Limits) -> Result<IrredundanceScan> {
    Limits::check("irredundance enumeration", g.n(), limits.enumeration_max_n)?;
    let all = g.vertices();
    let mut ir: Option<VertexSet> = None;
    let mut gamma: Option<VertexSet> = None;
    let mut i: Option<VertexSet> = None;
    let mut upper_gamma: Option<VertexSet> = None;
    let mut upper_ir = VertexSet::new();
    let better_min = |cur: &Option<VertexSet>, k: usize| cur.is_none_or(|c| k < c.len());
    let better_max = |cur: &Option<VertexSet>, k: usize| cur.is_none_or(|c| k > c.len());
    for_each_irredundant_set(g, |set, dominated| {
        let k = set.len();
        if k > upper_ir.len() {
            upper_ir = *set;
        }
        if dominated == all {
            if better_min(&gamma, k) {
                gamma = Some(*set);
            }
            if better_max(&upper_gamma, k) {
                upper_gamma = Some(*set);
            }
            if better_min(&i, k) && g.is_independent(set) {
                i = Some(*set);
            }
        }
        if k > 0 && better_min(&ir, k) && is_maximal_irredundant(g, set) {
            ir = Some(*set);
        }
        true
    });
    let missing = || Error::Consistency("irredundant walk found no dominating set".into());
    Ok(IrredundanceScan {
        ir: ir.ok_or_else(missing)?,
        gamma: gamma.ok_or_else(missing)?,
        i: i.ok_or_else(missing)?,
        upper_gamma: upper_gamma.ok_or_else(missing)?,
        upper_ir,
    })
}

/// γ(G) with the lexicographically least minimum dominating set.
pub fn domination_number(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    let s = irredundance_scan(g, limits)?;
    Ok((s.gamma.len(), s.gamma))
}

/// i(G) with the lexicographically least minimum maximal independent set.
pub fn independent_domination_number(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    let s = irredundance_scan(g, limits)?;
    Ok((s.i.len(), s.i))
}

/// Γ(G) with the lexicographically least maximum minimal dominating set.
pub fn upper_domination(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    let s = irredundance_scan(g, limits)?;
    Ok((s.upper_gamma.len(), s.upper_gamma))
}

/// `(ir, witness, IR, witness)`.
pub fn irredundance_numbers(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet, usize, VertexSet)> {
    let s = irredundance_scan(g, limits)?;
    Ok((s.ir.len(), s.ir, s.upper_ir.len(), s.upper_ir))
}

/// Every minimal dominating set, sorted lexicographically.
pub fn enumerate_minimal_dominating_sets(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    Limits::check("minimal dominating set enumeration", g.n(), limits.enumeration_max_n)?;
    let all = g.vertices();
    let mut out = Vec::new();
    for_each_irredundant_set(g, |set, dominated| {
        if dominated == all {
            out.push(*set);
        }
        true
    });
    Ok(out)
}

/// Every minimal dominating set of maximum size (the Γ-sets), sorted.
pub fn enumerate_upper_domination_sets(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let all = enumerate_minimal_dominating_sets(g, limits)?;
    let top = all.iter().map(VertexSet::len).max().unwrap_or(0);
    Ok(all.into_iter().filter(|s| s.len() == top).collect())
}

/// The seven chain values; `None` where a size cap stopped the solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ChainValues {
    pub ir: Option<usize>,
    pub gamma: Option<usize>,
    pub i: Option<usize>,
    pub alpha: Option<usize>,
    #[serde(rename = "Gamma")]
    pub upper_gamma: Option<usize>,
    #[serde(rename = "IR")]
    pub upper_ir: Option<usize>,
    pub gamma_gr: Option<usize>,
}

impl ChainValues {
    /// The values in chain order.
    pub fn as_array(&self) -> [Option<usize>; 7] {
        [self.ir, self.gamma, self.i, self.alpha, self.upper_gamma, self.upper_ir, self.gamma_gr]
    }

    pub const NAMES: [&'static str; 7] = ["ir", "gamma", "i", "alpha", "Gamma", "IR", "gamma_gr"];

    /// The first adjacent-in-order pair of present values that breaks the
    /// chain, if any.
    pub fn chain_violation(&self) -> Option<(&'static str, usize, &'static str, usize)> {
        let vals = self.as_array();
        for a in 0..7 {
            for b in a + 1..7 {
                if let (Some(x), Some(y)) = (vals[a], vals[b]) {
                    if x > y {
                        return Some((Self::NAMES[a], x, Self::NAMES[b], y));
                    }
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ChainWitnesses {
    pub ir: Option<VertexSet>,
    pub gamma: Option<VertexSet>,
    pub i: Option<VertexSet>,
    pub alpha: Option<VertexSet>,
    #[serde(rename = "Gamma")]
    pub upper_gamma: Option<VertexSet>,
    #[serde(rename = "IR")]
    pub upper_ir: Option<VertexSet>,
    /// A longest legal sequence, in order.
    pub gamma_gr: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub invariants: ChainValues,
    pub witnesses: ChainWitnesses,
    /// Solvers that hit a size cap.
    pub limits_hit: Vec<&'static str>,
}

impl InvariantReport {
    pub fn is_complete(&self) -> bool {
        self.limits_hit.is_empty()
    }
}

/// All seven chain values with witnesses. Capped solvers are recorded in
/// `limits_hit`; the chain ordering is verified on whatever was computed.
pub fn domination_chain_report(g: &Graph, limits: &Limits) -> Result<InvariantReport> {
    let mut values = ChainValues::default();
    let mut witnesses = ChainWitnesses::default();
    let mut limits_hit = Vec::new();

    match independence_number(g, limits) {
        Ok((a, w)) => {
            values.alpha = Some(a);
            witnesses.alpha = Some(w);
        }
        Err(e) if e.is_capacity() => limits_hit.push("alpha"),
        Err(e) => return Err(e),
    }
    match irredundance_scan(g, limits) {
        Ok(s) => {
            values.ir = Some(s.ir.len());
            values.gamma = Some(s.gamma.len());
            values.i = Some(s.i.len());
            values.upper_gamma = Some(s.upper_gamma.len());
            values.upper_ir = Some(s.upper_ir.len());
            witnesses.ir = Some(s.ir);
            witnesses.gamma = Some(s.gamma);
            witnesses.i = Some(s.i);
            witnesses.upper_gamma = Some(s.upper_gamma);
            witnesses.upper_ir = Some(s.upper_ir);
        }
        Err(e) if e.is_capacity() => limits_hit.extend(["ir", "gamma", "i", "Gamma", "IR"]),
        Err(e) => return Err(e),
    }
    match grundy::grundy_domination_number(g, limits) {
        Ok((k, seq)) => {
            values.gamma_gr = Some(k);
            witnesses.gamma_gr = Some(seq.vertices().to_vec());
        }
        Err(e) if e.is_capacity() => limits_hit.push("gamma_gr"),
        Err(e) => return Err(e),
    }
    if let Some((a, x, b, y)) = values.chain_violation() {
        return Err(Error::Consistency(format!("chain violated: {a} = {x} > {b} = {y}")));
    }
    Ok(InvariantReport {
        invariants: values,
        witnesses,
        limits_hit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, complete, cycle, path, star};
    use proptest::prelude::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn set<const K: usize>(v: [usize; K]) -> VertexSet {
        VertexSet::from(v)
    }

    /// Oracle: plain subset enumeration with the defining predicates.
    fn brute(g: &Graph) -> [usize; 6] {
        let n = g.n();
        let (mut ir, mut gamma, mut i, mut alpha, mut upper, mut upper_ir) = (n, n, n, 0, 0, 0);
        for mask in 0u32..1 << n {
            let s: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            let k = s.len();
            let irr = g.is_irredundant(&s);
            let dom = g.dominates(&s);
            let ind = g.is_independent(&s);
            if ind {
                alpha = alpha.max(k);
            }
            if dom {
                gamma = gamma.min(k);
            }
            if dom && ind {
                i = i.min(k);
            }
            if dom && irr {
                upper = upper.max(k);
            }
            if irr {
                upper_ir = upper_ir.max(k);
                if k > 0 && g.is_maximal_irredundant(&s) {
                    ir = ir.min(k);
                }
            }
        }
        [ir, gamma, i, alpha, upper, upper_ir]
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&families::hypercube(3).unwrap(), &lim()).unwrap().0, 4);
        assert_eq!(independence_number(&complete(6).unwrap(), &lim()).unwrap(), (1, set([0])));
        assert_eq!(independence_number(&families::kneser(5, 2).unwrap(), &lim()).unwrap().0, 4);
        assert_eq!(independence_number(&path(5).unwrap(), &lim()).unwrap(), (3, set([0, 2, 4])));
        assert_eq!(
            independence_number(&families::complete_multipartite(&[3, 2]).unwrap(), &lim()).unwrap(),
            (3, set([0, 1, 2]))
        );
        let big = Graph::empty(41).unwrap();
        assert!(independence_number(&big, &lim()).unwrap_err().is_capacity());
    }

    #[test]
    fn maximum_independent_set_enumeration() {
        assert_eq!(enumerate_maximum_independent_sets(&cycle(4).unwrap(), &lim()).unwrap(), vec![set([0, 2]), set([1, 3])]);
        assert_eq!(enumerate_maximum_independent_sets(&path(3).unwrap(), &lim()).unwrap(), vec![set([0, 2])]);
        let q3 = families::hypercube(3).unwrap();
        let sets = enumerate_maximum_independent_sets(&q3, &lim()).unwrap();
        assert_eq!(sets, vec![set([0, 3, 5, 6]), set([1, 2, 4, 7])]);
        let mut first = None;
        for_each_maximum_independent_set(&q3, &lim(), |s| {
            first = Some(s);
            ControlFlow::Break(())
        })
        .unwrap();
        assert_eq!(first, Some(set([0, 3, 5, 6])));
    }

    #[test]
    fn domination_examples() {
        assert_eq!(domination_number(&complete(5).unwrap(), &lim()).unwrap(), (1, set([0])));
        let c4 = cycle(4).unwrap();
        assert_eq!(domination_number(&c4, &lim()).unwrap(), (2, set([0, 1])));
        assert_eq!(independent_domination_number(&c4, &lim()).unwrap(), (2, set([0, 2])));
        let p4 = path(4).unwrap();
        assert_eq!(domination_number(&p4, &lim()).unwrap().0, 2);
        assert_eq!(independent_domination_number(&p4, &lim()).unwrap().0, 2);
    }

    #[test]
    fn upper_domination_examples() {
        let k3 = complete(3).unwrap();
        assert_eq!(upper_domination(&k3, &lim()).unwrap().0, 1);
        assert_eq!(enumerate_minimal_dominating_sets(&k3, &lim()).unwrap(), vec![set([0]), set([1]), set([2])]);
        assert_eq!(upper_domination(&families::prism_complete(3).unwrap(), &lim()).unwrap().0, 3);
        let c4 = cycle(4).unwrap();
        assert_eq!(upper_domination(&c4, &lim()).unwrap().0, 2);
        assert_eq!(
            enumerate_minimal_dominating_sets(&c4, &lim()).unwrap(),
            vec![set([0, 1]), set([0, 2]), set([0, 3]), set([1, 2]), set([1, 3]), set([2, 3])]
        );
        assert_eq!(upper_domination(&star(4).unwrap(), &lim()).unwrap(), (4, set([1, 2, 3, 4])));
    }

    #[test]
    fn irredundance_examples() {
        let p4 = path(4).unwrap();
        assert_eq!(irredundance_numbers(&p4, &lim()).unwrap().2, 2);
        let k3 = complete(3).unwrap();
        let (ir, _, upper, _) = irredundance_numbers(&k3, &lim()).unwrap();
        assert_eq!((ir, upper), (1, 1));
        assert_eq!(irredundance_numbers(&cycle(4).unwrap(), &lim()).unwrap().0, 2);
    }

    #[test]
    fn chain_reports() {
        let r = domination_chain_report(&cycle(4).unwrap(), &lim()).unwrap();
        assert_eq!(r.invariants.as_array(), [Some(2); 7]);
        let r = domination_chain_report(&complete(4).unwrap(), &lim()).unwrap();
        assert_eq!(r.invariants.as_array(), [Some(1); 7]);
        let r = domination_chain_report(&families::gap_family(2).unwrap(), &lim()).unwrap();
        let v = &r.invariants;
        assert!(v.ir.unwrap() <= 3 && v.gamma.unwrap() <= 3 && v.i.unwrap() <= 3 && v.upper_ir.unwrap() <= 4);
        assert_eq!((v.alpha, v.upper_gamma, v.gamma_gr), (Some(3), Some(3), Some(4)));
        assert!(r.is_complete());
    }

    #[test]
    fn capped_report_keeps_what_it_can() {
        let g = path(30).unwrap();
        let r = domination_chain_report(&g, &lim()).unwrap();
        assert_eq!(r.invariants.alpha, Some(15));
        assert_eq!(r.limits_hit, vec!["ir", "gamma", "i", "Gamma", "IR", "gamma_gr"]);
    }

    #[test]
    fn minimal_dominating_implies_maximal_irredundant() {
        for g in [families::hypercube(3).unwrap(), families::gap_family(2).unwrap(), families::crossed_prism(6).unwrap()] {
            for d in enumerate_minimal_dominating_sets(&g, &lim()).unwrap() {
                assert!(g.is_maximal_irredundant(&d), "{d}");
            }
        }
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
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn solvers_agree_with_subset_enumeration(g in arb_graph(9)) {
            let s = irredundance_scan(&g, &lim()).unwrap();
            let (alpha, aw) = independence_number(&g, &lim()).unwrap();
            prop_assert_eq!(
                [s.ir.len(), s.gamma.len(), s.i.len(), alpha, s.upper_gamma.len(), s.upper_ir.len()],
                brute(&g)
            );
            prop_assert!(g.is_maximal_irredundant(&s.ir));
            prop_assert!(g.dominates(&s.gamma));
            prop_assert!(g.is_maximal_independent(&s.i));
            prop_assert!(g.is_independent(&aw));
            prop_assert!(g.is_minimal_dominating(&s.upper_gamma));
            prop_assert!(g.is_irredundant(&s.upper_ir));
        }

        #[test]
        fn alpha_witness_is_lex_least(g in arb_graph(9)) {
            let (alpha, w) = independence_number(&g, &lim()).unwrap();
            let sets = enumerate_maximum_independent_sets(&g, &lim()).unwrap();
            prop_assert_eq!(sets[0], w);
            prop_assert!(sets.windows(2).all(|p| p[0] < p[1]));
            let n = g.n();
            let count = (0u32..1 << n)
                .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect::<VertexSet>())
                .filter(|s| s.len() == alpha && g.is_independent(s))
                .count();
            prop_assert_eq!(count, sets.len());
        }
    }
}
