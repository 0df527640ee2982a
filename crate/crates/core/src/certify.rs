//! Independent re-validation of solver output.
//!
//! Everything here works from the raw adjacency relation with plain vectors
//! and ordered sets, and shares no code with the solvers beyond
//! [`Graph::has_edge`]. Reports and verdict witnesses pass through these
//! checks before the CLI emits them.

use std::collections::BTreeSet;

use crate::classcheck::{PropertyVerdict, Witness};
use crate::graph::Graph;
use crate::invariants::{ChainValues, InvariantReport};
use crate::vertex_set::VertexSet;

type Set = BTreeSet<usize>;

struct Naive {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        Naive { n, adj }
    }

    fn set(s: &VertexSet) -> Set {
        s.iter().collect()
    }

    fn all(&self) -> Set {
        (0..self.n).collect()
    }

    fn in_range(&self, s: &Set) -> bool {
        s.iter().all(|&v| v < self.n)
    }

    fn open(&self, s: &Set) -> Set {
        (0..self.n).filter(|&v| s.iter().any(|&u| self.adj[u][v])).collect()
    }

    fn closed(&self, s: &Set) -> Set {
        (0..self.n).filter(|&v| s.contains(&v) || s.iter().any(|&u| self.adj[u][v])).collect()
    }

    fn closed_of(&self, v: usize) -> Set {
        self.closed(&Set::from([v]))
    }

    /// Vertices whose closed neighborhood meets `s` exactly in `{a}`.
    fn private(&self, a: usize, s: &Set) -> Set {
        (0..self.n)
            .filter(|&w| {
                let hits: Vec<usize> = s.iter().copied().filter(|&x| x == w || self.adj[x][w]).collect();
                hits == [a]
            })
            .collect()
    }

    fn independent(&self, s: &Set) -> bool {
        s.iter().all(|&u| s.iter().all(|&v| !self.adj[u][v]))
    }

    fn dominating(&self, s: &Set) -> bool {
        self.closed(s).len() == self.n
    }

    fn irredundant(&self, s: &Set) -> bool {
        s.iter().all(|&a| !self.private(a, s).is_empty())
    }

    fn maximal_irredundant(&self, s: &Set) -> bool {
        self.irredundant(s)
            && (0..self.n).filter(|v| !s.contains(v)).all(|v| {
                let mut t = s.clone();
                t.insert(v);
                !self.irredundant(&t)
            })
    }

    /// Walks the sequence checking that each vertex dominates something new.
    fn legal(&self, seq: &[usize]) -> bool {
        let mut dominated = Set::new();
        let mut used = Set::new();
        for &v in seq {
            if v >= self.n || !used.insert(v) {
                return false;
            }
            let fresh: Vec<usize> = self.closed_of(v).into_iter().filter(|u| !dominated.contains(u)).collect();
            if fresh.is_empty() {
                return false;
            }
            dominated.extend(fresh);
        }
        true
    }

    fn is_alpha_set(&self, a: &Set, alpha: Option<usize>) -> bool {
        self.in_range(a) && self.independent(a) && alpha.is_none_or(|k| a.len() == k)
    }

    fn is_gamma_set(&self, d: &Set, upper: Option<usize>) -> bool {
        self.in_range(d) && self.dominating(d) && self.irredundant(d) && upper.is_none_or(|k| d.len() == k)
    }

    /// `I_u`: members of `d` whose private neighborhoods lie in `N[u]`.
    fn covers(&self, d: &Set, u: usize) -> Set {
        let nu = self.closed_of(u);
        d.iter().copied().filter(|&x| self.private(x, d).is_subset(&nu)).collect()
    }

    fn odd_cycle(&self) -> bool {
        // Parity reachability: an odd closed walk exists iff some vertex
        // reaches itself at odd distance.
        (0..self.n).any(|s| {
            let mut reach = vec![[false; 2]; self.n];
            reach[s][0] = true;
            let mut stack = vec![(s, 0usize)];
            while let Some((v, p)) = stack.pop() {
                for u in (0..self.n).filter(|&u| self.adj[v][u]) {
                    if !reach[u][1 - p] {
                        reach[u][1 - p] = true;
                        stack.push((u, 1 - p));
                    }
                }
            }
            reach[s][1]
        })
    }

    fn alpha(&self) -> usize {
        (0u64..1 << self.n)
            .map(|m| (0..self.n).filter(|v| m >> v & 1 == 1).collect::<Set>())
            .filter(|s| self.independent(s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    fn longest_legal(&self) -> usize {
        achievable_by_orders_naive(self).iter().map(Set::len).max().unwrap_or(0)
    }
}

fn achievable_by_orders_naive(g: &Naive) -> BTreeSet<Set> {
    fn rec(g: &Naive, seq: &mut Vec<usize>, out: &mut BTreeSet<Set>) {
        for v in 0..g.n {
            if seq.contains(&v) {
                continue;
            }
            seq.push(v);
            if g.legal(seq) {
                out.insert(seq.iter().copied().collect());
                rec(g, seq, out);
            }
            seq.pop();
        }
    }
    let mut out = BTreeSet::new();
    rec(g, &mut Vec::new(), &mut out);
    out
}

/// Underlying sets of all nonempty legal sequences, found by walking every
/// ordered sequence of distinct vertices. Factorial; meant for `n ≤ 6`.
pub fn achievable_sets_by_orders(g: &Graph) -> BTreeSet<VertexSet> {
    achievable_by_orders_naive(&Naive::new(g))
        .into_iter()
        .map(|s| s.into_iter().collect())
        .collect()
}

/// Checks that every witness in the report certifies its value.
pub fn certify_report(g: &Graph, report: &InvariantReport) -> Result<(), String> {
    let nv = Naive::new(g);
    let values = &report.invariants;
    let w = &report.witnesses;
    let check = |name: &str, value: Option<usize>, set: &Option<VertexSet>, ok: &dyn Fn(&Set) -> bool| {
        match (value, set) {
            (None, None) => Ok(()),
            (Some(k), Some(s)) => {
                let s = Naive::set(s);
                if s.len() == k && nv.in_range(&s) && ok(&s) {
                    Ok(())
                } else {
                    Err(format!("{name} witness {s:?} does not certify {k}"))
                }
            }
            _ => Err(format!("{name} value and witness disagree on presence")),
        }
    };
    check("ir", values.ir, &w.ir, &|s| nv.maximal_irredundant(s))?;
    check("gamma", values.gamma, &w.gamma, &|s| nv.dominating(s))?;
    check("i", values.i, &w.i, &|s| nv.independent(s) && nv.dominating(s))?;
    check("alpha", values.alpha, &w.alpha, &|s| nv.independent(s))?;
    check("Gamma", values.upper_gamma, &w.upper_gamma, &|s| nv.dominating(s) && nv.irredundant(s))?;
    check("IR", values.upper_ir, &w.upper_ir, &|s| nv.irredundant(s))?;
    match (values.gamma_gr, &w.gamma_gr) {
        (None, None) => {}
        (Some(k), Some(seq)) if seq.len() == k && nv.legal(seq) => {}
        _ => return Err("gamma_gr witness is not a legal sequence of the stated length".into()),
    }
    if let Some((a, x, b, y)) = values.chain_violation() {
        return Err(format!("chain violated: {a} = {x} > {b} = {y}"));
    }
    Ok(())
}

/// A holding verdict needs no witness; a failing one must carry a witness
/// that violates the property's defining predicate. `values` supplies α and
/// Γ for confirming that quantified sets are optimal.
pub fn revalidate(g: &Graph, verdict: &PropertyVerdict, values: &ChainValues) -> bool {
    match (&verdict.witness, verdict.holds) {
        (None, true) => true,
        (Some(w), false) => witness_violates(&Naive::new(g), w, values),
        _ => false,
    }
}

fn witness_violates(g: &Naive, witness: &Witness, values: &ChainValues) -> bool {
    let alpha_ok = |a: &VertexSet| g.is_alpha_set(&Naive::set(a), values.alpha);
    let gamma_ok = |d: &VertexSet| g.is_gamma_set(&Naive::set(d), values.upper_gamma);
    match witness {
        Witness::SmallNeighborhood { alpha_set, w, neighborhood } => {
            let (a, w) = (Naive::set(alpha_set), Naive::set(w));
            alpha_ok(alpha_set)
                && !w.is_empty()
                && w.is_disjoint(&a)
                && w.len() < a.len()
                && g.open(&w) == Naive::set(neighborhood)
                && g.open(&w).len() <= w.len()
        }
        Witness::Escape { alpha_set, w, u, escaping } => {
            let (a, w, u) = (Naive::set(alpha_set), Naive::set(w), Naive::set(u));
            let m: Set = g.open(&w).intersection(&a).copied().collect();
            let rest: Set = m.difference(&u).copied().collect();
            alpha_ok(alpha_set)
                && !w.is_empty()
                && w.is_disjoint(&a)
                && u.is_subset(&m)
                && u.len() == w.len()
                && g.open(&u).contains(escaping)
                && !g.open(&rest).contains(escaping)
        }
        Witness::Deficit { alpha_set, sequence, w, deficit } => {
            let a = Naive::set(alpha_set);
            let s: Set = sequence.iter().copied().collect();
            let outside: Set = s.difference(&a).copied().collect();
            let d: Set = g.open(&outside).intersection(&a).filter(|v| !s.contains(v)).copied().collect();
            alpha_ok(alpha_set)
                && g.legal(sequence)
                && outside == Naive::set(w)
                && d == Naive::set(deficit)
                && d.len() < outside.len()
        }
        Witness::NonClique { gamma_set, member, pair } => {
            let d = Naive::set(gamma_set);
            let p = g.private(*member, &d);
            gamma_ok(gamma_set)
                && d.contains(member)
                && pair[0] != pair[1]
                && p.contains(&pair[0])
                && p.contains(&pair[1])
                && !g.adj[pair[0]][pair[1]]
        }
        Witness::LargePrivate { gamma_set, member, private } => {
            let d = Naive::set(gamma_set);
            let p = g.private(*member, &d);
            gamma_ok(gamma_set) && d.contains(member) && p == Naive::set(private) && p.len() > 2
        }
        Witness::Uncovered { gamma_set, vertex } => {
            let d = Naive::set(gamma_set);
            *vertex < g.n && gamma_ok(gamma_set) && g.covers(&d, *vertex).is_empty()
        }
        Witness::FewCovers { gamma_set, vertex, covers } => {
            let d = Naive::set(gamma_set);
            let c = g.covers(&d, *vertex);
            *vertex < g.n && gamma_ok(gamma_set) && !d.contains(vertex) && c == Naive::set(covers) && c.len() < 2
        }
        Witness::MissingOwnIndex { gamma_set, vertex, member } => {
            let d = Naive::set(gamma_set);
            *vertex < g.n
                && gamma_ok(gamma_set)
                && d.contains(member)
                && !d.contains(vertex)
                && g.private(*member, &d).contains(vertex)
                && !g.covers(&d, *vertex).contains(member)
        }
        Witness::NoAdjacentIndex { gamma_set, vertex, member, other } => {
            let d = Naive::set(gamma_set);
            if *vertex >= g.n || !gamma_ok(gamma_set) || d.contains(vertex) || member == other {
                return false;
            }
            let c = g.covers(&d, *vertex);
            g.private(*member, &d).contains(vertex) && c.contains(other) && c.iter().all(|&k| !g.adj[*other][k])
        }
        Witness::NonAdjacentCover { gamma_set, vertex, member } => {
            let d = Naive::set(gamma_set);
            if *vertex >= g.n || !gamma_ok(gamma_set) || d.contains(vertex) || !d.contains(member) {
                return false;
            }
            let in_x = d.iter().all(|&x| !g.private(x, &d).contains(vertex));
            let c = g.covers(&d, *vertex);
            in_x && c.contains(member) && c.iter().all(|&k| !g.adj[*member][k]) && !g.adj[*vertex][*member]
        }
        Witness::LongSequenceInX { gamma_set, x, sequence } => {
            let d = Naive::set(gamma_set);
            let private: Set = d.iter().flat_map(|&m| g.private(m, &d)).collect();
            let expected: Set = g.all().into_iter().filter(|v| !d.contains(v) && !private.contains(v)).collect();
            let x = Naive::set(x);
            // Legality inside G⟨X⟩: neighborhoods restricted to X.
            let mut dominated = Set::new();
            let mut used = Set::new();
            let legal_in_x = sequence.iter().all(|&v| {
                if !x.contains(&v) || !used.insert(v) {
                    return false;
                }
                let nv: Set = g.closed_of(v).intersection(&x).copied().collect();
                let fresh: Vec<usize> = nv.into_iter().filter(|u| !dominated.contains(u)).collect();
                let ok = !fresh.is_empty();
                dominated.extend(fresh);
                ok
            });
            gamma_ok(gamma_set) && x == expected && legal_in_x && sequence.len() > d.len()
        }
        Witness::FewAlphaNeighbors { alpha_set, vertex, neighbors } => {
            let a = Naive::set(alpha_set);
            let nb: Set = g.open(&Set::from([*vertex])).intersection(&a).copied().collect();
            *vertex < g.n && alpha_ok(alpha_set) && !a.contains(vertex) && nb == Naive::set(neighbors) && nb.len() < 2
        }
        Witness::NotBipartite => g.odd_cycle(),
        Witness::DependentComplement { alpha_set, pair } => {
            let a = Naive::set(alpha_set);
            alpha_ok(alpha_set)
                && pair.iter().all(|v| *v < g.n && !a.contains(v))
                && g.adj[pair[0]][pair[1]]
        }
        Witness::SeveralAlphaSets { alpha_sets } => {
            alpha_sets[0] != alpha_sets[1]
                && alpha_sets.iter().all(&alpha_ok)
                && 2 * alpha_sets[0].len() != g.n
        }
        Witness::SingleCommonNeighbor { alpha_set, pair, common } => {
            let a = Naive::set(alpha_set);
            if !alpha_ok(alpha_set) || pair[0] == pair[1] || pair.iter().any(|v| *v >= g.n || a.contains(v)) {
                return false;
            }
            let shared: Set = a.iter().copied().filter(|&z| g.adj[pair[0]][z] && g.adj[pair[1]][z]).collect();
            shared == Set::from([*common])
        }
        Witness::SharedPair { alpha_set, pair, neighbors } => {
            let a = Naive::set(alpha_set);
            if !alpha_ok(alpha_set) || pair[0] == pair[1] || pair.iter().any(|v| *v >= g.n || a.contains(v)) {
                return false;
            }
            let nb = |x: usize| -> Set { a.iter().copied().filter(|&z| g.adj[x][z]).collect() };
            let target = Set::from(*neighbors);
            target.len() == 2 && nb(pair[0]) == target && nb(pair[1]) == target
        }
        Witness::IdentifiedPair { independent_set, pair, alpha, gamma_gr } => {
            let i = Naive::set(independent_set);
            let [x, y] = *pair;
            if !alpha_ok(independent_set) || x == y || i.contains(&x) || i.contains(&y) || g.n > 17 {
                return false;
            }
            let keep: Vec<usize> = (0..g.n).filter(|&v| v != x && v != y).collect();
            let m = keep.len() + 1;
            let mut adj = vec![vec![false; m]; m];
            for (a, &u) in keep.iter().enumerate() {
                for (b, &v) in keep.iter().enumerate() {
                    adj[a][b] = g.adj[u][v];
                }
                let to_w = g.adj[u][x] || g.adj[u][y];
                adj[a][m - 1] = to_w;
                adj[m - 1][a] = to_w;
            }
            let h = Naive { n: m, adj };
            h.alpha() == *alpha && h.longest_legal() == *gamma_gr && alpha != gamma_gr
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classcheck::{self, Property};
    use crate::families::{crossed_prism, cycle, gap_family, hypercube, path};
    use crate::invariants::domination_chain_report;
    use crate::limits::Limits;

    #[test]
    fn reports_certify() {
        for g in [cycle(5).unwrap(), gap_family(3).unwrap(), hypercube(3).unwrap()] {
            let r = domination_chain_report(&g, &Limits::default()).unwrap();
            certify_report(&g, &r).unwrap();
        }
    }

    #[test]
    fn tampered_report_is_rejected() {
        let g = cycle(5).unwrap();
        let mut r = domination_chain_report(&g, &Limits::default()).unwrap();
        r.witnesses.gamma = Some(VertexSet::from([0, 1]));
        assert!(certify_report(&g, &r).is_err());
        let mut r = domination_chain_report(&g, &Limits::default()).unwrap();
        r.witnesses.gamma_gr = Some(vec![0, 2, 1]);
        assert!(certify_report(&g, &r).is_err());
    }

    #[test]
    fn verdict_witnesses_revalidate() {
        let lim = Limits::default();
        for g in [path(4).unwrap(), gap_family(2).unwrap(), crossed_prism(6).unwrap(), hypercube(3).unwrap()] {
            let values = domination_chain_report(&g, &lim).unwrap().invariants;
            let mut verdicts = classcheck::necessary_condition_diagnostics(&g, &lim).unwrap();
            verdicts.push(classcheck::check_property_u(&g, &lim).unwrap());
            for p in [Property::H, Property::T, Property::TStar] {
                verdicts.push(classcheck::check_alpha_set_property(&g, p, &lim).unwrap());
            }
            for v in &verdicts {
                assert!(revalidate(&g, v, &values), "{v:?}");
            }
        }
    }

    #[test]
    fn forged_witness_is_rejected() {
        let lim = Limits::default();
        let g = crossed_prism(6).unwrap();
        let values = domination_chain_report(&g, &lim).unwrap().invariants;
        let mut v = classcheck::check_property_u(&g, &lim).unwrap();
        assert!(revalidate(&g, &v, &values));
        if let Some(Witness::Deficit { w, .. }) = &mut v.witness {
            *w = VertexSet::new();
        }
        assert!(!revalidate(&g, &v, &values));
        v.witness = None;
        assert!(!revalidate(&g, &v, &values));
    }

    #[test]
    fn ordered_oracle_small_cases() {
        let sets = achievable_sets_by_orders(&path(3).unwrap());
        assert_eq!(sets.len(), 6);
        assert!(achievable_sets_by_orders(&cycle(4).unwrap()).iter().all(|s| s.len() <= 2));
    }
}
