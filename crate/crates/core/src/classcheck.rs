//! Membership in the classes `F` (twin-free, connected, `Γ = γ_gr`) and
//! `F_α` (the members with `α = γ_gr`), the quantified Properties H, T, T*
//! and U, the Γ-set partition conditions, and the other necessary conditions.
//!
//! Every failed verdict carries a [`Witness`] holding the quantified objects
//! that violate it; [`crate::certify`] re-checks those independently.

use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::identify_vertices;
use crate::graph::Graph;
use crate::grundy;
use crate::invariants::{self, enumerate_maximum_independent_sets, enumerate_upper_domination_sets};
use crate::limits::Limits;
use crate::vertex_set::{for_each_k_subset, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Property {
    H,
    T,
    #[serde(rename = "Tstar")]
    TStar,
    U,
    P8i,
    P8ii,
    P8iii,
    P8iv,
    /// Private neighborhoods of a Γ-set induce cliques.
    PnClique,
    /// Triangle-free members have private neighborhoods of size at most 2.
    PnAtMost2,
    /// Every vertex's closed neighborhood contains some private neighborhood.
    PnInNbhd,
    /// Every vertex outside a Γ-set contains two private neighborhoods.
    TwoPn,
    /// Every vertex outside an α-set has two neighbors in it.
    AtLeast2,
    /// No two vertices outside an α-set share exactly one neighbor in it.
    PropP,
    /// No two vertices outside an α-set have the same two neighbors in it.
    Pairs2Nbrs,
    /// Triangle-free members are bipartite with `α = n/2` or a unique α-set,
    /// and every α-set has an independent complement.
    Bipartite13,
    /// Identifying two vertices outside a maximum independent set keeps
    /// `α = γ_gr`.
    VertexIdentification,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::H => "H",
            Property::T => "T",
            Property::TStar => "Tstar",
            Property::U => "U",
            Property::P8i => "P8i",
            Property::P8ii => "P8ii",
            Property::P8iii => "P8iii",
            Property::P8iv => "P8iv",
            Property::PnClique => "PnClique",
            Property::PnAtMost2 => "PnAtMost2",
            Property::PnInNbhd => "PnInNbhd",
            Property::TwoPn => "TwoPn",
            Property::AtLeast2 => "AtLeast2",
            Property::PropP => "PropP",
            Property::Pairs2Nbrs => "Pairs2Nbrs",
            Property::Bipartite13 => "Bipartite13",
            Property::VertexIdentification => "VertexIdentification",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The objects that make a property fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `W ⊆ V − A`, `|W| < |A|`, with `|N(W)| ≤ |W|`.
    SmallNeighborhood { alpha_set: VertexSet, w: VertexSet, neighborhood: VertexSet },
    /// `U ⊆ N(W) ∩ A`, `|U| = |W|`, and `escaping ∈ N(U) − N((N(W) ∩ A) − U)`.
    Escape { alpha_set: VertexSet, w: VertexSet, u: VertexSet, escaping: usize },
    /// A legal sequence with `W = Ŝ − A` and `deficit = (N(W) ∩ A) − Ŝ`,
    /// `|deficit| < |W|`.
    Deficit { alpha_set: VertexSet, sequence: Vec<usize>, w: VertexSet, deficit: VertexSet },
    /// Two nonadjacent vertices of `pn[member, D]`.
    NonClique { gamma_set: VertexSet, member: usize, pair: [usize; 2] },
    LargePrivate { gamma_set: VertexSet, member: usize, private: VertexSet },
    /// No member of `D` has its private neighborhood inside `N[vertex]`.
    Uncovered { gamma_set: VertexSet, vertex: usize },
    /// `covers = I_vertex`, the members whose private neighborhoods lie in
    /// `N[vertex]`, has fewer than two elements.
    FewCovers { gamma_set: VertexSet, vertex: usize, covers: VertexSet },
    /// `vertex ∈ pn[member, D]` but `pn[member, D] ⊄ N[vertex]`.
    MissingOwnIndex { gamma_set: VertexSet, vertex: usize, member: usize },
    /// `vertex ∈ pn[member, D]`, `other ∈ I_vertex − {member}`, and `other`
    /// has no neighbor among the members indexed by `I_vertex`.
    NoAdjacentIndex { gamma_set: VertexSet, vertex: usize, member: usize, other: usize },
    /// `vertex ∈ X`, `member ∈ I_vertex` is adjacent to no member of
    /// `I_vertex`, and `vertex member ∉ E`.
    NonAdjacentCover { gamma_set: VertexSet, vertex: usize, member: usize },
    /// A legal sequence of `G⟨X⟩` longer than `|D|`, in original labels.
    LongSequenceInX { gamma_set: VertexSet, x: VertexSet, sequence: Vec<usize> },
    FewAlphaNeighbors { alpha_set: VertexSet, vertex: usize, neighbors: VertexSet },
    NotBipartite,
    DependentComplement { alpha_set: VertexSet, pair: [usize; 2] },
    SeveralAlphaSets { alpha_sets: [VertexSet; 2] },
    SingleCommonNeighbor { alpha_set: VertexSet, pair: [usize; 2], common: usize },
    SharedPair { alpha_set: VertexSet, pair: [usize; 2], neighbors: [usize; 2] },
    /// `α(G_xy) ≠ γ_gr(G_xy)` for the merged pair.
    IdentifiedPair { independent_set: VertexSet, pair: [usize; 2], alpha: usize, gamma_gr: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub property: Property,
    pub holds: bool,
    /// `false` when the structural hypotheses of the underlying result fail
    /// (order, bipartiteness, twin-freeness, ...). Such verdicts are not
    /// evaluated and report `holds = true`.
    pub applicable: bool,
    pub witness: Option<Witness>,
}

impl PropertyVerdict {
    fn from_witness(property: Property, witness: Option<Witness>) -> Self {
        PropertyVerdict {
            property,
            holds: witness.is_none(),
            applicable: true,
            witness,
        }
    }

    fn not_applicable(property: Property) -> Self {
        PropertyVerdict {
            property,
            holds: true,
            applicable: true,
            witness: None,
        }
        .with_applicable(false)
    }

    fn with_applicable(mut self, applicable: bool) -> Self {
        self.applicable = applicable;
        self
    }

    /// An applicable verdict that failed.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Runs `check` over every set in `family` and keeps the first witness.
fn first_witness(family: &[VertexSet], mut check: impl FnMut(&VertexSet) -> Option<Witness>) -> Option<Witness> {
    family.iter().find_map(&mut check)
}

/// Class-membership diagnostics: the values and preconditions involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub connected: bool,
    /// First twin pair, if any.
    pub twins: Option<[usize; 2]>,
    #[serde(rename = "Gamma")]
    pub upper_gamma: usize,
    pub alpha: Option<usize>,
    pub gamma_gr: usize,
    /// The failing precondition or the unequal values, when not a member.
    pub reason: Option<String>,
}

impl Membership {
    pub fn twin_free(&self) -> bool {
        self.twins.is_none()
    }
}

/// `K_1` and `K_2` are admitted although `K_2` has twins.
fn twins_matter(g: &Graph) -> Option<[usize; 2]> {
    if g.n() <= 2 {
        return None;
    }
    g.find_twins().first().map(|&(u, v)| [u, v])
}

fn membership(g: &Graph, limits: &Limits, with_alpha: bool) -> Result<Membership> {
    let connected = g.is_connected();
    let twins = twins_matter(g);
    let (upper_gamma, _) = invariants::upper_domination(g, limits)?;
    let (gamma_gr, _) = grundy::grundy_domination_number(g, limits)?;
    let alpha = if with_alpha {
        Some(invariants::independence_number(g, limits)?.0)
    } else {
        None
    };
    let reason = if !connected {
        Some("not connected".to_string())
    } else if let Some([u, v]) = twins {
        Some(format!("vertices {u} and {v} are twins"))
    } else if upper_gamma != gamma_gr {
        Some(format!("Gamma = {upper_gamma} != {gamma_gr} = gamma_gr"))
    } else {
        match alpha {
            Some(a) if a != gamma_gr => Some(format!("alpha = {a} != {gamma_gr} = gamma_gr")),
            _ => None,
        }
    };
    Ok(Membership {
        member: reason.is_none(),
        connected,
        twins,
        upper_gamma,
        alpha,
        gamma_gr,
        reason,
    })
}

pub fn in_class_f(g: &Graph, limits: &Limits) -> Result<Membership> {
    membership(g, limits, false)
}

/// `G ∈ F` and `α = γ_gr`. Since `α ≤ Γ ≤ γ_gr`, the second condition alone
/// implies `Γ = γ_gr`; the result is cross-checked against that.
pub fn in_class_f_alpha(g: &Graph, limits: &Limits) -> Result<Membership> {
    let m = membership(g, limits, true)?;
    if m.alpha == Some(m.gamma_gr) && m.upper_gamma != m.gamma_gr {
        return Err(Error::Consistency(format!(
            "alpha = gamma_gr = {} but Gamma = {}",
            m.gamma_gr, m.upper_gamma
        )));
    }
    Ok(m)
}

fn require_alpha_set(g: &Graph, a: &VertexSet, limits: &Limits) -> Result<()> {
    g.check_set(a)?;
    let (alpha, _) = invariants::independence_number(g, limits)?;
    if !g.is_independent(a) || a.len() != alpha {
        return Err(Error::input(format!("{a} is not a maximum independent set (alpha = {alpha})")));
    }
    Ok(())
}

fn property_h_on(g: &Graph, a: &VertexSet) -> Option<Witness> {
    let outside = g.vertices() - *a;
    let mut found = None;
    for k in 1..a.len().min(outside.len() + 1) {
        for_each_k_subset(outside, k, |w| {
            let nw = g.open_neighborhood_of_set(&w);
            if nw.len() < w.len() + 1 {
                found = Some(Witness::SmallNeighborhood {
                    alpha_set: *a,
                    w,
                    neighborhood: nw,
                });
                return false;
            }
            true
        });
        if found.is_some() {
            break;
        }
    }
    found
}

fn property_t_on(g: &Graph, a: &VertexSet) -> Option<Witness> {
    for w in g.vertices() - *a {
        let m = g.neighbors(w) & *a;
        for u in m {
            let cover = g.open_neighborhood_of_set(&m.without(u));
            if let Some(y) = (g.neighbors(u) - cover).first() {
                return Some(Witness::Escape {
                    alpha_set: *a,
                    w: VertexSet::singleton(w),
                    u: VertexSet::singleton(u),
                    escaping: y,
                });
            }
        }
    }
    None
}

/// W by increasing size; only W with `|N(W) ∩ A| ≥ |W|` admit some U.
fn property_t_star_on(g: &Graph, a: &VertexSet) -> Option<Witness> {
    let outside = g.vertices() - *a;
    let mut found = None;
    for k in 1..=outside.len() {
        for_each_k_subset(outside, k, |w| {
            let m = g.open_neighborhood_of_set(&w) & *a;
            if m.len() < k {
                return true;
            }
            for_each_k_subset(m, k, |u| {
                let cover = g.open_neighborhood_of_set(&(m - u));
                if let Some(y) = (g.open_neighborhood_of_set(&u) - cover).first() {
                    found = Some(Witness::Escape {
                        alpha_set: *a,
                        w,
                        u,
                        escaping: y,
                    });
                    return false;
                }
                true
            })
        });
        if found.is_some() {
            break;
        }
    }
    found
}

pub fn check_property_h(g: &Graph, a: &VertexSet, limits: &Limits) -> Result<PropertyVerdict> {
    require_alpha_set(g, a, limits)?;
    Ok(PropertyVerdict::from_witness(Property::H, property_h_on(g, a)))
}

pub fn check_property_t(g: &Graph, a: &VertexSet, limits: &Limits) -> Result<PropertyVerdict> {
    require_alpha_set(g, a, limits)?;
    Ok(PropertyVerdict::from_witness(Property::T, property_t_on(g, a)))
}

pub fn check_property_t_star(g: &Graph, a: &VertexSet, limits: &Limits) -> Result<PropertyVerdict> {
    require_alpha_set(g, a, limits)?;
    Limits::check("Property T* subsets", (g.vertices() - *a).len(), limits.enumeration_max_n)?;
    Ok(PropertyVerdict::from_witness(Property::TStar, property_t_star_on(g, a)))
}

/// Property U over every α-set and every achievable set. The condition only
/// depends on the underlying set of a sequence, so orders are not enumerated;
/// a witness sequence is rebuilt for the violating set.
pub fn check_property_u(g: &Graph, limits: &Limits) -> Result<PropertyVerdict> {
    let alpha_sets = enumerate_maximum_independent_sets(g, limits)?;
    let mut hit: Option<(VertexSet, VertexSet, VertexSet, VertexSet)> = None;
    grundy::for_each_achievable_set(g, limits, |s| {
        for a in &alpha_sets {
            let w = s - *a;
            if w.is_empty() {
                continue;
            }
            let deficit = (g.open_neighborhood_of_set(&w) & *a) - s;
            if deficit.len() < w.len() {
                hit = Some((*a, s, w, deficit));
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    let witness = match hit {
        None => None,
        Some((alpha_set, s, w, deficit)) => {
            let seq = grundy::legal_order(g, &s)?
                .ok_or_else(|| Error::Consistency(format!("enumerated set {s} has no legal order")))?;
            Some(Witness::Deficit {
                alpha_set,
                sequence: seq.vertices().to_vec(),
                w,
                deficit,
            })
        }
    };
    Ok(PropertyVerdict::from_witness(Property::U, witness))
}

/// Property H, T or T* over every α-set.
pub fn check_alpha_set_property(g: &Graph, property: Property, limits: &Limits) -> Result<PropertyVerdict> {
    let sets = enumerate_maximum_independent_sets(g, limits)?;
    let witness = match property {
        Property::H => first_witness(&sets, |a| property_h_on(g, a)),
        Property::T => first_witness(&sets, |a| property_t_on(g, a)),
        Property::TStar => first_witness(&sets, |a| property_t_star_on(g, a)),
        Property::U => return check_property_u(g, limits),
        other => return Err(Error::input(format!("{other} is not an alpha-set property"))),
    };
    Ok(PropertyVerdict::from_witness(property, witness))
}

/// The partition induced by a Γ-set `D = {x_1, ..., x_n}` (members in
/// ascending order). `P_i = pn[x_i, D]` may contain `x_i` itself, so `P`
/// can meet `D`; `X = V − (D ∪ P)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaPartition {
    pub gamma_set: VertexSet,
    pub members: Vec<usize>,
    /// `P_i`, aligned with `members`.
    pub private: Vec<VertexSet>,
    pub private_union: VertexSet,
    pub x: VertexSet,
    /// `(u, I_u)` for every `u ∈ V − D`, with `I_u` given as the set of
    /// members `x_j` such that `P_j ⊆ N[u]`.
    pub index_sets: Vec<(usize, VertexSet)>,
}

impl GammaPartition {
    fn build(g: &Graph, d: &VertexSet) -> Self {
        let members = d.to_vec();
        let private: Vec<VertexSet> = members.iter().map(|&x| g.pn(x, d)).collect();
        let private_union = private.iter().fold(VertexSet::new(), |acc, p| acc | *p);
        let index_sets = (g.vertices() - *d)
            .iter()
            .map(|u| {
                let covers = members
                    .iter()
                    .zip(&private)
                    .filter(|(_, p)| p.is_subset(&g.closed(u)))
                    .map(|(&x, _)| x)
                    .collect();
                (u, covers)
            })
            .collect();
        GammaPartition {
            gamma_set: *d,
            members,
            private,
            private_union,
            x: g.vertices() - (*d | private_union),
            index_sets,
        }
    }

    /// `I_u` for `u ∉ D`.
    pub fn index_set(&self, u: usize) -> Option<VertexSet> {
        self.index_sets.iter().find(|(v, _)| *v == u).map(|(_, s)| *s)
    }

    /// The member whose private neighborhood contains `v`, if any.
    pub fn owner(&self, v: usize) -> Option<usize> {
        self.members.iter().zip(&self.private).find(|(_, p)| p.contains(v)).map(|(&x, _)| x)
    }
}

pub fn gamma_set_partition(g: &Graph, d: &VertexSet, limits: &Limits) -> Result<GammaPartition> {
    g.check_set(d)?;
    let (upper, _) = invariants::upper_domination(g, limits)?;
    if !g.is_minimal_dominating(d) || d.len() != upper {
        return Err(Error::input(format!("{d} is not a minimal dominating set of size Gamma = {upper}")));
    }
    Ok(GammaPartition::build(g, d))
}

fn prop8_i(part: &GammaPartition) -> Option<Witness> {
    let d = part.gamma_set;
    for &(u, covers) in &part.index_sets {
        if covers.len() < 2 {
            return Some(Witness::FewCovers {
                gamma_set: d,
                vertex: u,
                covers,
            });
        }
        if let Some(owner) = part.owner(u) {
            if !covers.contains(owner) {
                return Some(Witness::MissingOwnIndex {
                    gamma_set: d,
                    vertex: u,
                    member: owner,
                });
            }
        }
    }
    None
}

fn prop8_ii(g: &Graph, part: &GammaPartition) -> Option<Witness> {
    for &(v, covers) in &part.index_sets {
        let Some(owner) = part.owner(v) else { continue };
        for j in covers.without(owner) {
            if !g.neighbors(j).intersects(&covers) {
                return Some(Witness::NoAdjacentIndex {
                    gamma_set: part.gamma_set,
                    vertex: v,
                    member: owner,
                    other: j,
                });
            }
        }
    }
    None
}

fn prop8_iii(g: &Graph, part: &GammaPartition) -> Option<Witness> {
    for w in part.x {
        let covers = part.index_set(w).expect("X lies outside D");
        for &xi in &part.members {
            let isolated_from_covers = !g.neighbors(xi).intersects(&covers);
            if isolated_from_covers && !g.has_edge(w, xi) && covers.contains(xi) {
                return Some(Witness::NonAdjacentCover {
                    gamma_set: part.gamma_set,
                    vertex: w,
                    member: xi,
                });
            }
        }
    }
    None
}

fn prop8_iv(g: &Graph, part: &GammaPartition, limits: &Limits) -> Result<Option<Witness>> {
    if part.x.is_empty() {
        return Ok(None);
    }
    let (sub, map) = g.induced_subgraph(&part.x)?;
    let (k, seq) = grundy::grundy_domination_number(&sub, limits)?;
    Ok((k > part.members.len()).then(|| Witness::LongSequenceInX {
        gamma_set: part.gamma_set,
        x: part.x,
        sequence: seq.vertices().iter().map(|&v| map[v]).collect(),
    }))
}

/// The four partition conditions for one Γ-set. (i) depends on twin-freeness
/// and is marked not applicable on graphs with twins.
pub fn check_prop8_conditions(g: &Graph, part: &GammaPartition, limits: &Limits) -> Result<[PropertyVerdict; 4]> {
    let first = if twins_matter(g).is_some() {
        PropertyVerdict::not_applicable(Property::P8i)
    } else {
        PropertyVerdict::from_witness(Property::P8i, prop8_i(part))
    };
    Ok([
        first,
        PropertyVerdict::from_witness(Property::P8ii, prop8_ii(g, part)),
        PropertyVerdict::from_witness(Property::P8iii, prop8_iii(g, part)),
        PropertyVerdict::from_witness(Property::P8iv, prop8_iv(g, part, limits)?),
    ])
}

/// How many Γ-sets satisfy all four partition conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prop8Summary {
    pub gamma_sets: usize,
    pub passing: usize,
}

impl Prop8Summary {
    pub fn some_pass(&self) -> bool {
        self.passing > 0
    }

    pub fn all_pass(&self) -> bool {
        self.passing == self.gamma_sets
    }
}

pub fn prop8_summary(g: &Graph, limits: &Limits) -> Result<Prop8Summary> {
    let sets = enumerate_upper_domination_sets(g, limits)?;
    let mut passing = 0;
    for d in &sets {
        let part = GammaPartition::build(g, d);
        if check_prop8_conditions(g, &part, limits)?.iter().all(|v| v.holds) {
            passing += 1;
        }
    }
    Ok(Prop8Summary {
        gamma_sets: sets.len(),
        passing,
    })
}

fn pn_clique_on(g: &Graph, d: &VertexSet) -> Option<Witness> {
    for x in d {
        let p = g.pn(x, d);
        for u in p {
            if let Some(v) = (p.above(u) - g.neighbors(u)).first() {
                return Some(Witness::NonClique {
                    gamma_set: *d,
                    member: x,
                    pair: [u, v],
                });
            }
        }
    }
    None
}

fn pn_at_most_2_on(g: &Graph, d: &VertexSet) -> Option<Witness> {
    d.iter().find_map(|x| {
        let p = g.pn(x, d);
        (p.len() > 2).then_some(Witness::LargePrivate {
            gamma_set: *d,
            member: x,
            private: p,
        })
    })
}

fn pn_in_nbhd_on(g: &Graph, d: &VertexSet) -> Option<Witness> {
    let private: Vec<VertexSet> = d.iter().map(|x| g.pn(x, d)).collect();
    g.vertices()
        .iter()
        .find(|&u| !private.iter().any(|p| p.is_subset(&g.closed(u))))
        .map(|u| Witness::Uncovered { gamma_set: *d, vertex: u })
}

fn two_pn_on(g: &Graph, d: &VertexSet) -> Option<Witness> {
    let part = GammaPartition::build(g, d);
    part.index_sets.iter().find(|(_, c)| c.len() < 2).map(|&(u, covers)| Witness::FewCovers {
        gamma_set: *d,
        vertex: u,
        covers,
    })
}

fn at_least_2_on(g: &Graph, a: &VertexSet) -> Option<Witness> {
    (g.vertices() - *a).iter().find_map(|u| {
        let nb = g.neighbors(u) & *a;
        (nb.len() < 2).then_some(Witness::FewAlphaNeighbors {
            alpha_set: *a,
            vertex: u,
            neighbors: nb,
        })
    })
}

fn outside_pairs(g: &Graph, a: &VertexSet) -> impl Iterator<Item = (usize, usize)> {
    let outside = g.vertices() - *a;
    outside.iter().flat_map(move |x| outside.above(x).iter().map(move |y| (x, y)))
}

fn prop_p_on(g: &Graph, a: &VertexSet) -> Option<Witness> {
    outside_pairs(g, a).find_map(|(x, y)| {
        let common = g.neighbors(x) & g.neighbors(y) & *a;
        (common.len() == 1).then(|| Witness::SingleCommonNeighbor {
            alpha_set: *a,
            pair: [x, y],
            common: common.first().expect("one element"),
        })
    })
}

fn pairs_2_nbrs_on(g: &Graph, a: &VertexSet) -> Option<Witness> {
    outside_pairs(g, a).find_map(|(x, y)| {
        let nx = g.neighbors(x) & *a;
        (nx.len() == 2 && nx == (g.neighbors(y) & *a)).then(|| {
            let v = nx.to_vec();
            Witness::SharedPair {
                alpha_set: *a,
                pair: [x, y],
                neighbors: [v[0], v[1]],
            }
        })
    })
}

fn bipartite_13(g: &Graph, alpha_sets: &[VertexSet]) -> Option<Witness> {
    if g.bipartition().is_none() {
        return Some(Witness::NotBipartite);
    }
    for a in alpha_sets {
        let outside = g.vertices() - *a;
        if let Some(x) = outside.iter().find(|&x| g.neighbors(x).intersects(&outside)) {
            let y = (g.neighbors(x) & outside).first().expect("adjacent outside");
            return Some(Witness::DependentComplement {
                alpha_set: *a,
                pair: [x.min(y), x.max(y)],
            });
        }
    }
    let half = alpha_sets.first().is_some_and(|a| 2 * a.len() == g.n());
    if !half && alpha_sets.len() > 1 {
        return Some(Witness::SeveralAlphaSets {
            alpha_sets: [alpha_sets[0], alpha_sets[1]],
        });
    }
    None
}

/// Structural hypotheses of each necessary condition, beyond membership.
struct Hypotheses {
    n: usize,
    connected: bool,
    twin_free: bool,
    bipartite: bool,
    triangle_free: bool,
}

impl Hypotheses {
    fn of(g: &Graph) -> Self {
        Hypotheses {
            n: g.n(),
            connected: g.is_connected(),
            twin_free: g.is_twin_free(),
            bipartite: g.bipartition().is_some(),
            triangle_free: g.is_triangle_free(),
        }
    }

    fn applies(&self, p: Property) -> bool {
        match p {
            Property::PnClique | Property::PnInNbhd => true,
            Property::P8ii | Property::P8iii | Property::P8iv => true,
            Property::PnAtMost2 => self.triangle_free,
            Property::TwoPn | Property::P8i => self.twin_free,
            Property::AtLeast2 => self.n >= 3 && self.twin_free,
            Property::Bipartite13 => self.n >= 3 && self.triangle_free && self.connected,
            Property::H => self.n >= 3 && self.bipartite && self.connected,
            Property::T => self.n >= 3 && self.triangle_free,
            Property::PropP => self.n >= 3 && self.bipartite,
            Property::Pairs2Nbrs => self.n >= 5 && self.bipartite && self.connected,
            Property::TStar | Property::U | Property::VertexIdentification => true,
        }
    }
}

/// Conditions every Γ-set of a member of `F` satisfies.
pub const F_CONDITIONS: [Property; 8] = [
    Property::PnClique,
    Property::PnAtMost2,
    Property::PnInNbhd,
    Property::TwoPn,
    Property::P8i,
    Property::P8ii,
    Property::P8iii,
    Property::P8iv,
];

/// Conditions every α-set of a member of `F_α` satisfies.
pub const F_ALPHA_CONDITIONS: [Property; 6] = [
    Property::AtLeast2,
    Property::Bipartite13,
    Property::H,
    Property::T,
    Property::PropP,
    Property::Pairs2Nbrs,
];

/// Every necessary condition over every Γ-set (for `F`) and every α-set (for
/// `F_α`). A violation certifies non-membership; passing certifies nothing.
pub fn necessary_condition_diagnostics(g: &Graph, limits: &Limits) -> Result<Vec<PropertyVerdict>> {
    let hyp = Hypotheses::of(g);
    let gamma_sets = enumerate_upper_domination_sets(g, limits)?;
    let alpha_sets = enumerate_maximum_independent_sets(g, limits)?;
    let parts: Vec<GammaPartition> = gamma_sets.iter().map(|d| GammaPartition::build(g, d)).collect();
    let mut out = Vec::with_capacity(F_CONDITIONS.len() + F_ALPHA_CONDITIONS.len());
    for p in F_CONDITIONS.into_iter().chain(F_ALPHA_CONDITIONS) {
        if !hyp.applies(p) {
            out.push(PropertyVerdict::not_applicable(p));
            continue;
        }
        let witness = match p {
            Property::PnClique => first_witness(&gamma_sets, |d| pn_clique_on(g, d)),
            Property::PnAtMost2 => first_witness(&gamma_sets, |d| pn_at_most_2_on(g, d)),
            Property::PnInNbhd => first_witness(&gamma_sets, |d| pn_in_nbhd_on(g, d)),
            Property::TwoPn => first_witness(&gamma_sets, |d| two_pn_on(g, d)),
            Property::P8i => parts.iter().find_map(prop8_i),
            Property::P8ii => parts.iter().find_map(|part| prop8_ii(g, part)),
            Property::P8iii => parts.iter().find_map(|part| prop8_iii(g, part)),
            Property::P8iv => {
                let mut hit = None;
                for part in &parts {
                    if let Some(w) = prop8_iv(g, part, limits)? {
                        hit = Some(w);
                        break;
                    }
                }
                hit
            }
            Property::AtLeast2 => first_witness(&alpha_sets, |a| at_least_2_on(g, a)),
            Property::Bipartite13 => bipartite_13(g, &alpha_sets),
            Property::H => first_witness(&alpha_sets, |a| property_h_on(g, a)),
            Property::T => first_witness(&alpha_sets, |a| property_t_on(g, a)),
            Property::PropP => first_witness(&alpha_sets, |a| prop_p_on(g, a)),
            Property::Pairs2Nbrs => first_witness(&alpha_sets, |a| pairs_2_nbrs_on(g, a)),
            _ => unreachable!("not a diagnostic condition"),
        };
        out.push(PropertyVerdict::from_witness(p, witness));
    }
    Ok(out)
}

/// For `G ∈ F_α` and a maximum independent set `I`: every `G_xy` with
/// `x, y ∈ V − I` has `α = γ_gr`.
pub fn verify_vertex_identification(g: &Graph, i: &VertexSet, limits: &Limits) -> Result<PropertyVerdict> {
    let m = in_class_f_alpha(g, limits)?;
    if !m.member {
        return Err(Error::input(format!(
            "graph is not in F_alpha: {}",
            m.reason.unwrap_or_default()
        )));
    }
    require_alpha_set(g, i, limits)?;
    let outside = g.vertices() - *i;
    for x in outside {
        for y in outside.above(x) {
            let h = identify_vertices(g, x, y)?;
            let (alpha, _) = invariants::independence_number(&h, limits)?;
            let (gamma_gr, _) = grundy::grundy_domination_number(&h, limits)?;
            if alpha != gamma_gr {
                return Ok(PropertyVerdict::from_witness(
                    Property::VertexIdentification,
                    Some(Witness::IdentifiedPair {
                        independent_set: *i,
                        pair: [x, y],
                        alpha,
                        gamma_gr,
                    }),
                ));
            }
        }
    }
    Ok(PropertyVerdict::from_witness(Property::VertexIdentification, None))
}
