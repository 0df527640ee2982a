//! Structural claims about F and F_α on random graphs beyond the exhaustive
//! range, with chain values taken from the bitmask oracle.

mod common;

use common::Oracle;
use domchain::classcheck::{
    check_alpha_set_property, check_property_u, necessary_condition_diagnostics, verify_vertex_identification,
    Property, F_ALPHA_CONDITIONS, F_CONDITIONS,
};
use domchain::families::{cartesian_product, complete, join, path};
use domchain::grundy::{enumerate_achievable_sets, is_commutative, legal_order};
use domchain::invariants::enumerate_maximum_independent_sets;
use domchain::{Graph, Limits};
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

/// Random connected graph: a random spanning tree plus random extra edges.
fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1));
        let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (parents, extra, 0u32..4).prop_map(move |(parents, extra, density)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(k, p)| (p.index(k + 1), k + 1)).collect();
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            // Thin the extra edges so sparse graphs show up as often as dense ones.
            let mut keep = 0u32;
            for (e, b) in pairs.zip(extra) {
                keep = keep.wrapping_add(1);
                if b && keep % 4 < density {
                    edges.push(e);
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn property_u_iff_alpha_equals_grundy(g in connected_graph(1, 9)) {
        let o = Oracle::new(&g);
        prop_assert_eq!(check_property_u(&g, &lim()).unwrap().holds, o.alpha() == o.grundy());
    }

    #[test]
    fn upper_irredundance_equal_to_grundy_forces_f(g in connected_graph(1, 8)) {
        let o = Oracle::new(&g);
        let chain = o.chain_without_grundy();
        if o.twin_free() && chain[5] == o.grundy() {
            prop_assert_eq!(chain[4], chain[5]);
        }
    }

    #[test]
    fn members_meet_necessary_conditions(g in connected_graph(1, 8)) {
        let (f, f_alpha) = Oracle::new(&g).classes();
        if f {
            for d in necessary_condition_diagnostics(&g, &lim()).unwrap() {
                let relevant = F_CONDITIONS.contains(&d.property)
                    || (f_alpha && F_ALPHA_CONDITIONS.contains(&d.property));
                prop_assert!(!(relevant && d.is_violation()), "{:?}", d);
            }
        }
    }

    #[test]
    fn triangle_free_f_alpha_members_are_bipartite(g in connected_graph(3, 9)) {
        let o = Oracle::new(&g);
        if g.is_triangle_free() && o.classes().1 {
            prop_assert!(o.bipartite());
            let sets = o.alpha_sets();
            let full = (1u32 << g.n()) - 1;
            prop_assert!(sets.iter().all(|&a| o.independent(full & !a)));
            prop_assert!(2 * o.alpha() == g.n() || sets.len() == 1);
            for a in enumerate_maximum_independent_sets(&g, &lim()).unwrap() {
                prop_assert!(domchain::classcheck::check_property_t(&g, &a, &lim()).unwrap().holds);
                prop_assert!(domchain::classcheck::check_property_h(&g, &a, &lim()).unwrap().holds);
            }
        }
    }

    #[test]
    fn h_and_t_star_suffice_for_bipartite_graphs(g in connected_graph(2, 9)) {
        let o = Oracle::new(&g);
        let full = (1u32 << g.n()) - 1;
        if o.bipartite() && o.alpha_sets().iter().all(|&a| o.independent(full & !a)) {
            let h = check_alpha_set_property(&g, Property::H, &lim()).unwrap().holds;
            let t_star = check_alpha_set_property(&g, Property::TStar, &lim()).unwrap().holds;
            if h && t_star {
                prop_assert_eq!(o.alpha(), o.grundy());
            }
        }
    }

    #[test]
    fn identification_keeps_f_alpha_balance(g in connected_graph(2, 7)) {
        if Oracle::new(&g).classes().1 {
            for i in enumerate_maximum_independent_sets(&g, &lim()).unwrap() {
                prop_assert!(verify_vertex_identification(&g, &i, &lim()).unwrap().holds);
            }
        }
    }

    #[test]
    fn joins_of_f_members_stay_in_f(g in connected_graph(1, 5), h in connected_graph(1, 5)) {
        let (og, oh) = (Oracle::new(&g), Oracle::new(&h));
        if og.twin_free() && oh.twin_free() && og.classes().0 && oh.classes().0 {
            let j = Oracle::new(&join(&g, &h).unwrap());
            prop_assert_eq!(j.upper_gamma(), j.grundy());
        }
    }

    #[test]
    fn irredundant_achievable_sets_commute(g in connected_graph(1, 7)) {
        for t in enumerate_achievable_sets(&g, &lim()).unwrap() {
            if t.len() <= 6 && g.is_irredundant(&t) {
                let seq = legal_order(&g, &t).unwrap().unwrap();
                prop_assert!(is_commutative(&g, &seq, &lim()).unwrap());
            }
        }
    }
}

#[test]
fn product_bound_with_nontrivial_factors_up_to_three() {
    let factors = [complete(2).unwrap(), path(3).unwrap(), complete(3).unwrap()];
    for g in &factors {
        for h in &factors {
            let (og, oh) = (Oracle::new(g), Oracle::new(h));
            let p = Oracle::new(&cartesian_product(g, h).unwrap());
            assert!(p.grundy() >= (og.grundy() * h.n()).max(oh.grundy() * g.n()));
            if p.classes().1 {
                assert!(og.classes().1 && oh.classes().1);
                assert_eq!(og.alpha() * h.n(), oh.alpha() * g.n());
            }
        }
    }
}

/// The product bound read literally fails once a factor is `K_1`, and also
/// for some twin-free factors of order four.
#[test]
fn product_bound_counterexamples() {
    let k1 = path(1).unwrap();
    let p3 = path(3).unwrap();
    let k1p3 = Oracle::new(&cartesian_product(&k1, &p3).unwrap());
    assert_eq!(k1p3.grundy(), 2);
    assert!(k1p3.grundy() < Oracle::new(&k1).grundy() * p3.n());
    assert!(k1p3.classes().1, "K_1 x P_3 = P_3 lies in F_alpha");

    let star = domchain::families::star(3).unwrap();
    let ss = Oracle::new(&cartesian_product(&star, &star).unwrap());
    assert_eq!(Oracle::new(&star).grundy(), 3);
    assert_eq!(ss.grundy(), 11);
}
