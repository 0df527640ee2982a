//! Brute-force isomorphism for small graphs.

use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

/// Returns a bijection `map` with `uv ∈ E(g) ⟺ map[u]map[v] ∈ E(h)`, or
/// `None`. Vertices of `g` are assigned in index order and images are tried in
/// ascending order, so the witness is the lexicographically least one.
pub fn is_isomorphic(g: &Graph, h: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>> {
    Limits::check("isomorphism", g.n().max(h.n()), limits.isomorphism_max_n)?;
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    let (deg_g, deg_h) = (dg.clone(), dh.clone());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(None);
    }
    let mut map = Vec::with_capacity(g.n());
    let found = extend(g, h, &deg_g, &deg_h, &mut map, VertexSet::new());
    Ok(found.then_some(map))
}

fn extend(
    g: &Graph,
    h: &Graph,
    deg_g: &[usize],
    deg_h: &[usize],
    map: &mut Vec<usize>,
    used: VertexSet,
) -> bool {
    let v = map.len();
    if v == g.n() {
        return true;
    }
    for w in h.vertices() - used {
        if deg_h[w] != deg_g[v] {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map.push(w);
        if extend(g, h, deg_g, deg_h, map, used.with(w)) {
            return true;
        }
        map.pop();
    }
    false
}
