//! Generic (non-induced) subgraph containment by backtracking.
//!
//! This is an oracle and test utility. Pattern vertices are matched in an
//! order that keeps each new vertex attached to already matched ones, and a
//! host candidate must have at least the pattern degree and be adjacent to
//! the images of all matched pattern neighbors.

use crate::graph::{Graph, VertexSet};

fn matching_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.order();
    let mut order = Vec::with_capacity(k);
    let mut placed = VertexSet::EMPTY;
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (pattern.neighbors(v).intersection(placed).len(), pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed.insert(next);
        order.push(next);
    }
    order
}

fn extend(
    g: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    let mut candidates = g.vertices().difference(*used);
    for &earlier in &order[..depth] {
        if pattern.has_edge(pv, earlier) {
            candidates = candidates.intersection(g.neighbors(map[earlier]));
        }
    }
    let need = pattern.degree(pv);
    for hv in candidates {
        if g.degree(hv) < need {
            continue;
        }
        map[pv] = hv;
        used.insert(hv);
        if extend(g, pattern, order, depth + 1, map, used) {
            return true;
        }
        used.remove(hv);
    }
    false
}

/// Finds an injective map `m` from pattern vertices to `g` vertices such that
/// every pattern edge `ab` maps to an edge `m[a] m[b]` of `g`.
pub fn contains_subgraph(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.order() > g.order() || pattern.size() > g.size() {
        return None;
    }
    let order = matching_order(pattern);
    let mut map = vec![usize::MAX; pattern.order()];
    let mut used = VertexSet::EMPTY;
    extend(g, pattern, &order, 0, &mut map, &mut used).then_some(map)
}

/// Checks that `map` embeds `pattern` into `g`.
pub fn is_embedding(g: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.order() {
        return false;
    }
    let images: VertexSet = map.iter().copied().filter(|&v| v < g.order()).collect();
    images.len() == map.len() && pattern.edges().iter().all(|&(a, b)| g.has_edge(map[a], map[b]))
}
