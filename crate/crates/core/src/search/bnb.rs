//! Maximum `S_{p,q}`-free spanning subgraph of a maximal outerplanar graph.
//!
//! A node fixes some edges as kept and some as removed; the current graph
//! is kept ∪ undecided. If it is free it is the best completion of the
//! node. Otherwise the first copy of the double star found (lowest edge,
//! greedy leaves) must lose one of its edges, so the search branches on the
//! lowest-indexed undecided edge of that copy: remove it, or keep it and
//! continue. A copy made only of kept edges kills the node.
//!
//! The bound is the current edge count. Nodes are cut when the bound is
//! strictly below the shared incumbent, or not above the best value already
//! found for this graph. Because the shared cut is strict, the first
//! depth-first leaf reaching this graph's optimum is reached whenever that
//! optimum is the global one, which keeps witnesses independent of thread
//! timing.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::doublestar::{find_in, DoubleStarSpec};
use crate::graph::{Graph, VertexSet};

struct Node<'a> {
    spec: DoubleStarSpec,
    require_connected: bool,
    edges: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
    shared: &'a AtomicUsize,
    best: Option<(usize, Vec<VertexSet>)>,
    nodes: u64,
}

fn connected(adj: &[VertexSet]) -> bool {
    let n = adj.len();
    if n <= 1 {
        return true;
    }
    let all = VertexSet::full(n);
    let mut seen = VertexSet::singleton(0);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(adj[v]);
        }
        frontier = next.intersection(all).difference(seen);
        seen = seen.union(frontier);
    }
    seen.len() == n
}

impl Node<'_> {
    fn visit(&mut self, adj: &mut Vec<VertexSet>, size: usize, kept: u64) {
        self.nodes += 1;
        if size < self.shared.load(Ordering::Relaxed) {
            return;
        }
        if self.best.as_ref().is_some_and(|(b, _)| size <= *b) {
            return;
        }
        if self.require_connected && !connected(adj) {
            return;
        }
        let Some(w) = find_in(adj, self.spec) else {
            self.best = Some((size, adj.clone()));
            self.shared.fetch_max(size, Ordering::Relaxed);
            return;
        };
        let branch = w
            .edges()
            .into_iter()
            .map(|(a, b)| self.index[a][b])
            .filter(|&e| kept >> e & 1 == 0)
            .min();
        let Some(e) = branch else {
            return;
        };
        let (a, b) = self.edges[e];
        adj[a].remove(b);
        adj[b].remove(a);
        self.visit(adj, size - 1, kept);
        adj[a].insert(b);
        adj[b].insert(a);
        self.visit(adj, size, kept | 1 << e);
    }
}

/// Outcome of a search on one host graph.
#[derive(Clone, Debug)]
pub struct SubgraphOptimum {
    pub value: usize,
    pub witness: Graph,
    pub nodes: u64,
}

/// Largest `S_{p,q}`-free spanning subgraph of `host` (connected when
/// `require_connected`), provided one with at least `shared` edges exists.
/// `shared` is raised to every value found.
pub fn search_host(
    host: &Graph,
    spec: DoubleStarSpec,
    require_connected: bool,
    shared: &AtomicUsize,
) -> Option<SubgraphOptimum> {
    let edges = host.edges();
    assert!(edges.len() <= 64, "edge index is a 64-bit mask");
    let n = host.order();
    let mut index = vec![vec![usize::MAX; n]; n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        index[a][b] = i;
        index[b][a] = i;
    }
    let size = edges.len();
    let mut node = Node { spec, require_connected, edges, index, shared, best: None, nodes: 0 };
    let mut adj = host.adjacency().to_vec();
    node.visit(&mut adj, size, 0);
    let nodes = node.nodes;
    node.best.map(|(value, adj)| SubgraphOptimum {
        value,
        witness: Graph::from_adjacency(adj).expect("subgraph of a valid graph"),
        nodes,
    })
}

/// Maximum number of edges of an `S_{p,q}`-free spanning subgraph of `mop`
/// (connected if required), with one optimal witness. `None` when no such
/// subgraph has at least `lower_bound_hint` edges.
pub fn max_free_subgraph(
    mop: &Graph,
    spec: DoubleStarSpec,
    require_connected: bool,
    lower_bound_hint: usize,
) -> Option<(usize, Graph)> {
    let shared = AtomicUsize::new(lower_bound_hint);
    search_host(mop, spec, require_connected, &shared).map(|o| (o.value, o.witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_Tn, fan_mop};
    use crate::doublestar::is_double_star_free;

    fn spec(p: usize, q: usize) -> DoubleStarSpec {
        DoubleStarSpec::new(p, q).unwrap()
    }

    #[test]
    fn fan_is_already_free() {
        for connected in [false, true] {
            let (v, w) = max_free_subgraph(&fan_mop(5).unwrap(), spec(2, 2), connected, 0).unwrap();
            assert_eq!(v, 7);
            assert_eq!(w, fan_mop(5).unwrap());
        }
    }

    #[test]
    fn tn_keeps_every_edge() {
        let t8 = construct_Tn(8).unwrap();
        let (v, _) = max_free_subgraph(&t8, spec(3, 3), true, 0).unwrap();
        assert_eq!(v, 13);
    }

    #[test]
    fn hexagon_triangulations_respect_h6() {
        for t in crate::search::all_labeled_triangulations(6) {
            let g = t.to_graph();
            let (v, w) = max_free_subgraph(&g, spec(2, 2), true, 0).unwrap();
            assert!(v <= 7);
            assert!(is_double_star_free(&w, spec(2, 2)));
            assert!(w.is_connected());
            assert_eq!(w.size(), v);
        }
    }

    #[test]
    fn hint_above_optimum_gives_none() {
        let g = crate::constructions::construct_On(8).unwrap();
        assert!(max_free_subgraph(&g, spec(2, 2), true, 13).is_none());
    }
}
