//! Brute-force reference checks used by the test and acceptance suites.
//!
//! Nothing here is on a hot path. These routines deliberately avoid the
//! machinery they are used to check: the minor oracle never looks for
//! Hamilton cycles and the double-star oracle never uses the counting
//! criterion.

use std::collections::HashMap;

use crate::canon::{canonical_form, CanonicalLabel};
use crate::graph::{Graph, VertexSet};
use crate::subgraph::contains_subgraph;

fn k4() -> Graph {
    Graph::complete(4)
}

fn k23() -> Graph {
    Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).expect("static graph")
}

/// Contracts edge `uv`, merging `v` into `u`; vertices above `v` shift down.
pub fn contract(g: &Graph, u: usize, v: usize) -> Graph {
    let n = g.order();
    let relabel = |w: usize| if w > v { w - 1 } else { w };
    let mut h = Graph::empty(n - 1);
    for (a, b) in g.edges() {
        let a = if a == v { u } else { a };
        let b = if b == v { u } else { b };
        if a != b {
            h.add_edge(relabel(a), relabel(b));
        }
    }
    h
}

/// Memoized search for a K4 or K_{2,3} minor.
///
/// A graph has `H` as a minor iff `H` is a subgraph of some graph obtained
/// from it by edge contractions, so the search explores contractions only
/// and memoizes on isomorphism classes.
#[derive(Default)]
pub struct MinorOracle {
    memo: HashMap<CanonicalLabel, bool>,
}

impl MinorOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn has_forbidden_minor(&mut self, g: &Graph) -> bool {
        if g.order() < 4 {
            return false;
        }
        let key = canonical_form(g);
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let found = contains_subgraph(g, &k4()).is_some()
            || contains_subgraph(g, &k23()).is_some()
            || g.edges().into_iter().any(|(u, v)| self.has_forbidden_minor(&contract(g, u, v)));
        self.memo.insert(key, found);
        found
    }

    /// Outerplanar iff no K4 and no K_{2,3} minor.
    pub fn is_outerplanar(&mut self, g: &Graph) -> bool {
        !self.has_forbidden_minor(g)
    }
}

/// Decides whether edge `uv` hosts `S_{p,q}` with `u` as the `p`-side center
/// by trying every pair of leaf sets.
pub fn brute_edge_hosts(g: &Graph, u: usize, v: usize, p: usize, q: usize) -> bool {
    let xs = g.neighbors(u).difference(VertexSet::singleton(v));
    let ys = g.neighbors(v).difference(VertexSet::singleton(u));
    subsets_of_size(xs, p).into_iter().any(|x| subsets_of_size(ys.difference(x), q).into_iter().next().is_some())
}

/// All subsets of `s` with exactly `k` elements.
pub fn subsets_of_size(s: VertexSet, k: usize) -> Vec<VertexSet> {
    let items: Vec<usize> = s.iter().collect();
    let mut out = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
        if cur.len() == k {
            out.push(cur);
            return;
        }
        for i in start..items.len() {
            let mut next = cur;
            next.insert(items[i]);
            rec(items, k, i + 1, next, out);
        }
    }
    rec(&items, k, 0, VertexSet::EMPTY, &mut out);
    out
}

/// Every labeled graph on `n` vertices, in edge-bitmask order. Only for
/// small `n`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "all_graphs is exponential in n^2");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |bits| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).expect("pairs are in range")
    })
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Isomorphism by trying every relabeling.
pub fn brute_isomorphic(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && perms.iter().any(|p| &a.permuted(p) == b)
}

/// Representatives of the isomorphism classes of `graphs`, by exhaustive
/// permutation checks.
pub fn brute_dedupe(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    let mut perms: Option<Vec<Vec<usize>>> = None;
    for g in graphs {
        let perms = perms.get_or_insert_with(|| permutations(g.order()));
        if !reps.iter().any(|r| brute_isomorphic(r, &g, perms)) {
            reps.push(g);
        }
    }
    reps
}

/// Every injective map of the pattern into `g` is tried.
pub fn brute_contains_subgraph(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.order();
    let n = g.order();
    if k > n {
        return false;
    }
    let edges = pattern.edges();
    let mut map = vec![0usize; k];
    fn rec(g: &Graph, edges: &[(usize, usize)], map: &mut [usize], depth: usize, used: VertexSet) -> bool {
        if depth == map.len() {
            return edges.iter().all(|&(a, b)| g.has_edge(map[a], map[b]));
        }
        for v in g.vertices().difference(used) {
            map[depth] = v;
            let mut u = used;
            u.insert(v);
            if rec(g, edges, map, depth + 1, u) {
                return true;
            }
        }
        false
    }
    rec(g, &edges, &mut map, 0, VertexSet::EMPTY)
}
