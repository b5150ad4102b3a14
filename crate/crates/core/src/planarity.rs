//! Outerplanarity via outer Hamilton cycles.
//!
//! A 2-connected outerplanar graph on at least three vertices has exactly
//! one Hamilton cycle, the boundary of its outer face, and all remaining
//! edges are chords that do not cross with respect to that cycle.
//! Conversely a Hamilton cycle with pairwise non-crossing chords is an
//! outerplane drawing (the convex polygon). So a 2-connected graph is
//! outerplanar iff the first Hamilton cycle found has non-crossing chords,
//! and a graph is outerplanar iff each of its blocks is.

use crate::blocks::{block_decomposition, is_two_connected};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Cyclic vertex order of the outer face of a 2-connected outerplanar graph.
///
/// Normalized to start at the smallest label and continue towards the
/// smaller of its two cycle neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterCycle {
    pub order: Vec<usize>,
}

impl OuterCycle {
    fn normalized(mut order: Vec<usize>) -> Self {
        let k = order.len();
        let start = (0..k).min_by_key(|&i| order[i]).unwrap_or(0);
        order.rotate_left(start);
        if k > 2 && order[k - 1] < order[1] {
            order[1..].reverse();
        }
        OuterCycle { order }
    }

    /// Position of each vertex along the cycle.
    pub fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn is_cycle_edge(&self, u: usize, v: usize) -> bool {
        let k = self.order.len();
        (0..k).any(|i| {
            let (a, b) = (self.order[i], self.order[(i + 1) % k]);
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    }

    /// Edges of `g` that are not on the cycle, as `(u, v)` with `u < v`.
    pub fn chords(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges().into_iter().filter(|&(u, v)| !self.is_cycle_edge(u, v)).collect()
    }

    /// True iff the cycle visits each vertex of `g` once along edges of `g`
    /// and the chords are pairwise non-crossing.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.order.len();
        let seen: VertexSet = self.order.iter().copied().collect();
        k == g.order()
            && seen.len() == k
            && k >= 3
            && (0..k).all(|i| g.has_edge(self.order[i], self.order[(i + 1) % k]))
            && chords_nest(&self.positions(g.order()), &self.chords(g))
    }
}

/// Stack test: chords, as position intervals, must form a laminar family.
fn chords_nest(pos: &[usize], chords: &[(usize, usize)]) -> bool {
    let mut intervals: Vec<(usize, usize)> = chords
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    intervals.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut open: Vec<usize> = Vec::new();
    for (a, b) in intervals {
        while open.last().is_some_and(|&end| end <= a) {
            open.pop();
        }
        if open.last().is_some_and(|&end| end < b) {
            return false;
        }
        open.push(b);
    }
    true
}

struct HamiltonSearch<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    on_path: VertexSet,
    found: usize,
    limit: usize,
    first: Option<Vec<usize>>,
}

impl HamiltonSearch<'_> {
    fn run(&mut self) {
        let n = self.g.order();
        if self.path.len() == n {
            if self.g.has_edge(self.path[n - 1], self.path[0]) {
                // each undirected cycle is met twice, once per direction
                if self.path.len() < 3 || self.path[1] < self.path[n - 1] {
                    self.found += 1;
                    if self.first.is_none() {
                        self.first = Some(self.path.clone());
                    }
                }
            }
            return;
        }
        let end = *self.path.last().expect("path starts with a vertex");
        let start = self.path[0];
        let free = self.g.vertices().difference(self.on_path);
        // every free vertex still needs two usable neighbors
        for v in free {
            let usable = self.g.neighbors(v).intersection(free.union(VertexSet::singleton(end)).union(VertexSet::singleton(start)));
            if usable.len() < 2 {
                return;
            }
        }
        for v in self.g.neighbors(end).intersection(free) {
            self.path.push(v);
            self.on_path.insert(v);
            self.run();
            self.on_path.remove(v);
            self.path.pop();
            if self.found >= self.limit {
                return;
            }
        }
    }
}

/// Up to `limit` Hamilton cycles; returns the count and the first one.
fn hamilton_cycles(g: &Graph, limit: usize) -> (usize, Option<Vec<usize>>) {
    if g.order() < 3 {
        return (0, None);
    }
    let mut s = HamiltonSearch { g, path: vec![0], on_path: VertexSet::singleton(0), found: 0, limit, first: None };
    s.run();
    (s.found, s.first)
}

/// Outer cycle of a 2-connected block, or `None` when the block is not
/// outerplanar.
fn block_outer_cycle(h: &Graph) -> Option<OuterCycle> {
    let k = h.order();
    if h.size() > 2 * k - 3 {
        return None;
    }
    let (_, first) = hamilton_cycles(h, 1);
    let cycle = OuterCycle::normalized(first?);
    if !chords_nest(&cycle.positions(k), &cycle.chords(h)) {
        return None;
    }
    if cfg!(debug_assertions) && k <= 16 {
        let (count, _) = hamilton_cycles(h, 2);
        assert_eq!(count, 1, "2-connected outerplanar graph with a second Hamilton cycle");
    }
    Some(cycle)
}

/// True iff `g` has an embedding with every vertex on the outer face.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 3 {
        return true;
    }
    if g.size() > 2 * n - 3 {
        return false;
    }
    for comp in g.components() {
        let h = g.induced(comp);
        let d = block_decomposition(&h).expect("components are connected");
        for block in d.blocks.iter().filter(|b| b.len() >= 3) {
            if block_outer_cycle(&h.induced(*block)).is_none() {
                return false;
            }
        }
    }
    true
}

/// The unique Hamilton cycle of a 2-connected outerplanar graph.
pub fn outer_cycle(g: &Graph) -> Result<OuterCycle> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    block_outer_cycle(g).ok_or(Error::NotOuterplanar)
}

/// Outerplanar and saturated: no non-edge can be added without losing
/// outerplanarity. For `n <= 2` this means complete.
pub fn is_maximal_outerplanar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 2 {
        return g.size() == n * n.saturating_sub(1) / 2;
    }
    g.size() == 2 * n - 3 && is_outerplanar(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan5() -> Graph {
        Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()
    }

    #[test]
    fn k4_is_not_outerplanar() {
        assert!(!is_outerplanar(&Graph::complete(4)));
        assert!(is_outerplanar(&Graph::complete(3)));
    }

    #[test]
    fn k23_is_not_outerplanar() {
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(!is_outerplanar(&k23));
    }

    #[test]
    fn hexagon_with_long_diagonals() {
        let mut g = Graph::cycle(6);
        g.add_edge(0, 3);
        g.add_edge(1, 4);
        g.add_edge(2, 5);
        assert!(!is_outerplanar(&g));
    }

    #[test]
    fn fan_outer_cycle() {
        let c = outer_cycle(&fan5()).unwrap();
        assert_eq!(c.order, vec![0, 1, 2, 3, 4]);
        assert_eq!(c.chords(&fan5()), vec![(0, 2), (0, 3)]);
        assert!(c.is_valid_for(&fan5()));
    }

    #[test]
    fn cycle_outer_cycle_has_no_chords() {
        let g = Graph::cycle(7);
        let c = outer_cycle(&g).unwrap();
        assert_eq!(c.order, (0..7).collect::<Vec<_>>());
        assert!(c.chords(&g).is_empty());
    }

    #[test]
    fn outer_cycle_contract_violations() {
        assert!(matches!(outer_cycle(&Graph::path(4)), Err(Error::NotTwoConnected)));
        assert!(matches!(outer_cycle(&Graph::complete(4)), Err(Error::NotOuterplanar)));
    }

    #[test]
    fn maximality() {
        let mut m4 = Graph::cycle(4);
        m4.add_edge(0, 2);
        assert!(is_maximal_outerplanar(&m4));
        assert!(!is_maximal_outerplanar(&Graph::cycle(5)));
        assert!(is_maximal_outerplanar(&Graph::complete(2)));
        assert!(is_maximal_outerplanar(&Graph::empty(1)));
        assert!(!is_maximal_outerplanar(&Graph::empty(2)));
        assert!(is_maximal_outerplanar(&fan5()));
    }

    #[test]
    fn two_connected_convention() {
        assert!(is_two_connected(&Graph::cycle(6)));
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(!is_two_connected(&bowtie));
        assert!(is_outerplanar(&bowtie));
        assert!(!is_two_connected(&Graph::complete(2)));
    }

    #[test]
    fn nesting_test() {
        let pos: Vec<usize> = (0..6).collect();
        assert!(chords_nest(&pos, &[(0, 2), (0, 3), (3, 5)]));
        assert!(!chords_nest(&pos, &[(0, 3), (1, 4)]));
        assert!(chords_nest(&pos, &[(0, 4), (1, 4), (2, 4)]));
    }
}
