//! Double stars `S_{p,q}`: containment, witnesses and related predicates.
//!
//! `S_{p,q}` is an edge `xy` with `p` pendant leaves on `x` and `q` on `y`.
//! An edge `uv` of a graph hosts a copy with `u` in the role of `x` iff
//!
//! * `d(u) - 1 >= p`,
//! * `d(v) - 1 >= q`, and
//! * `|(N(u) ∪ N(v)) \ {u, v}| >= p + q`.
//!
//! The first two conditions are plainly necessary and the third counts the
//! distinct leaves needed. Sufficiency follows by filling the `x` side from
//! the private neighbors of `u` first; the test suite checks the criterion
//! against subset enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The pair `(p, q)` with `q >= p >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoubleStarSpec {
    p: usize,
    q: usize,
}

impl DoubleStarSpec {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p < 1 || q < p {
            return Err(Error::InvalidSpec { p, q });
        }
        Ok(DoubleStarSpec { p, q })
    }

    pub fn p(self) -> usize {
        self.p
    }

    pub fn q(self) -> usize {
        self.q
    }

    /// `|V(S_{p,q})| = p + q + 2`.
    pub fn order(self) -> usize {
        self.p + self.q + 2
    }

    /// The double star itself: centers 0 (`p` leaves) and 1 (`q` leaves).
    pub fn graph(self) -> Graph {
        let mut g = Graph::empty(self.order());
        g.add_edge(0, 1);
        for i in 0..self.p {
            g.add_edge(0, 2 + i);
        }
        for j in 0..self.q {
            g.add_edge(1, 2 + self.p + j);
        }
        g
    }
}

impl fmt::Display for DoubleStarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.p, self.q)
    }
}

/// An embedded copy `S_{p,q}(x, y; X, Y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleStarWitness {
    pub x: usize,
    pub y: usize,
    /// Leaves at `x`, `|X| = p`.
    pub leaves_x: VertexSet,
    /// Leaves at `y`, `|Y| = q`.
    pub leaves_y: VertexSet,
}

impl DoubleStarWitness {
    /// Re-checks the witness against `g` from scratch.
    pub fn is_valid(&self, g: &Graph, spec: DoubleStarSpec) -> bool {
        let (x, y) = (self.x, self.y);
        x != y
            && g.has_edge(x, y)
            && self.leaves_x.len() == spec.p()
            && self.leaves_y.len() == spec.q()
            && self.leaves_x.intersection(self.leaves_y).is_empty()
            && !self.leaves_x.contains(x)
            && !self.leaves_x.contains(y)
            && !self.leaves_y.contains(x)
            && !self.leaves_y.contains(y)
            && self.leaves_x.difference(g.neighbors(x)).is_empty()
            && self.leaves_y.difference(g.neighbors(y)).is_empty()
    }

    /// The copy as a subgraph of the host: its `p + q + 1` edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(self.x, self.y)];
        out.extend(self.leaves_x.iter().map(|l| (self.x, l)));
        out.extend(self.leaves_y.iter().map(|l| (self.y, l)));
        out
    }
}

/// Counting criterion on raw neighbor masks, `u` on the `p` side.
#[inline]
pub(crate) fn hosts(adj: &[VertexSet], u: usize, v: usize, p: usize, q: usize) -> bool {
    let nu = adj[u].len();
    let nv = adj[v].len();
    if nu < p + 1 || nv < q + 1 {
        return false;
    }
    let outside = adj[u].union(adj[v]).difference(VertexSet::singleton(u).union(VertexSet::singleton(v)));
    outside.len() >= p + q
}

fn lowest(s: VertexSet, k: usize) -> VertexSet {
    s.iter().take(k).collect()
}

/// Greedy witness for an edge already known to satisfy the criterion.
pub(crate) fn build_witness(adj: &[VertexSet], u: usize, v: usize, p: usize, q: usize) -> DoubleStarWitness {
    let ends = VertexSet::singleton(u).union(VertexSet::singleton(v));
    let nu = adj[u].difference(ends);
    let nv = adj[v].difference(ends);
    let common = nu.intersection(nv);
    let private_u = nu.difference(common);
    let mut leaves_x = lowest(private_u, p);
    leaves_x = leaves_x.union(lowest(common, p - leaves_x.len()));
    let leaves_y = lowest(nv.difference(leaves_x), q);
    DoubleStarWitness { x: u, y: v, leaves_x, leaves_y }
}

/// First copy of `S_{p,q}` in a graph given by neighbor masks, scanning
/// edges `u < v` in lexicographic order and trying `(u, v)` before `(v, u)`.
pub(crate) fn find_in(adj: &[VertexSet], spec: DoubleStarSpec) -> Option<DoubleStarWitness> {
    let (p, q) = (spec.p(), spec.q());
    for u in 0..adj.len() {
        if adj[u].len() < p + 1 {
            continue;
        }
        for v in adj[u].iter().filter(|&v| v > u) {
            if hosts(adj, u, v, p, q) {
                return Some(build_witness(adj, u, v, p, q));
            }
            if hosts(adj, v, u, p, q) {
                return Some(build_witness(adj, v, u, p, q));
            }
        }
    }
    None
}

/// Whether edge `uv` hosts `S_{p,q}` with `u` as the center carrying `p`
/// leaves and `v` the center carrying `q`.
pub fn edge_hosts_double_star(g: &Graph, u: usize, v: usize, spec: DoubleStarSpec) -> Result<bool> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    Ok(hosts(g.adjacency(), u, v, spec.p(), spec.q()))
}

/// A copy of `S_{p,q}` in `g`, or `None` iff `g` is `S_{p,q}`-free.
pub fn contains_double_star(g: &Graph, spec: DoubleStarSpec) -> Option<DoubleStarWitness> {
    find_in(g.adjacency(), spec)
}

pub fn is_double_star_free(g: &Graph, spec: DoubleStarSpec) -> bool {
    contains_double_star(g, spec).is_none()
}

/// Every edge `xy` with `d(x) >= 3` and `d(y) >= 3` has a common neighbor.
pub fn shared_neighbor_holds(g: &Graph) -> bool {
    g.edges().into_iter().all(|(x, y)| {
        g.degree(x) < 3 || g.degree(y) < 3 || !g.neighbors(x).intersection(g.neighbors(y)).is_empty()
    })
}

/// Every edge whose endpoint degrees are exactly `{3, 4}` has a common
/// neighbor. For graphs of maximum degree 4 this forces `S_{2,3}`-freeness.
pub fn every_34_edge_shares_neighbor(g: &Graph) -> bool {
    g.edges().into_iter().all(|(x, y)| {
        let mut d = [g.degree(x), g.degree(y)];
        d.sort_unstable();
        d != [3, 4] || !g.neighbors(x).intersection(g.neighbors(y)).is_empty()
    })
}
