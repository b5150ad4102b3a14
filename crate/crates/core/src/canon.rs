//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine an ordered partition to an
//! equitable one, pick the first non-singleton cell, individualize each of
//! its vertices in turn and recurse. Every leaf is a discrete partition, i.e.
//! a relabeling; the canonical graph is the lexicographically largest
//! relabeled adjacency matrix over all leaves. Automorphisms discovered when
//! two leaves coincide are used to skip equivalent children and to jump
//! back out of subtrees that mirror an already explored one.

use std::fmt;

use crate::graph::{Graph, VertexSet};
use crate::graph6;

/// An isomorphism-invariant label: the graph6 string of the canonically
/// relabeled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalLabel(String);

impl CanonicalLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Cells = Vec<Vec<usize>>;

fn mask(cell: &[usize]) -> VertexSet {
    cell.iter().copied().collect()
}

/// Splits cells until every cell is equitable with respect to every other.
/// Split pieces are ordered by neighbor count, which keeps the procedure
/// label-independent.
fn refine(g: &Graph, cells: &mut Cells) {
    'restart: loop {
        for w in 0..cells.len() {
            let splitter = mask(&cells[w]);
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let count = |v: usize| g.neighbors(v).intersection(splitter).len();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut pieces: Cells = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        pieces.push(Vec::new());
                        last = k;
                    }
                    pieces.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, pieces);
                continue 'restart;
            }
        }
        return;
    }
}

fn individualize(cells: &Cells, cell: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..cell]);
    out.push(vec![v]);
    out.push(cells[cell].iter().copied().filter(|&x| x != v).collect());
    out.extend_from_slice(&cells[cell + 1..]);
    out
}

#[derive(Clone)]
struct Leaf {
    path: Vec<usize>,
    /// `order[i]` is the original vertex placed at position `i`.
    order: Vec<usize>,
    rows: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn leaf(&self, cells: &Cells, path: &[usize]) -> Leaf {
        let n = self.g.order();
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| self.g.neighbors(v).iter().fold(0u64, |acc, w| acc | 1u64 << position[w]))
            .collect();
        Leaf { path: path.to_vec(), order, rows }
    }

    /// Records the automorphism mapping `from.order[i] -> to.order[i]` and
    /// returns the depth at which the two paths diverge.
    fn record(&mut self, from: &Leaf, to: &Leaf) -> usize {
        let n = self.g.order();
        let mut gamma = vec![0usize; n];
        for i in 0..n {
            gamma[from.order[i]] = to.order[i];
        }
        if gamma.iter().enumerate().any(|(i, &x)| i != x) {
            self.automorphisms.push(gamma);
        }
        from.path.iter().zip(&to.path).take_while(|(a, b)| a == b).count()
    }

    /// Union-find orbits of the automorphisms found so far that fix every
    /// vertex of `prefix`.
    fn orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    /// Returns `Some(depth)` when the caller chain should unwind to the
    /// node at `depth`, which then moves on to its next child.
    fn visit(&mut self, mut cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let leaf = self.leaf(&cells, path);
            let Some(first) = self.first.clone() else {
                self.first = Some(leaf.clone());
                self.best = Some(leaf);
                return None;
            };
            if leaf.rows == first.rows {
                return Some(self.record(&first, &leaf));
            }
            let best = self.best.clone().expect("best is set with first");
            match leaf.rows.cmp(&best.rows) {
                std::cmp::Ordering::Greater => self.best = Some(leaf),
                std::cmp::Ordering::Equal => return Some(self.record(&best, &leaf)),
                std::cmp::Ordering::Less => {}
            }
            return None;
        };

        let depth = path.len();
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if !tried.is_empty() {
                let orbit = self.orbits(path);
                if tried.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            tried.push(v);
            path.push(v);
            let jump = self.visit(individualize(&cells, target, v), path);
            path.pop();
            match jump {
                Some(d) if d < depth => return Some(d),
                _ => {}
            }
        }
        None
    }
}

/// Canonical relabeling of `g`: returns the canonical graph and the map
/// `perm` with `canonical = g.permuted(&perm)`.
pub fn canonical_labeling(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (Graph::empty(0), Vec::new());
    }
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    let root: Cells = vec![(0..n).collect()];
    search.visit(root, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0usize; n];
    for (i, &v) in best.order.iter().enumerate() {
        perm[v] = i;
    }
    let canon = g.permuted(&perm);
    debug_assert!(canon.neighbors(0).0 == best.rows[0]);
    (canon, perm)
}

/// Two graphs receive equal labels iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> CanonicalLabel {
    CanonicalLabel(graph6::encode(&canonical_labeling(g).0))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && a.degree_sequence() == b.degree_sequence() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_c4_matches() {
        let a = Graph::cycle(4);
        let b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&Graph::path(4)));
    }

    #[test]
    fn hexagon_triangulations_give_three_labels() {
        // all 14 triangulations of the hexagon, deduped by brute force
        let chord_sets = crate::search::all_labeled_triangulations(6);
        assert_eq!(chord_sets.len(), 14);
        let graphs: Vec<Graph> = chord_sets.iter().map(|t| t.to_graph()).collect();
        let reps = crate::oracle::brute_dedupe(graphs.iter().cloned());
        assert_eq!(reps.len(), 3);
        let labels: std::collections::BTreeSet<_> = reps.iter().map(canonical_form).collect();
        assert_eq!(labels.len(), 3);
        let all: std::collections::BTreeSet<_> = graphs.iter().map(canonical_form).collect();
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for n in [0, 1, 12, 20, 40] {
            let e = Graph::empty(n);
            assert_eq!(canonical_form(&e), canonical_form(&e.permuted(&(0..n).rev().collect::<Vec<_>>())));
        }
        let k = Graph::complete(16);
        assert_eq!(canonical_labeling(&k).0, k);
        let c = Graph::cycle(30);
        let shifted: Vec<usize> = (0..30).map(|v| (v * 7) % 30).collect();
        assert_eq!(canonical_form(&c), canonical_form(&c.permuted(&shifted)));
    }

    #[test]
    fn permutation_oracle_on_all_graphs_of_order_five() {
        let graphs: Vec<Graph> = crate::oracle::all_graphs(5).collect();
        let labels: std::collections::BTreeSet<_> = graphs.iter().map(canonical_form).collect();
        assert_eq!(labels.len(), crate::oracle::brute_dedupe(graphs).len());
    }
}
