//! Isomorphism-class corpora of small outerplanar graphs.

use std::collections::BTreeMap;

use crate::canon::canonical_labeling;
use crate::doublestar::{is_double_star_free, DoubleStarSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::triangulation::enumerate_mops;

/// Largest order of the connected corpus.
pub const CONNECTED_CORPUS_CAP: usize = 8;
/// Largest order of the 2-connected corpus.
pub const TWO_CONNECTED_CORPUS_CAP: usize = 12;

fn keep(g: &Graph, filter: Option<DoubleStarSpec>) -> bool {
    filter.is_none_or(|s| is_double_star_free(g, s))
}

fn dedupe(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut classes = BTreeMap::new();
    for g in graphs {
        let (canon, _) = canonical_labeling(&g);
        classes.entry(crate::graph6::encode(&canon)).or_insert(canon);
    }
    classes.into_values().collect()
}

fn small(n: usize) -> Vec<Graph> {
    match n {
        1 => vec![Graph::empty(1)],
        _ => vec![Graph::complete(2)],
    }
}

/// One canonical representative per isomorphism class of connected
/// outerplanar graphs on `n` vertices, sorted by graph6, optionally
/// restricted to `S_{p,q}`-free graphs. Generated as connected spanning
/// subgraphs of maximal outerplanar graphs.
pub fn enumerate_connected_outerplanar(n: usize, filter: Option<DoubleStarSpec>) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Domain("corpus needs n >= 1".into()));
    }
    if n > CONNECTED_CORPUS_CAP {
        return Err(Error::ResourceCap { n, cap: CONNECTED_CORPUS_CAP, what: "connected outerplanar corpus" });
    }
    if n < 3 {
        return Ok(small(n).into_iter().filter(|g| keep(g, filter)).collect());
    }
    let mut found = Vec::new();
    for mop in enumerate_mops(n)? {
        let edges = mop.edges();
        for mask in 0u64..1 << edges.len() {
            if (mask.count_ones() as usize) < n - 1 {
                continue;
            }
            let chosen: Vec<_> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            let g = Graph::from_edges(n, &chosen)?;
            if g.is_connected() && keep(&g, filter) {
                found.push(g);
            }
        }
    }
    Ok(dedupe(found))
}

/// One canonical representative per isomorphism class of 2-connected
/// outerplanar graphs on `n >= 3` vertices: an outer cycle plus any set of
/// non-crossing chords.
pub fn enumerate_two_connected_outerplanar(n: usize, filter: Option<DoubleStarSpec>) -> Result<Vec<Graph>> {
    if n < 3 {
        return Err(Error::Domain("2-connected graphs need n >= 3".into()));
    }
    if n > TWO_CONNECTED_CORPUS_CAP {
        return Err(Error::ResourceCap { n, cap: TWO_CONNECTED_CORPUS_CAP, what: "2-connected outerplanar corpus" });
    }
    let mut found = Vec::new();
    for mop in enumerate_mops(n)? {
        // enumerate_mops labels the outer cycle 0..n-1
        let chords: Vec<_> = mop.edges().into_iter().filter(|&(a, b)| b - a != 1 && (a, b) != (0, n - 1)).collect();
        for mask in 0u64..1 << chords.len() {
            let mut g = Graph::cycle(n);
            for (i, &(a, b)) in chords.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(a, b);
                }
            }
            if keep(&g, filter) {
                found.push(g);
            }
        }
    }
    Ok(dedupe(found))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_counts() {
        assert_eq!(enumerate_connected_outerplanar(3, None).unwrap().len(), 2);
        assert_eq!(enumerate_connected_outerplanar(4, None).unwrap().len(), 5);
        assert_eq!(enumerate_two_connected_outerplanar(4, None).unwrap().len(), 2);
        assert!(enumerate_connected_outerplanar(9, None).is_err());
    }
}
