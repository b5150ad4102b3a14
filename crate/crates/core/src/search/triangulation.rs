//! Maximal outerplanar graphs as triangulations of the convex polygon.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order `enumerate_mops` accepts without an override.
pub const DEFAULT_MOP_CAP: usize = 14;

/// A triangulation of the convex `n`-gon with outer cycle `0 - 1 - ... - (n-1)`,
/// given by its `n - 3` chords `(a, b)`, `a < b`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangulationCode {
    n: usize,
    chords: Vec<(u8, u8)>,
}

impl TriangulationCode {
    pub fn new(n: usize, mut chords: Vec<(usize, usize)>) -> Result<Self> {
        if !(3..=64).contains(&n) {
            return Err(Error::Domain(format!("polygon triangulations need 3 <= n <= 64, got {n}")));
        }
        for c in chords.iter_mut() {
            if c.0 > c.1 {
                *c = (c.1, c.0);
            }
        }
        chords.sort_unstable();
        chords.dedup();
        let code = TriangulationCode { n, chords: chords.iter().map(|&(a, b)| (a as u8, b as u8)).collect() };
        if chords.len() != n - 3 || chords.iter().any(|&(a, b)| b >= n || b - a < 2 || (a == 0 && b == n - 1)) {
            return Err(Error::Domain("a triangulation needs n-3 distinct diagonals".into()));
        }
        if !code.is_non_crossing() {
            return Err(Error::Domain("diagonals cross".into()));
        }
        Ok(code)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> Vec<(usize, usize)> {
        self.chords.iter().map(|&(a, b)| (a as usize, b as usize)).collect()
    }

    fn is_non_crossing(&self) -> bool {
        self.chords.iter().enumerate().all(|(i, &(a, b))| {
            self.chords[i + 1..].iter().all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
        })
    }

    /// The polygon edges plus the chords.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            g.add_edge(v, (v + 1) % self.n);
        }
        for (a, b) in self.chords() {
            g.add_edge(a, b);
        }
        g
    }

    fn image(&self, map: impl Fn(usize) -> usize) -> Vec<(u8, u8)> {
        let mut out: Vec<(u8, u8)> = self
            .chords
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map(a as usize) as u8, map(b as usize) as u8);
                (x.min(y), x.max(y))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Lexicographically least chord list over the `2n` rotations and
    /// reflections of the polygon.
    pub fn canon(&self) -> TriangulationCode {
        let n = self.n;
        let mut best = self.chords.clone();
        for r in 0..n {
            let rot = self.image(|v| (v + r) % n);
            if rot < best {
                best = rot;
            }
            let refl = self.image(|v| (n + r - v) % n);
            if refl < best {
                best = refl;
            }
        }
        TriangulationCode { n, chords: best }
    }

    pub fn is_canonical(&self) -> bool {
        self.canon().chords == self.chords
    }
}

/// Chord lists of every triangulation of the sub-polygon `lo..=hi`
/// (consecutive labels, base edge `lo-hi`).
fn triangulate(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if hi - lo < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for apex in lo + 1..hi {
        let left = triangulate(lo, apex);
        let right = triangulate(apex, hi);
        for l in &left {
            for r in &right {
                let mut chords = l.clone();
                chords.extend_from_slice(r);
                if apex - lo >= 2 {
                    chords.push((lo, apex));
                }
                if hi - apex >= 2 {
                    chords.push((apex, hi));
                }
                out.push(chords);
            }
        }
    }
    out
}

/// All `Catalan(n-2)` labeled triangulations of the `n`-gon.
pub fn all_labeled_triangulations(n: usize) -> Vec<TriangulationCode> {
    assert!((3..=16).contains(&n), "labeled triangulation lists are for small n");
    triangulate(0, n - 1)
        .into_iter()
        .map(|c| TriangulationCode::new(n, c).expect("recursive construction yields triangulations"))
        .collect()
}

/// Depth-first walk over all triangulations, calling `visit` on each
/// without materializing the full list.
type Visitor<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

fn walk(pending: &mut Vec<(usize, usize)>, chords: &mut Vec<(usize, usize)>, visit: &mut Visitor<'_>) {
    let Some((lo, hi)) = pending.pop() else {
        visit(chords);
        return;
    };
    if hi - lo < 2 {
        walk(pending, chords, visit);
        pending.push((lo, hi));
        return;
    }
    for apex in lo + 1..hi {
        let before = chords.len();
        if apex - lo >= 2 {
            chords.push((lo, apex));
        }
        if hi - apex >= 2 {
            chords.push((apex, hi));
        }
        pending.push((lo, apex));
        pending.push((apex, hi));
        walk(pending, chords, visit);
        pending.pop();
        pending.pop();
        chords.truncate(before);
    }
    pending.push((lo, hi));
}

/// One triangulation per dihedral class (the lexicographically least
/// member), in generation order.
pub fn enumerate_triangulations(n: usize, cap: usize) -> Result<Vec<TriangulationCode>> {
    if n < 3 {
        return Err(Error::Domain(format!("maximal outerplanar enumeration needs n >= 3, got {n}")));
    }
    if n > cap {
        return Err(Error::ResourceCap { n, cap, what: "maximal outerplanar enumeration" });
    }
    let mut out = Vec::new();
    let mut pending = vec![(0, n - 1)];
    let mut chords = Vec::new();
    walk(&mut pending, &mut chords, &mut |c| {
        let code = TriangulationCode::new(n, c.to_vec()).expect("walk yields triangulations");
        if code.is_canonical() {
            out.push(code);
        }
    });
    Ok(out)
}

/// One graph per isomorphism class of maximal outerplanar graphs on `n`
/// vertices. For `n >= 4` the outer cycle is the unique Hamilton cycle, so
/// dihedral classes of triangulations are exactly the isomorphism classes.
pub fn enumerate_mops(n: usize) -> Result<Vec<Graph>> {
    enumerate_mops_capped(n, DEFAULT_MOP_CAP)
}

pub fn enumerate_mops_capped(n: usize, cap: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_triangulations(n, cap)?.iter().map(TriangulationCode::to_graph).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for n in 3..=10 {
            assert_eq!(all_labeled_triangulations(n).len(), catalan[n - 2], "n = {n}");
        }
    }

    #[test]
    fn small_class_counts() {
        assert_eq!(enumerate_mops(3).unwrap().len(), 1);
        assert_eq!(enumerate_mops(4).unwrap().len(), 1);
        assert_eq!(enumerate_mops(5).unwrap().len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_mops(15), Err(Error::ResourceCap { .. })));
        assert!(enumerate_mops(2).is_err());
    }

    #[test]
    fn code_validation() {
        assert!(TriangulationCode::new(5, vec![(0, 2), (0, 3)]).is_ok());
        assert!(TriangulationCode::new(5, vec![(0, 2), (1, 3)]).is_err());
        assert!(TriangulationCode::new(5, vec![(0, 2)]).is_err());
        assert!(TriangulationCode::new(5, vec![(0, 1), (0, 2)]).is_err());
    }

    #[test]
    fn canon_is_dihedral_minimum() {
        let t = TriangulationCode::new(6, vec![(1, 3), (1, 4), (1, 5)]).unwrap();
        let c = t.canon();
        assert_eq!(c.chords(), vec![(0, 2), (0, 3), (0, 4)]);
        assert!(c.is_canonical());
    }
}
