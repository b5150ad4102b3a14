//! Blocks and cut vertices via depth-first lowpoints.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Blocks (maximal nonseparable subgraphs) of a connected graph.
///
/// A block is identified by its vertex set; its edges are exactly the edges
/// of the graph induced on that set, since two blocks share at most one
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted by their increasing vertex lists.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// Index pairs `(i, j)`, `i < j`, of blocks sharing a cut vertex.
    pub block_adjacency: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Cut vertices lying in block `i`.
    pub fn cut_vertices_of(&self, i: usize) -> VertexSet {
        self.blocks[i].intersection(self.cut_vertices)
    }

    /// Blocks containing at most one cut vertex.
    pub fn endblocks(&self) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.cut_vertices_of(i).len() <= 1).collect()
    }

    /// Indices of the blocks adjacent to block `i`.
    pub fn neighbors_of(&self, i: usize) -> Vec<usize> {
        self.block_adjacency
            .iter()
            .filter_map(|&(a, b)| if a == i { Some(b) } else if b == i { Some(a) } else { None })
            .collect()
    }
}

struct Lowpoint<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl Lowpoint<'_> {
    fn dfs(&mut self, u: usize, parent: Option<usize>) {
        self.timer += 1;
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        let mut children = 0;
        for v in self.g.neighbors(u) {
            if self.disc[v] == 0 {
                children += 1;
                self.edge_stack.push((u, v));
                self.dfs(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cuts.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.edge_stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Blocks of a connected graph with at least one vertex.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Domain("block decomposition needs at least one vertex".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![VertexSet::singleton(0)],
            cut_vertices: VertexSet::EMPTY,
            block_adjacency: Vec::new(),
        });
    }
    let mut lp = Lowpoint {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    lp.dfs(0, None);
    let mut blocks = lp.blocks;
    blocks.sort_by_key(|b| b.iter().collect::<Vec<_>>());
    let mut block_adjacency = Vec::new();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if !blocks[i].intersection(blocks[j]).intersection(lp.cuts).is_empty() {
                block_adjacency.push((i, j));
            }
        }
    }
    Ok(BlockDecomposition { blocks, cut_vertices: lp.cuts, block_adjacency })
}

/// True iff `g` has at least three vertices, is connected and has no cut
/// vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && block_decomposition(g).map(|d| d.blocks.len() == 1).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_has_two_blocks() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.blocks.iter().all(|b| b.len() == 3));
        assert_eq!(d.cut_vertices, VertexSet::singleton(2));
        let total: usize = d.blocks.iter().map(|b| b.len()).sum();
        assert_eq!(total - d.len() + 1, 5);
        assert_eq!(d.block_adjacency, vec![(0, 1)]);
        assert!(!is_two_connected(&g));
    }

    #[test]
    fn k2_and_p4() {
        let d = block_decomposition(&Graph::complete(2)).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d.cut_vertices.is_empty());
        let d = block_decomposition(&Graph::path(4)).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.cut_vertices.len(), 2);
        assert_eq!(d.endblocks().len(), 2);
    }

    #[test]
    fn disconnected_is_rejected() {
        assert!(matches!(block_decomposition(&Graph::empty(3)), Err(Error::NotConnected)));
        assert!(block_decomposition(&Graph::empty(0)).is_err());
    }

    #[test]
    fn two_connectivity() {
        assert!(is_two_connected(&Graph::cycle(6)));
        assert!(!is_two_connected(&Graph::complete(2)));
        assert!(is_two_connected(&Graph::complete(3)));
        assert!(!is_two_connected(&Graph::path(3)));
    }
}
