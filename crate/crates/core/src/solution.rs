//! Split solutions and the graphs they produce.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{BipartiteGraph, GraphError, Side, VertexId};

/// The top neighbors whose edges are handed to one copy of a split vertex.
pub type Block = Vec<VertexId>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolutionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("only bottom vertices can be split, {0} is on the top layer")]
    NotBottom(VertexId),
    #[error("split of {0} needs at least two blocks")]
    TooFewBlocks(VertexId),
    #[error("split of {0} has an empty block")]
    EmptyBlock(VertexId),
    #[error("split of {vertex} lists {top}, which is not a neighbor")]
    NotIncident { vertex: VertexId, top: VertexId },
    #[error("split of {vertex} lists {top} twice")]
    Overlap { vertex: VertexId, top: VertexId },
    #[error("split of {vertex} does not cover the edge to {top}")]
    Uncovered { vertex: VertexId, top: VertexId },
}

/// Split bottom vertices, each with a partition of its incident edges.
/// Vertices not listed stay whole.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Solution {
    splits: BTreeMap<VertexId, Vec<Block>>,
}

impl Solution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a split; blocks are normalized (sorted, ordered by first element).
    pub fn insert(&mut self, v: VertexId, mut blocks: Vec<Block>) {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b.first().copied());
        self.splits.insert(v, blocks);
    }

    /// Splits `v` into one copy per incident edge.
    pub fn insert_singletons(&mut self, g: &BipartiteGraph, v: VertexId) -> Result<(), GraphError> {
        let blocks = g.neighbors(v)?.iter().map(|&t| alloc::vec![t]).collect();
        self.insert(v, blocks);
        Ok(())
    }

    pub fn remove(&mut self, v: VertexId) -> Option<Vec<Block>> {
        self.splits.remove(&v)
    }

    pub fn blocks(&self, v: VertexId) -> Option<&[Block]> {
        self.splits.get(&v).map(Vec::as_slice)
    }

    pub fn is_split(&self, v: VertexId) -> bool {
        self.splits.contains_key(&v)
    }

    /// Number of split vertices.
    pub fn len(&self) -> usize {
        self.splits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.splits.is_empty()
    }

    pub fn split_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.splits.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &[Block])> + '_ {
        self.splits.iter().map(|(&v, b)| (v, b.as_slice()))
    }

    /// Total number of copies minus the number of split vertices.
    pub fn extra_copies(&self) -> usize {
        self.splits.values().map(|b| b.len() - 1).sum()
    }

    pub fn validate(&self, g: &BipartiteGraph) -> Result<(), SolutionError> {
        for (&v, blocks) in &self.splits {
            match g.side(v) {
                None => return Err(GraphError::UnknownVertex(v).into()),
                Some(Side::Top) => return Err(SolutionError::NotBottom(v)),
                Some(Side::Bottom) => {}
            }
            if blocks.len() < 2 {
                return Err(SolutionError::TooFewBlocks(v));
            }
            let nbrs = g.adj(v);
            let mut covered = 0;
            let mut seen: Vec<VertexId> = Vec::new();
            for block in blocks {
                if block.is_empty() {
                    return Err(SolutionError::EmptyBlock(v));
                }
                for &t in block {
                    if !nbrs.contains(&t) {
                        return Err(SolutionError::NotIncident { vertex: v, top: t });
                    }
                    if seen.contains(&t) {
                        return Err(SolutionError::Overlap { vertex: v, top: t });
                    }
                    seen.push(t);
                    covered += 1;
                }
            }
            if covered != nbrs.len() {
                let top = *nbrs.iter().find(|t| !seen.contains(t)).expect("uncovered edge");
                return Err(SolutionError::Uncovered { vertex: v, top });
            }
        }
        Ok(())
    }
}

/// Which split vertex and block a copy stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CopyOf {
    pub vertex: VertexId,
    pub block: usize,
}

/// A graph after splitting, remembering where every copy came from.
#[derive(Debug, Clone)]
pub struct SplitGraph {
    pub graph: BipartiteGraph,
    origin: BTreeMap<VertexId, CopyOf>,
    copies: BTreeMap<VertexId, (String, Vec<VertexId>)>,
}

impl SplitGraph {
    pub fn origin(&self, v: VertexId) -> Option<CopyOf> {
        self.origin.get(&v).copied()
    }

    /// The vertex of the unsplit graph that `v` belongs to.
    pub fn original(&self, v: VertexId) -> VertexId {
        self.origin.get(&v).map_or(v, |c| c.vertex)
    }

    /// Copy ids of a split vertex, in block order.
    pub fn copies(&self, v: VertexId) -> Option<&[VertexId]> {
        self.copies.get(&v).map(|(_, c)| c.as_slice())
    }

    /// Merges every set of copies back into its original vertex.
    pub fn contract(&self) -> Result<BipartiteGraph, GraphError> {
        let mut g = self.graph.clone();
        for (&v, (label, copies)) in &self.copies {
            g.restore_vertex(v, Side::Bottom, label.clone())?;
            for &c in copies {
                for t in g.remove_vertex(c)? {
                    g.add_edge(v, t)?;
                }
            }
        }
        Ok(g)
    }
}

/// Replaces each split vertex by one fresh vertex per block, named
/// `label#i` with `i` counting blocks from one.
pub fn apply_splits(g: &BipartiteGraph, sol: &Solution) -> Result<SplitGraph, SolutionError> {
    sol.validate(g)?;
    let mut graph = g.clone();
    let mut origin = BTreeMap::new();
    let mut copies = BTreeMap::new();
    for (v, blocks) in sol.iter() {
        let label = String::from(g.label(v).unwrap_or(""));
        graph.remove_vertex(v)?;
        let mut ids = Vec::with_capacity(blocks.len());
        for (i, block) in blocks.iter().enumerate() {
            let c = graph.add_vertex(Side::Bottom, format!("{label}#{}", i + 1));
            for &t in block {
                graph.add_edge(c, t)?;
            }
            origin.insert(c, CopyOf { vertex: v, block: i });
            ids.push(c);
        }
        copies.insert(v, (label, ids));
    }
    Ok(SplitGraph { graph, origin, copies })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biplanarity::is_biplanar;
    use alloc::vec;

    fn c4() -> (BipartiteGraph, [VertexId; 4]) {
        let mut g = BipartiteGraph::new();
        let t1 = g.add_vertex(Side::Top, "t1");
        let t2 = g.add_vertex(Side::Top, "t2");
        let b1 = g.add_vertex(Side::Bottom, "b1");
        let b2 = g.add_vertex(Side::Bottom, "b2");
        for (a, b) in [(t1, b1), (t2, b1), (t2, b2), (t1, b2)] {
            g.add_edge(a, b).unwrap();
        }
        (g, [t1, t2, b1, b2])
    }

    #[test]
    fn empty_solution_is_identity() {
        let (g, _) = c4();
        let s = apply_splits(&g, &Solution::new()).unwrap();
        assert_eq!(s.graph, g);
    }

    #[test]
    fn splitting_a_cycle_vertex_gives_a_path() {
        let (g, [t1, t2, b1, _]) = c4();
        let mut sol = Solution::new();
        sol.insert(b1, vec![vec![t1], vec![t2]]);
        let s = apply_splits(&g, &sol).unwrap();
        assert_eq!(s.graph.vertex_count(), 5);
        assert_eq!(s.graph.edge_count(), 4);
        assert!(is_biplanar(&s.graph));
        let copies = s.copies(b1).unwrap();
        assert_eq!(copies.len(), 2);
        assert_eq!(s.graph.label(copies[1]), Some("b1#2"));
        assert_eq!(s.original(copies[0]), b1);
        assert_eq!(s.contract().unwrap(), g);
    }

    #[test]
    fn singleton_split_of_degree_three() {
        let mut g = BipartiteGraph::new();
        let b = g.add_vertex(Side::Bottom, "b");
        for i in 0..3 {
            let t = g.add_vertex(Side::Top, format!("t{i}"));
            g.add_edge(t, b).unwrap();
        }
        let mut sol = Solution::new();
        sol.insert_singletons(&g, b).unwrap();
        let s = apply_splits(&g, &sol).unwrap();
        let copies = s.copies(b).unwrap();
        assert_eq!(copies.len(), 3);
        assert!(copies.iter().all(|&c| s.graph.degree(c) == Ok(1)));
    }

    #[test]
    fn invalid_partitions_are_rejected() {
        let (g, [t1, t2, b1, b2]) = c4();
        let mut sol = Solution::new();
        sol.insert(b1, vec![vec![t1]]);
        assert_eq!(sol.validate(&g), Err(SolutionError::TooFewBlocks(b1)));
        sol.insert(b1, vec![vec![t1], vec![t1, t2]]);
        assert_eq!(sol.validate(&g), Err(SolutionError::Overlap { vertex: b1, top: t1 }));
        sol.insert(b1, vec![vec![t1], vec![b2]]);
        assert!(matches!(sol.validate(&g), Err(SolutionError::NotIncident { .. })));
        let mut sol = Solution::new();
        sol.insert(t1, vec![vec![b1], vec![b2]]);
        assert_eq!(apply_splits(&g, &sol).err(), Some(SolutionError::NotBottom(t1)));

        let mut g3 = g.clone();
        let t3 = g3.add_vertex(Side::Top, "t3");
        g3.add_edge(t3, b1).unwrap();
        let mut sol = Solution::new();
        sol.insert(b1, vec![vec![t1], vec![t2]]);
        assert_eq!(sol.validate(&g3), Err(SolutionError::Uncovered { vertex: b1, top: t3 }));
    }
}
