//! Planar 2-layer drawability.
//!
//! A bipartite graph has a crossing-free 2-layer drawing exactly when it is a
//! caterpillar forest. The test here runs in O(n + m); `layout` builds such a
//! drawing and `count_crossings` checks any drawing independently.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{BipartiteGraph, Side, VertexId};

/// Left-to-right vertex orders on the two layers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Drawing {
    pub top_order: Vec<VertexId>,
    pub bottom_order: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DrawingError {
    #[error("the graph has no crossing-free 2-layer drawing")]
    NotBiplanar,
    #[error("vertex {0} is placed on a layer it does not belong to")]
    WrongLayer(VertexId),
    #[error("vertex {0} is placed more than once")]
    Repeated(VertexId),
    #[error("vertex {0} is not placed")]
    Missing(VertexId),
}

impl Drawing {
    pub fn order(&self, side: Side) -> &[VertexId] {
        match side {
            Side::Top => &self.top_order,
            Side::Bottom => &self.bottom_order,
        }
    }

    /// Position of every placed vertex, indexed by id. Fails unless the two
    /// orders are permutations of the graph's layers.
    pub fn positions(&self, g: &BipartiteGraph) -> Result<Vec<u32>, DrawingError> {
        let mut pos = vec![u32::MAX; g.id_bound()];
        for side in [Side::Top, Side::Bottom] {
            for (i, &v) in self.order(side).iter().enumerate() {
                if g.side(v) != Some(side) {
                    return Err(DrawingError::WrongLayer(v));
                }
                if pos[v.index()] != u32::MAX {
                    return Err(DrawingError::Repeated(v));
                }
                pos[v.index()] = i as u32;
            }
        }
        if let Some(v) = g.vertices().find(|v| pos[v.index()] == u32::MAX) {
            return Err(DrawingError::Missing(v));
        }
        Ok(pos)
    }
}

/// True iff `g` is a caterpillar forest: acyclic, and in every component the
/// vertices of degree at least two induce a path.
pub fn is_biplanar(g: &BipartiteGraph) -> bool {
    if g.edge_count() + component_count(g) != g.vertex_count() {
        return false;
    }
    // In a tree the non-leaf vertices induce a subtree; it is a path iff no
    // vertex of it has three non-leaf neighbors.
    g.vertices().all(|v| {
        let adj = g.adj(v);
        adj.len() < 3 || adj.iter().filter(|&&u| g.deg(u) >= 2).count() <= 2
    })
}

fn component_count(g: &BipartiteGraph) -> usize {
    let mut seen = vec![false; g.id_bound()];
    let mut stack = Vec::new();
    let mut count = 0;
    for s in g.vertices() {
        if seen[s.index()] {
            continue;
        }
        count += 1;
        seen[s.index()] = true;
        stack.push(s);
        while let Some(x) = stack.pop() {
            for &y in g.adj(x) {
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Crossing-free drawing of a caterpillar forest. Components go left to
/// right by smallest id; inside a component the spine is walked from one end
/// and each spine vertex's leaves sit next to it on the other layer.
pub fn layout(g: &BipartiteGraph) -> Result<Drawing, DrawingError> {
    if !is_biplanar(g) {
        return Err(DrawingError::NotBiplanar);
    }
    let mut d = Drawing::default();
    let mut seen = vec![false; g.id_bound()];
    let mut queue = VecDeque::new();
    let mut comp = Vec::new();
    for start in g.vertices() {
        if seen[start.index()] {
            continue;
        }
        comp.clear();
        seen[start.index()] = true;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            comp.push(x);
            for &y in g.adj(x) {
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    queue.push_back(y);
                }
            }
        }
        lay_out_component(g, &comp, &mut d);
    }
    Ok(d)
}

fn push(g: &BipartiteGraph, d: &mut Drawing, v: VertexId) {
    match g.side(v) {
        Some(Side::Top) => d.top_order.push(v),
        _ => d.bottom_order.push(v),
    }
}

fn lay_out_component(g: &BipartiteGraph, comp: &[VertexId], d: &mut Drawing) {
    let is_spine = |v: VertexId| g.deg(v) >= 2;
    let Some(first) = comp
        .iter()
        .copied()
        .filter(|&v| is_spine(v))
        .filter(|&v| g.adj(v).iter().filter(|&&u| is_spine(u)).count() <= 1)
        .min()
    else {
        // A single vertex or a single edge.
        let mut vs = comp.to_vec();
        vs.sort_unstable();
        for v in vs {
            push(g, d, v);
        }
        return;
    };

    push(g, d, first);
    let mut prev: Option<VertexId> = None;
    let mut cur = first;
    loop {
        let mut leaves: Vec<VertexId> = g.adj(cur).iter().copied().filter(|&u| !is_spine(u)).collect();
        leaves.sort_unstable();
        for leaf in leaves {
            push(g, d, leaf);
        }
        let next = g
            .adj(cur)
            .iter()
            .copied()
            .find(|&u| is_spine(u) && Some(u) != prev);
        match next {
            Some(n) => {
                push(g, d, n);
                prev = Some(cur);
                cur = n;
            }
            None => break,
        }
    }
}

/// Number of pairs of edges `(t, b)`, `(t', b')` with `t` left of `t'` and
/// `b` strictly right of `b'`.
pub fn count_crossings(g: &BipartiteGraph, d: &Drawing) -> Result<u64, DrawingError> {
    let pos = d.positions(g)?;
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .map(|(t, b)| (pos[t.index()], pos[b.index()]))
        .collect();
    edges.sort_unstable();
    let mut seq: Vec<u32> = edges.into_iter().map(|(_, b)| b).collect();
    let mut buf = vec![0u32; seq.len()];
    Ok(inversions(&mut seq, &mut buf))
}

// Merge sort counting pairs i < j with a[i] > a[j].
fn inversions(a: &mut [u32], buf: &mut [u32]) -> u64 {
    let n = a.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = {
        let (l, r) = a.split_at_mut(mid);
        let (bl, br) = buf.split_at_mut(mid);
        inversions(l, bl) + inversions(r, br)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if a[i] <= a[j] {
            buf[k] = a[i];
            i += 1;
        } else {
            buf[k] = a[j];
            count += (mid - i) as u64;
            j += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&a[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&a[j..n]);
    a.copy_from_slice(&buf[..n]);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(tops: usize, bottoms: usize, edges: &[(usize, usize)]) -> (BipartiteGraph, Vec<VertexId>, Vec<VertexId>) {
        let mut g = BipartiteGraph::new();
        let ts: Vec<_> = (0..tops).map(|i| g.add_vertex(Side::Top, alloc::format!("t{i}"))).collect();
        let bs: Vec<_> = (0..bottoms).map(|i| g.add_vertex(Side::Bottom, alloc::format!("b{i}"))).collect();
        for &(t, b) in edges {
            g.add_edge(ts[t], bs[b]).unwrap();
        }
        (g, ts, bs)
    }

    #[test]
    fn path_is_biplanar_and_laid_out_in_order() {
        // t0 - b0 - t1 - b1 - t2
        let (g, ts, bs) = build(3, 2, &[(0, 0), (1, 0), (1, 1), (2, 1)]);
        assert!(is_biplanar(&g));
        let d = layout(&g).unwrap();
        assert_eq!(d.top_order, ts);
        assert_eq!(d.bottom_order, bs);
        assert_eq!(count_crossings(&g, &d), Ok(0));
    }

    #[test]
    fn cycle_and_spider_are_not_biplanar() {
        let (c4, ..) = build(2, 2, &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert!(!is_biplanar(&c4));
        assert_eq!(layout(&c4), Err(DrawingError::NotBiplanar));

        // t0 adjacent to b0,b1,b2; each bi has a private top leaf.
        let (spider, ..) = build(4, 3, &[(0, 0), (0, 1), (0, 2), (1, 0), (2, 1), (3, 2)]);
        assert!(!is_biplanar(&spider));
    }

    #[test]
    fn degenerate_components() {
        let (single, ts, bs) = build(1, 1, &[(0, 0)]);
        let d = layout(&single).unwrap();
        assert_eq!((d.top_order, d.bottom_order), (ts, bs));

        let (star, ..) = build(1, 3, &[(0, 0), (0, 1), (0, 2)]);
        let d = layout(&star).unwrap();
        assert_eq!(count_crossings(&star, &d), Ok(0));

        let (iso, ..) = build(2, 1, &[]);
        assert!(is_biplanar(&iso));
        assert_eq!(layout(&iso).unwrap().top_order.len(), 2);
        assert!(is_biplanar(&BipartiteGraph::new()));
    }

    #[test]
    fn crossing_count_examples() {
        // edges (t0,b1), (t1,b0)
        let (g, ts, bs) = build(2, 2, &[(0, 1), (1, 0)]);
        let d = Drawing { top_order: ts.clone(), bottom_order: bs.clone() };
        assert_eq!(count_crossings(&g, &d), Ok(1));
        let d = Drawing { top_order: ts, bottom_order: vec![bs[1], bs[0]] };
        assert_eq!(count_crossings(&g, &d), Ok(0));
    }

    #[test]
    fn crossing_count_rejects_bad_orders() {
        let (g, ts, bs) = build(2, 1, &[(0, 0)]);
        let missing = Drawing { top_order: vec![ts[0]], bottom_order: bs.clone() };
        assert_eq!(count_crossings(&g, &missing), Err(DrawingError::Missing(ts[1])));
        let swapped = Drawing { top_order: vec![ts[0], ts[1], bs[0]], bottom_order: vec![] };
        assert_eq!(count_crossings(&g, &swapped), Err(DrawingError::WrongLayer(bs[0])));
        let twice = Drawing { top_order: vec![ts[0], ts[0]], bottom_order: bs };
        assert_eq!(count_crossings(&g, &twice), Err(DrawingError::Repeated(ts[0])));
    }

    #[test]
    fn k22_has_a_crossing_in_every_order() {
        let (g, ts, bs) = build(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        let mut best = u64::MAX;
        for top in [vec![ts[0], ts[1]], vec![ts[1], ts[0]]] {
            for bottom in [vec![bs[0], bs[1]], vec![bs[1], bs[0]]] {
                let d = Drawing { top_order: top.clone(), bottom_order: bottom };
                best = best.min(count_crossings(&g, &d).unwrap());
            }
        }
        assert_eq!(best, 1);
    }
}
