//! Exhaustive reference solver for small instances.
//!
//! Tries every set of at most `k` bottom vertices and every way to partition
//! their edges, and decides planarity of each resulting graph by searching
//! over top-layer orders. None of this goes through the kernel, the
//! caterpillar test or [`apply_splits`](crate::solution::apply_splits).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::biplanarity::Drawing;
use crate::graph::{BipartiteGraph, Side, VertexId};
use crate::solution::{Block, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
    pub max_budget: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: 12,
            max_budget: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("the oracle is limited to {cap} vertices, the graph has {vertices}")]
    TooManyVertices { vertices: usize, cap: usize },
    #[error("the oracle is limited to k <= {cap}, got {k}")]
    BudgetTooLarge { k: u32, cap: u32 },
}

/// A solution found by the oracle, with the split graph it built and a
/// crossing-free drawing of that graph.
#[derive(Debug, Clone)]
pub struct OracleWitness {
    pub solution: Solution,
    pub split_graph: BipartiteGraph,
    pub drawing: Drawing,
}

/// `Ok(None)` means no set of at most `k` split vertices works.
pub fn oracle_solve(
    g: &BipartiteGraph,
    k: u32,
    config: &OracleConfig,
) -> Result<Option<OracleWitness>, OracleError> {
    if g.vertex_count() > config.max_vertices {
        return Err(OracleError::TooManyVertices {
            vertices: g.vertex_count(),
            cap: config.max_vertices,
        });
    }
    if k > config.max_budget {
        return Err(OracleError::BudgetTooLarge { k, cap: config.max_budget });
    }
    let bottoms: Vec<VertexId> = g.bottom_vertices().collect();
    for size in 0..=(k as usize).min(bottoms.len()) {
        let mut chosen = Vec::with_capacity(size);
        if let Some(w) = subsets_from(g, &bottoms, 0, size, &mut chosen) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn subsets_from(
    g: &BipartiteGraph,
    bottoms: &[VertexId],
    from: usize,
    size: usize,
    chosen: &mut Vec<VertexId>,
) -> Option<OracleWitness> {
    if chosen.len() == size {
        let options: Vec<Vec<Vec<Block>>> = chosen
            .iter()
            .map(|&v| {
                let nbrs = g.neighbors(v).expect("bottom vertex");
                all_partitions(nbrs).into_iter().filter(|p| p.len() >= 2).collect()
            })
            .collect();
        let mut picked = Vec::with_capacity(size);
        return products(g, chosen, &options, &mut picked);
    }
    for i in from..bottoms.len() {
        chosen.push(bottoms[i]);
        let found = subsets_from(g, bottoms, i + 1, size, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn products(
    g: &BipartiteGraph,
    chosen: &[VertexId],
    options: &[Vec<Vec<Block>>],
    picked: &mut Vec<usize>,
) -> Option<OracleWitness> {
    let depth = picked.len();
    if depth == chosen.len() {
        let splits: Vec<(VertexId, Vec<Block>)> = chosen
            .iter()
            .zip(picked.iter())
            .zip(options)
            .map(|((&v, &i), opts)| (v, opts[i].clone()))
            .collect();
        let split_graph = split_by_hand(g, &splits);
        let drawing = find_planar_ordering(&split_graph)?;
        let mut solution = Solution::new();
        for (v, blocks) in splits {
            solution.insert(v, blocks);
        }
        return Some(OracleWitness { solution, split_graph, drawing });
    }
    for i in 0..options[depth].len() {
        picked.push(i);
        let found = products(g, chosen, options, picked);
        picked.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Every partition of `items`, built by placing each item into an existing
/// block or a new one.
fn all_partitions(items: &[VertexId]) -> Vec<Vec<Block>> {
    let mut out: Vec<Vec<Block>> = vec![Vec::new()];
    for &x in items {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(x);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![x]);
            next.push(q);
        }
        out = next;
    }
    out
}

// Builds the split graph directly; copy `i` (from one) of `v` is named
// `label#i`, blocks ordered by smallest member.
fn split_by_hand(g: &BipartiteGraph, splits: &[(VertexId, Vec<Block>)]) -> BipartiteGraph {
    let mut h = BipartiteGraph::with_capacity(g.id_bound());
    let is_split = |v: VertexId| splits.iter().any(|(s, _)| *s == v);
    for v in g.vertices() {
        if !is_split(v) {
            let side = g.side(v).expect("vertex");
            h.restore_vertex(v, side, String::from(g.label(v).unwrap_or(""))).expect("fresh id");
        }
    }
    for (t, b) in g.edges() {
        if !is_split(b) {
            h.add_edge(t, b).expect("edge of g");
        }
    }
    for (v, blocks) in splits {
        let mut blocks = blocks.clone();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        let label = g.label(*v).unwrap_or("");
        for (i, block) in blocks.iter().enumerate() {
            let c = h.add_vertex(Side::Bottom, format!("{label}#{}", i + 1));
            for &t in block {
                h.add_edge(t, c).expect("edge of g");
            }
        }
    }
    h
}

/// A crossing-free drawing of `g`, found by searching over orders of the top
/// layer, or `None` if there is none.
///
/// For a fixed top order a crossing-free bottom order exists iff no two
/// bottom vertices have neighbor spans that overlap in more than one
/// position, and no degree-one bottom vertex hangs strictly inside another
/// bottom vertex's span. The search builds the top order left to right over
/// subsets of placed vertices, one connected component at a time.
pub fn find_planar_ordering(g: &BipartiteGraph) -> Option<Drawing> {
    let mut drawing = Drawing::default();
    for comp in components(g) {
        let tops: Vec<VertexId> = comp.iter().copied().filter(|&v| g.side(v) == Some(Side::Top)).collect();
        let bottoms: Vec<VertexId> = comp.iter().copied().filter(|&v| g.side(v) == Some(Side::Bottom)).collect();
        let order = order_tops(g, &tops, &bottoms)?;
        let mut pos = vec![0usize; g.id_bound()];
        for (i, &t) in order.iter().enumerate() {
            pos[t.index()] = i;
        }
        let mut keyed: Vec<((usize, usize), VertexId)> = bottoms
            .iter()
            .map(|&b| {
                let ps = g.neighbors(b).expect("vertex").iter().map(|t| pos[t.index()]);
                let lo = ps.clone().min().unwrap_or(0);
                let hi = ps.max().unwrap_or(0);
                ((lo, hi), b)
            })
            .collect();
        keyed.sort_unstable();
        drawing.top_order.extend(order);
        drawing.bottom_order.extend(keyed.into_iter().map(|(_, b)| b));
    }
    Some(drawing)
}

fn components(g: &BipartiteGraph) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; g.id_bound()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s.index()] {
            continue;
        }
        seen[s.index()] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &u in g.neighbors(comp[i]).expect("vertex") {
                if !seen[u.index()] {
                    seen[u.index()] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

fn order_tops(g: &BipartiteGraph, tops: &[VertexId], bottoms: &[VertexId]) -> Option<Vec<VertexId>> {
    let p = tops.len();
    assert!(p < 28, "top layer too large for the ordering search");
    if p <= 1 {
        return Some(tops.to_vec());
    }
    let index = |t: VertexId| tops.iter().position(|&x| x == t).expect("top of component");
    let masks: Vec<u32> = bottoms
        .iter()
        .map(|&b| g.neighbors(b).expect("vertex").iter().fold(0u32, |m, &t| m | 1 << index(t)))
        .collect();
    let mut has_pendant = vec![false; p];
    for &m in &masks {
        if m.count_ones() == 1 {
            has_pendant[m.trailing_zeros() as usize] = true;
        }
    }
    let full: u32 = (1u32 << p) - 1;
    let spans = |placed: u32| masks.iter().filter(|&&m| m & placed != 0 && m & !placed & full != 0).count();

    const UNSEEN: u8 = u8::MAX;
    let mut last = vec![UNSEEN; 1 << p];
    last[0] = 0;
    for s in 0..full {
        if last[s as usize] == UNSEEN {
            continue;
        }
        for t in 0..p {
            let next = s | 1 << t;
            if next == s || last[next as usize] != UNSEEN {
                continue;
            }
            if spans(next) > 1 {
                continue;
            }
            if has_pendant[t] && masks.iter().any(|&m| m & s != 0 && m & !next & full != 0) {
                continue;
            }
            last[next as usize] = t as u8;
        }
    }
    if last[full as usize] == UNSEEN {
        return None;
    }
    let mut order = Vec::with_capacity(p);
    let mut s = full;
    while s != 0 {
        let t = last[s as usize] as usize;
        order.push(tops[t]);
        s &= !(1 << t);
    }
    order.reverse();
    Some(order)
}
