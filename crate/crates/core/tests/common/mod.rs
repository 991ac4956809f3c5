#![allow(dead_code)]

use bisplit_core::{BipartiteGraph, Side, VertexId};
use rand::Rng;

/// Graph with `tops` top vertices `t0..`, `bottoms` bottom vertices `b0..`
/// and edge `(i, j)` present when bit `i * bottoms + j` of `mask` is set.
pub fn from_mask(tops: usize, bottoms: usize, mask: u64) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    let ts: Vec<VertexId> = (0..tops).map(|i| g.add_vertex(Side::Top, format!("t{i}"))).collect();
    let bs: Vec<VertexId> = (0..bottoms).map(|j| g.add_vertex(Side::Bottom, format!("b{j}"))).collect();
    for i in 0..tops {
        for j in 0..bottoms {
            if mask >> (i * bottoms + j) & 1 == 1 {
                g.add_edge(ts[i], bs[j]).unwrap();
            }
        }
    }
    g
}

/// Every bipartite graph on at most `max_vertices` labelled vertices with
/// both layers nonempty.
pub fn all_small(max_vertices: usize) -> impl Iterator<Item = BipartiteGraph> {
    (2..=max_vertices).flat_map(|n| {
        (1..n).flat_map(move |tops| {
            let bottoms = n - tops;
            (0..1u64 << (tops * bottoms)).map(move |m| from_mask(tops, bottoms, m))
        })
    })
}

pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> BipartiteGraph {
    let n = rng.random_range(2..=max_vertices);
    let tops = rng.random_range(1..n);
    let bottoms = n - tops;
    let mut cells: Vec<usize> = (0..tops * bottoms).collect();
    let m = rng.random_range(0..=max_edges.min(cells.len()));
    let mut mask = 0u64;
    for i in 0..m {
        let j = rng.random_range(i..cells.len());
        cells.swap(i, j);
        mask |= 1 << cells[i];
    }
    from_mask(tops, bottoms, mask)
}

/// A small dense core with long paths, cycles and leaves attached, so that
/// every reduction and its lifting step gets exercised.
pub fn structured_graph(rng: &mut impl Rng, max_vertices: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::new();
    let core_tops = rng.random_range(1..=3);
    let core_bottoms = rng.random_range(1..=4);
    let mut vs: Vec<VertexId> = Vec::new();
    let ts: Vec<_> = (0..core_tops).map(|i| g.add_vertex(Side::Top, format!("t{i}"))).collect();
    let bs: Vec<_> = (0..core_bottoms).map(|j| g.add_vertex(Side::Bottom, format!("b{j}"))).collect();
    for &t in &ts {
        for &b in &bs {
            if rng.random_bool(0.6) {
                g.add_edge(t, b).unwrap();
            }
        }
    }
    vs.extend(&ts);
    vs.extend(&bs);
    let mut counter = 0;
    while g.vertex_count() < max_vertices {
        let room = max_vertices - g.vertex_count();
        match rng.random_range(0..10) {
            0..=5 => {
                let from = vs[rng.random_range(0..vs.len())];
                let len = rng.random_range(1..=room.min(12));
                let mut prev = from;
                for _ in 0..len {
                    let side = g.side(prev).unwrap().opposite();
                    counter += 1;
                    let v = g.add_vertex(side, format!("p{counter}"));
                    g.add_edge(prev, v).unwrap();
                    vs.push(v);
                    prev = v;
                }
                // sometimes close the path back into the graph
                if rng.random_bool(0.2) {
                    let side = g.side(prev).unwrap().opposite();
                    let targets: Vec<_> = vs
                        .iter()
                        .copied()
                        .filter(|&v| g.side(v) == Some(side) && !g.has_edge(prev, v))
                        .collect();
                    if !targets.is_empty() {
                        let v = targets[rng.random_range(0..targets.len())];
                        g.add_edge(prev, v).unwrap();
                    }
                }
            }
            6..=7 if room >= 4 => {
                let len = 2 * rng.random_range(2..=(room / 2).min(5));
                let mut ring = Vec::new();
                for i in 0..len {
                    counter += 1;
                    let side = if i % 2 == 0 { Side::Top } else { Side::Bottom };
                    ring.push(g.add_vertex(side, format!("c{counter}")));
                }
                for i in 0..len {
                    g.add_edge(ring[i], ring[(i + 1) % len]).unwrap();
                }
                vs.extend(ring);
            }
            _ => {
                let from = vs[rng.random_range(0..vs.len())];
                counter += 1;
                let side = g.side(from).unwrap().opposite();
                let v = g.add_vertex(side, format!("l{counter}"));
                g.add_edge(from, v).unwrap();
            }
        }
    }
    g
}
