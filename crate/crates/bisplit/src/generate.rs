//! Seeded instance generators.

use std::collections::HashSet;

use bisplit_core::{BipartiteGraph, Side, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("--n must be at least {min} for {kind} instances, got {n}")]
    TooFewVertices { kind: &'static str, n: usize, min: usize },
    #[error("{m} edges requested but only {max} fit between {tops} tops and {bottoms} bottoms")]
    TooManyEdges { m: usize, max: usize, tops: usize, bottoms: usize },
    #[error("could not find {k} disjoint mergeable groups of bottom vertices among {n} vertices")]
    NotEnoughGroups { k: usize, n: usize },
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random caterpillar forest on `n` vertices.
pub fn caterpillar(n: usize, seed: u64) -> Result<BipartiteGraph, GenError> {
    if n < 2 {
        return Err(GenError::TooFewVertices { kind: "caterpillar", n, min: 2 });
    }
    let mut rng = rng(seed);
    let (edges, sides) = caterpillar_forest(&mut rng, n);
    Ok(build(&sides, &edges, &mut rng))
}

/// Edges and layers of a caterpillar forest, vertices numbered `0..n`.
fn caterpillar_forest(rng: &mut ChaCha8Rng, n: usize) -> (Vec<(usize, usize)>, Vec<Side>) {
    let mut sides = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n);
    let components = 1 + rng.random_range(0..=n / 12);
    let mut sizes = vec![1usize; components];
    for _ in components..n {
        let c = rng.random_range(0..components);
        sizes[c] += 1;
    }
    for size in sizes {
        let base = sides.len();
        let start = if rng.random_bool(0.5) { Side::Top } else { Side::Bottom };
        let spine = rng.random_range(1..=size.min(2 + size / 2));
        for i in 0..spine {
            sides.push(if i % 2 == 0 { start } else { start.opposite() });
            if i > 0 {
                edges.push((base + i - 1, base + i));
            }
        }
        for _ in spine..size {
            let s = base + rng.random_range(0..spine);
            sides.push(sides[s].opposite());
            edges.push((s, sides.len() - 1));
        }
    }
    (edges, sides)
}

/// Vertices of a shuffled relabelling, tops named `t*` and bottoms `b*`.
fn build(sides: &[Side], edges: &[(usize, usize)], rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let mut order: Vec<usize> = (0..sides.len()).collect();
    order.shuffle(rng);
    let mut g = BipartiteGraph::with_capacity(sides.len());
    let mut id = vec![VertexId(0); sides.len()];
    let (mut t, mut b) = (0, 0);
    for &v in &order {
        let name = match sides[v] {
            Side::Top => {
                t += 1;
                format!("t{t}")
            }
            Side::Bottom => {
                b += 1;
                format!("b{b}")
            }
        };
        id[v] = g.add_vertex(sides[v], name);
    }
    let mut edges: Vec<(VertexId, VertexId)> = edges.iter().map(|&(u, v)| (id[u], id[v])).collect();
    edges.shuffle(rng);
    for (u, v) in edges {
        g.add_edge(u, v).expect("generated edges join opposite layers once");
    }
    g
}

/// A caterpillar forest on `n` vertices in which `k` disjoint groups of
/// bottom vertices (two or three each) are merged into one vertex per group.
/// Splitting the merged vertices back apart gives the forest, so the result
/// is a YES instance for budget `k`.
pub fn planted(n: usize, k: usize, seed: u64) -> Result<BipartiteGraph, GenError> {
    let min = (4 * k).max(2);
    if n < min {
        return Err(GenError::TooFewVertices { kind: "planted", n, min });
    }
    let mut rng = rng(seed);
    for _ in 0..64 {
        let (edges, sides) = caterpillar_forest(&mut rng, n);
        if let Some((sides, edges)) = merge_groups(&mut rng, &sides, &edges, k) {
            return Ok(build(&sides, &edges, &mut rng));
        }
    }
    Err(GenError::NotEnoughGroups { k, n })
}

fn merge_groups(
    rng: &mut ChaCha8Rng,
    sides: &[Side],
    edges: &[(usize, usize)],
    k: usize,
) -> Option<(Vec<Side>, Vec<(usize, usize)>)> {
    let n = sides.len();
    let mut nbrs = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let mut bottoms: Vec<usize> = (0..n).filter(|&v| sides[v] == Side::Bottom && !nbrs[v].is_empty()).collect();
    bottoms.shuffle(rng);
    // rep[v] = vertex that v is merged into
    let mut rep: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut groups = 0;
    let mut i = 0;
    while groups < k && i < bottoms.len() {
        let lead = bottoms[i];
        i += 1;
        if used[lead] {
            continue;
        }
        let want = if rng.random_bool(0.25) { 3 } else { 2 };
        let mut members = vec![lead];
        let mut tops: HashSet<usize> = nbrs[lead].iter().copied().collect();
        for &b in &bottoms[i..] {
            if members.len() == want {
                break;
            }
            if used[b] || nbrs[b].iter().any(|t| tops.contains(t)) {
                continue;
            }
            tops.extend(nbrs[b].iter().copied());
            members.push(b);
        }
        if members.len() < 2 {
            continue;
        }
        for &b in &members {
            used[b] = true;
            rep[b] = lead;
        }
        groups += 1;
    }
    if groups < k {
        return None;
    }
    let mut renum = vec![usize::MAX; n];
    let mut new_sides = Vec::new();
    for v in 0..n {
        if rep[v] == v {
            renum[v] = new_sides.len();
            new_sides.push(sides[v]);
        }
    }
    let new_edges = edges.iter().map(|&(u, v)| (renum[rep[u]], renum[rep[v]])).collect();
    Some((new_sides, new_edges))
}

/// `m` distinct edges drawn uniformly between `ceil(n/2)` tops and
/// `floor(n/2)` bottoms.
pub fn random(n: usize, m: usize, seed: u64) -> Result<BipartiteGraph, GenError> {
    let (tops, bottoms) = (n.div_ceil(2), n / 2);
    let max = tops * bottoms;
    if m > max {
        return Err(GenError::TooManyEdges { m, max, tops, bottoms });
    }
    let mut rng = rng(seed);
    let mut sides = vec![Side::Top; tops];
    sides.resize(n, Side::Bottom);
    let mut chosen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    if m * 2 > max {
        let mut all: Vec<(usize, usize)> = (0..tops).flat_map(|t| (0..bottoms).map(move |b| (t, tops + b))).collect();
        all.shuffle(&mut rng);
        all.truncate(m);
        edges = all;
    } else {
        while edges.len() < m {
            let e = (rng.random_range(0..tops), tops + rng.random_range(0..bottoms));
            if chosen.insert(e) {
                edges.push(e);
            }
        }
    }
    Ok(build(&sides, &edges, &mut rng))
}
