//! Polynomial kernel for the split-vertex problem.
//!
//! The pipeline runs in two reductions. The first one splits every bottom
//! vertex that cannot stay whole (three or more neighbors of degree at least
//! two) and drops leaves hanging off high-degree vertices. After it, every
//! bottom vertex has degree at most two, which bounds the top degrees and
//! the number of high-degree tops in any YES instance. The second one deals
//! with what lies outside the core (high-degree tops plus their neighbors):
//! free cycles each cost one split, free paths cost nothing, and long paths
//! hanging off the core are shortened. Every change is recorded in a
//! [`ReductionTrace`] so that a solution of the kernel can be lifted back.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use compact_str::CompactString;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{BipartiteGraph, GraphError, Side, VertexId};

/// Graph being reduced, the remaining budget and the splits already forced.
#[derive(Debug, Clone)]
pub struct KernelState {
    pub graph: BipartiteGraph,
    /// Splits still allowed; negative means the instance is a NO instance.
    pub budget: i64,
    pub core: BTreeSet<VertexId>,
    pub forced_splits: BTreeSet<VertexId>,
}

/// Id, layer and label of a vertex that left the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovedVertex {
    pub id: VertexId,
    pub side: Side,
    pub label: CompactString,
}

impl RemovedVertex {
    fn capture(g: &BipartiteGraph, id: VertexId) -> Self {
        RemovedVertex {
            id,
            side: g.side(id).expect("vertex present"),
            label: CompactString::from(g.label(id).unwrap_or("")),
        }
    }
}

/// One reduction step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    /// A bottom vertex that must be split, with its neighbors at removal.
    RemovedForced {
        vertex: RemovedVertex,
        neighbors: Vec<VertexId>,
    },
    /// A degree-one vertex whose neighbor had degree three or more.
    RemovedLeaf {
        vertex: RemovedVertex,
        neighbor: VertexId,
    },
    /// A component that is a cycle; `vertices` starts at the split vertex
    /// and follows the cycle.
    RemovedCycle {
        vertices: Vec<RemovedVertex>,
        split: VertexId,
    },
    /// A component that is a path, listed end to end.
    RemovedPathComponent { vertices: Vec<RemovedVertex> },
    /// `removed_top` was deleted from a path and its two bottom neighbors
    /// `left` and `right` were identified into `merged`. The outer lists are
    /// their other neighbors at that time.
    ShortenedPath(Box<PathShortening>),
}

/// One shortening step of a long path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathShortening {
    pub removed_top: RemovedVertex,
    pub left: RemovedVertex,
    pub right: RemovedVertex,
    pub left_outer: Vec<VertexId>,
    pub right_outer: Vec<VertexId>,
    pub merged: VertexId,
}

impl Reduction {
    pub(crate) fn is_first_phase(&self) -> bool {
        matches!(self, Reduction::RemovedForced { .. } | Reduction::RemovedLeaf { .. })
    }
}

/// Ordered record of all reductions applied to an instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub actions: Vec<Reduction>,
}

/// Which reductions to undo.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    /// Forced splits and leaf removals.
    ForcedAndLeaves,
    /// Cycle and path removals and path shortening.
    CyclesAndPaths,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    /// Undoes, newest first, every recorded step of `phase`.
    pub fn undo(&self, g: &mut BipartiteGraph, phase: Phase) -> Result<(), GraphError> {
        let wanted = phase == Phase::ForcedAndLeaves;
        for action in self.actions.iter().rev().filter(|a| a.is_first_phase() == wanted) {
            undo_one(g, action)?;
        }
        Ok(())
    }

    /// Rebuilds the original graph from a reduced one.
    pub fn replay(&self, reduced: &BipartiteGraph) -> Result<BipartiteGraph, GraphError> {
        let mut g = reduced.clone();
        self.undo(&mut g, Phase::CyclesAndPaths)?;
        self.undo(&mut g, Phase::ForcedAndLeaves)?;
        Ok(g)
    }
}

fn restore(g: &mut BipartiteGraph, v: &RemovedVertex) -> Result<(), GraphError> {
    g.restore_vertex(v.id, v.side, v.label.as_str())
}

fn restore_sequence(g: &mut BipartiteGraph, vs: &[RemovedVertex], closed: bool) -> Result<(), GraphError> {
    for v in vs {
        restore(g, v)?;
    }
    for w in vs.windows(2) {
        g.add_edge(w[0].id, w[1].id)?;
    }
    if closed && vs.len() > 2 {
        g.add_edge(vs[vs.len() - 1].id, vs[0].id)?;
    }
    Ok(())
}

pub(crate) fn undo_one(g: &mut BipartiteGraph, action: &Reduction) -> Result<(), GraphError> {
    match action {
        Reduction::RemovedForced { vertex, neighbors } => {
            restore(g, vertex)?;
            for &t in neighbors {
                g.add_edge(vertex.id, t)?;
            }
        }
        Reduction::RemovedLeaf { vertex, neighbor } => {
            restore(g, vertex)?;
            g.add_edge(vertex.id, *neighbor)?;
        }
        Reduction::RemovedCycle { vertices, .. } => restore_sequence(g, vertices, true)?,
        Reduction::RemovedPathComponent { vertices } => restore_sequence(g, vertices, false)?,
        Reduction::ShortenedPath(step) => {
            let PathShortening {
                removed_top,
                left,
                right,
                left_outer,
                right_outer,
                merged,
            } = &**step;
            g.remove_vertex(*merged)?;
            restore(g, left)?;
            restore(g, right)?;
            restore(g, removed_top)?;
            g.add_edge(left.id, removed_top.id)?;
            g.add_edge(right.id, removed_top.id)?;
            for &t in left_outer {
                g.add_edge(left.id, t)?;
            }
            for &t in right_outer {
                g.add_edge(right.id, t)?;
            }
        }
    }
    Ok(())
}

/// Why an instance was rejected during kernelization.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Rejection {
    #[error("{forced} bottom vertices must be split but the budget is {k}")]
    ForcedSplitsExceedBudget { forced: usize, k: u32 },
    #[error("top vertex {vertex} has degree {degree}, more than budget + 2 = {limit}")]
    DegreeTooHigh {
        vertex: VertexId,
        degree: usize,
        limit: i64,
    },
    #[error("{count} top vertices have degree three or more, more than twice the budget ({limit})")]
    TooManyHighDegreeTops { count: usize, limit: i64 },
    #[error("{cycles} free cycles need a split each but only {budget} splits remain")]
    CyclesExceedBudget { cycles: usize, budget: i64 },
}

/// Budget after each reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budgets {
    pub k: u32,
    pub after_forced: Option<i64>,
    pub after_cycles: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KernelStats {
    pub forced_splits: usize,
    pub top_leaves_removed: usize,
    pub bottom_leaves_removed: usize,
    pub top_leaves_kept: usize,
    pub core_size: usize,
    pub cycles_removed: usize,
    pub path_components_removed: usize,
    pub attached_paths: usize,
    pub shortened_paths: usize,
    pub shortening_steps: usize,
    pub kernel_vertices: usize,
    pub kernel_edges: usize,
    pub size_bound: Option<u128>,
}

/// A reduced instance that still has to be solved.
#[derive(Debug, Clone)]
pub struct Kernel {
    pub state: KernelState,
    pub trace: ReductionTrace,
    pub budgets: Budgets,
    pub stats: KernelStats,
}

/// Proof that the instance is a NO instance, naming the failed check.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{reason}")]
pub struct NoCertificate {
    pub reason: Rejection,
    pub budgets: Budgets,
    pub stats: KernelStats,
}

/// Bottom vertices with at least three neighbors of degree two or more.
/// No such vertex can stay whole in a crossing-free drawing.
pub fn forced_split_set(g: &BipartiteGraph) -> BTreeSet<VertexId> {
    forced_with(g, &g.degrees())
}

fn forced_with(g: &BipartiteGraph, deg: &[u32]) -> BTreeSet<VertexId> {
    g.bottom_vertices()
        .filter(|&b| {
            let adj = g.adj(b);
            adj.len() >= 3 && adj.iter().filter(|t| deg[t.index()] >= 2).count() >= 3
        })
        .collect()
}

/// First reduction: remove the forced split set and charge it to the budget,
/// then, in a single pass over the remaining graph, drop every degree-one
/// vertex whose neighbor has degree three or more.
///
/// A bottom vertex that would be left with exactly one neighbor keeps its
/// smallest top leaf, so its degree becomes two rather than one.
pub fn reduce_forced_and_leaves(g: BipartiteGraph, k: u32) -> (KernelState, ReductionTrace, KernelStats) {
    let deg = g.degrees();
    let forced = forced_with(&g, &deg);
    first_reduction(g, k, deg, forced)
}

fn first_reduction(
    mut g: BipartiteGraph,
    k: u32,
    mut deg: Vec<u32>,
    forced: BTreeSet<VertexId>,
) -> (KernelState, ReductionTrace, KernelStats) {
    let mut trace = ReductionTrace::default();
    let mut stats = KernelStats::default();

    for &v in &forced {
        let vertex = RemovedVertex::capture(&g, v);
        let neighbors = g.remove_vertex(v).expect("forced vertex present");
        for u in &neighbors {
            deg[u.index()] -= 1;
        }
        trace.actions.push(Reduction::RemovedForced { vertex, neighbors });
    }
    stats.forced_splits = forced.len();
    let budget = i64::from(k) - forced.len() as i64;

    // owner[x] = the neighbor of leaf x, for every leaf to remove
    const NONE: u32 = u32::MAX;
    let mut owner = vec![NONE; g.id_bound()];
    for u in g.vertices() {
        let adj = g.adj(u);
        if adj.len() < 3 {
            continue;
        }
        let mut found = 0;
        let mut smallest = VertexId(NONE);
        for &x in adj.iter().filter(|x| deg[x.index()] == 1) {
            owner[x.index()] = u.0;
            found += 1;
            smallest = smallest.min(x);
        }
        if g.side(u) == Some(Side::Bottom) && adj.len() - found == 1 {
            owner[smallest.index()] = NONE;
            stats.top_leaves_kept += 1;
        }
    }
    let mut ids = Vec::new();
    for (i, &o) in owner.iter().enumerate() {
        if o == NONE {
            continue;
        }
        let leaf = VertexId(i as u32);
        let vertex = RemovedVertex::capture(&g, leaf);
        match vertex.side {
            Side::Top => stats.top_leaves_removed += 1,
            Side::Bottom => stats.bottom_leaves_removed += 1,
        }
        trace.actions.push(Reduction::RemovedLeaf { vertex, neighbor: VertexId(o) });
        ids.push(leaf);
    }
    g.delete_vertices(&ids).expect("leaves are distinct and present");
    debug_assert!(g.bottom_vertices().all(|b| g.deg(b) <= 2));

    let state = KernelState {
        graph: g,
        budget,
        core: BTreeSet::new(),
        forced_splits: forced,
    };
    (state, trace, stats)
}

/// Largest top degree, if it exceeds `budget + 2`.
pub fn degree_violation(state: &KernelState) -> Option<(VertexId, usize)> {
    let limit = state.budget + 2;
    state
        .graph
        .top_vertices()
        .map(|t| (t, state.graph.deg(t)))
        .filter(|&(_, d)| d as i64 > limit)
        .max_by_key(|&(t, d)| (d, core::cmp::Reverse(t)))
}

/// Every top vertex has degree at most `budget + 2`.
pub fn within_degree_limit(state: &KernelState) -> bool {
    degree_violation(state).is_none()
}

pub fn high_degree_top_count(state: &KernelState) -> usize {
    state.graph.top_vertices().filter(|&t| state.graph.deg(t) >= 3).count()
}

/// At most `2 * budget` top vertices have degree three or more.
pub fn within_high_degree_count(state: &KernelState) -> bool {
    high_degree_top_count(state) as i64 <= 2 * state.budget
}

/// Top vertices of degree three or more together with all their neighbors.
pub fn extract_core(state: &KernelState) -> BTreeSet<VertexId> {
    let g = &state.graph;
    let mut core = BTreeSet::new();
    for t in g.top_vertices().filter(|&t| g.deg(t) >= 3) {
        core.insert(t);
        core.extend(g.adj(t).iter().copied());
    }
    core
}

/// Maximum kernel size for a YES instance with budgets `k1` after the first
/// reduction and `k2` after the second: `C(2k1(k1+2), 2) * (k1+2) * (2k2+5)`.
pub fn kernel_size_bound(k1: i64, k2: i64) -> Option<u128> {
    if k1 < 0 || k2 < 0 {
        return None;
    }
    let (k1, k2) = (k1 as u128, k2 as u128);
    let core = 2 * k1 * (k1 + 2);
    let pairs = core * core.saturating_sub(1) / 2;
    Some(pairs.saturating_mul(k1 + 2).saturating_mul(2 * k2 + 5))
}

/// Longest path, in vertices, that the second reduction leaves unshortened.
pub fn path_threshold(budget: i64) -> usize {
    (2 * budget.max(0) + 5) as usize
}

/// Second reduction: remove components outside the core (each cycle costs
/// one split of its smallest bottom vertex, paths cost nothing), then
/// shorten every remaining non-core path longer than `2 * budget + 5`
/// vertices by deleting the top vertex nearest its middle and identifying
/// that vertex's two bottom neighbors, until it is short enough.
///
/// Shortening is skipped once the budget is negative.
pub fn reduce_cycles_and_paths(state: &mut KernelState, trace: &mut ReductionTrace, stats: &mut KernelStats) {
    let g = &mut state.graph;
    // components outside the core are paths and cycles: every top there has
    // degree at most two, and so does every bottom after the first reduction
    let mut done = vec![false; g.id_bound()];
    let mut stack: Vec<VertexId> = state.core.iter().copied().filter(|&v| g.contains(v)).collect();
    for v in &stack {
        done[v.index()] = true;
    }
    while let Some(x) = stack.pop() {
        for &y in g.adj(x) {
            if !done[y.index()] {
                done[y.index()] = true;
                stack.push(y);
            }
        }
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    for &v in &ids {
        if done[v.index()] || g.deg(v) > 1 {
            continue;
        }
        let order = walk(g, v, |_| true);
        for u in &order {
            done[u.index()] = true;
        }
        let vertices = remove_all(g, &order);
        trace.actions.push(Reduction::RemovedPathComponent { vertices });
        stats.path_components_removed += 1;
    }
    for &v in &ids {
        if done[v.index()] {
            continue;
        }
        let ring = walk(g, v, |_| true);
        let split = ring
            .iter()
            .copied()
            .filter(|&u| g.side(u) == Some(Side::Bottom))
            .min()
            .expect("a cycle has bottom vertices");
        let order = if split == v { ring } else { walk(g, split, |_| true) };
        for u in &order {
            done[u.index()] = true;
        }
        let vertices = remove_all(g, &order);
        trace.actions.push(Reduction::RemovedCycle { vertices, split });
        state.forced_splits.insert(split);
        state.budget -= 1;
        stats.cycles_removed += 1;
    }

    if state.budget >= 0 {
        let threshold = path_threshold(state.budget);
        for path in attached_paths(g, &state.core) {
            stats.attached_paths += 1;
            if path.len() > threshold {
                stats.shortened_paths += 1;
                stats.shortening_steps += shorten(g, path, threshold, trace);
            }
        }
    }
    stats.kernel_vertices = g.vertex_count();
    stats.kernel_edges = g.edge_count();
}

// Visits a path or cycle of vertices accepted by `keep`, starting at `start`.
fn walk(g: &BipartiteGraph, start: VertexId, keep: impl Fn(VertexId) -> bool) -> Vec<VertexId> {
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let next = g
            .adj(cur)
            .iter()
            .copied()
            .filter(|&u| keep(u) && Some(u) != prev)
            .min();
        match next {
            Some(n) if n != start => {
                order.push(n);
                prev = Some(cur);
                cur = n;
            }
            _ => break,
        }
    }
    order
}

fn remove_all(g: &mut BipartiteGraph, order: &[VertexId]) -> Vec<RemovedVertex> {
    let vertices: Vec<_> = order.iter().map(|&v| RemovedVertex::capture(g, v)).collect();
    g.delete_closed_set(order);
    vertices
}

/// Maximal paths of non-core vertices, each listed end to end starting from
/// its smaller-id end.
fn attached_paths(g: &BipartiteGraph, core: &BTreeSet<VertexId>) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; g.id_bound()];
    for &c in core {
        if c.index() < seen.len() {
            seen[c.index()] = true;
        }
    }
    let free = |v: VertexId| !core.contains(&v);
    let mut out = Vec::new();
    for v in g.vertices() {
        if seen[v.index()] {
            continue;
        }
        if g.adj(v).iter().filter(|&&u| free(u)).count() > 1 {
            continue;
        }
        let path = walk(g, v, free);
        for &u in &path {
            seen[u.index()] = true;
        }
        out.push(path);
    }
    debug_assert!(g.vertices().all(|v| seen[v.index()]), "non-core vertices form paths");
    out
}

// Shortens `path` to at most `threshold` vertices; returns the step count.
// The path is kept as two stacks that meet in the middle so each step is O(1).
fn shorten(g: &mut BipartiteGraph, path: Vec<VertexId>, threshold: usize, trace: &mut ReductionTrace) -> usize {
    let mut n = path.len();
    let half = n / 2;
    let mut left: Vec<VertexId> = path[..half].to_vec();
    let mut right: Vec<VertexId> = path[half..].iter().rev().copied().collect();
    let mut steps = 0;
    while n > threshold {
        let h = n / 2;
        // window holds path positions h-2 ..= h+2
        let mut window = [VertexId(0); 5];
        window[1] = left.pop().expect("window");
        window[0] = left.pop().expect("window");
        for slot in window.iter_mut().skip(2) {
            *slot = right.pop().expect("window");
        }
        let centre2 = n as i64 - 1;
        let (idx, _) = (1..4)
            .filter(|&j| g.side(window[j]) == Some(Side::Top))
            .map(|j| {
                let pos = (h + j - 2) as i64;
                (j, ((2 * pos - centre2).abs(), window[j]))
            })
            .min_by_key(|&(_, key)| key)
            .expect("a top vertex near the middle");
        let (a, t, b) = (window[idx - 1], window[idx], window[idx + 1]);

        let removed_top = RemovedVertex::capture(g, t);
        let left_rec = RemovedVertex::capture(g, a);
        let right_rec = RemovedVertex::capture(g, b);
        let left_outer: Vec<_> = g.adj(a).iter().copied().filter(|&x| x != t).collect();
        let right_outer: Vec<_> = g.adj(b).iter().copied().filter(|&x| x != t).collect();
        g.delete_vertex(t).expect("middle vertex present");
        let merged = g.identify_bottom_vertices(a, b).expect("path neighbors share no top");
        trace.actions.push(Reduction::ShortenedPath(Box::new(PathShortening {
            removed_top,
            left: left_rec,
            right: right_rec,
            left_outer,
            right_outer,
            merged,
        })));

        let mut rest: Vec<VertexId> = Vec::with_capacity(3);
        rest.extend_from_slice(&window[..idx - 1]);
        rest.push(merged);
        rest.extend_from_slice(&window[idx + 2..]);
        n -= 2;
        left.push(rest[0]);
        for &v in rest[1..].iter().rev() {
            right.push(v);
        }
        debug_assert_eq!(left.len(), n / 2);
        steps += 1;
    }
    steps
}

/// Runs both reductions with the early rejections in between.
pub fn kernelize(g: &BipartiteGraph, k: u32) -> Result<Kernel, NoCertificate> {
    let reject = |reason, budgets, stats| NoCertificate { reason, budgets, stats };
    let deg = g.degrees();
    let forced = forced_with(g, &deg);
    if forced.len() > k as usize {
        // rejected before any vertex is removed
        let budgets = Budgets {
            k,
            after_forced: Some(i64::from(k) - forced.len() as i64),
            after_cycles: None,
        };
        let stats = KernelStats {
            forced_splits: forced.len(),
            ..KernelStats::default()
        };
        let forced = forced.len();
        return Err(reject(Rejection::ForcedSplitsExceedBudget { forced, k }, budgets, stats));
    }

    let (mut state, mut trace, mut stats) = first_reduction(g.clone(), k, deg, forced);
    let mut budgets = Budgets {
        k,
        after_forced: Some(state.budget),
        after_cycles: None,
    };
    if let Some((vertex, degree)) = degree_violation(&state) {
        let limit = state.budget + 2;
        return Err(reject(Rejection::DegreeTooHigh { vertex, degree, limit }, budgets, stats));
    }
    if !within_high_degree_count(&state) {
        let count = high_degree_top_count(&state);
        let limit = 2 * state.budget;
        return Err(reject(Rejection::TooManyHighDegreeTops { count, limit }, budgets, stats));
    }

    state.core = extract_core(&state);
    stats.core_size = state.core.len();
    let k1 = state.budget;

    reduce_cycles_and_paths(&mut state, &mut trace, &mut stats);
    budgets.after_cycles = Some(state.budget);
    if state.budget < 0 {
        let cycles = stats.cycles_removed;
        return Err(reject(Rejection::CyclesExceedBudget { cycles, budget: k1 }, budgets, stats));
    }
    stats.size_bound = kernel_size_bound(k1, state.budget);
    debug_assert!(stats.size_bound.is_some_and(|b| stats.kernel_vertices as u128 <= b));
    Ok(Kernel { state, trace, budgets, stats })
}
