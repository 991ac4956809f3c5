//! Turning a kernel solution into a solution and drawing of the input.
//!
//! The kernel's drawing is extended step by step while the reductions are
//! undone in reverse. Bottom positions are tracked as [`Slot`]s so that the
//! copies of a split vertex keep their place while the graph changes under
//! them. Each phase ends with a crossing count; if a local step did not
//! produce a planar drawing the phase falls back to a fresh layout of the
//! split graph, which is counted in [`LiftedResult::relayouts`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::biplanarity::{count_crossings, layout, Drawing, DrawingError};
use crate::graph::{BipartiteGraph, GraphError, Side, VertexId};
use crate::kernel::{undo_one, Kernel, PathShortening, Phase, Reduction};
use crate::solution::{apply_splits, Solution, SolutionError, SplitGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solution(#[from] SolutionError),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error("kernel solution splits {0}, which does not have degree two")]
    UnexpectedSplit(VertexId),
    #[error("lifted drawing has {0} crossings")]
    Crossings(u64),
    #[error("lifted solution splits {used} vertices, budget is {k}")]
    TooManySplits { used: usize, k: u32 },
    #[error("contracting the split copies does not give back the input graph")]
    ContractionMismatch,
}

/// Solution and crossing-free drawing of the unreduced graph.
#[derive(Debug, Clone)]
pub struct LiftedResult {
    pub solution: Solution,
    /// The input graph with the solution applied; `drawing` refers to its ids.
    pub split: SplitGraph,
    pub drawing: Drawing,
    /// Phases that needed a fresh layout instead of the local reinsertion.
    pub relayouts: usize,
}

/// A bottom position: an unsplit vertex, or the copy of a split vertex
/// whose block has the given smallest top neighbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    Vertex(VertexId),
    Copy(VertexId, VertexId),
}

fn slot_of(sol: &Solution, b: VertexId, top: VertexId) -> Slot {
    match sol.blocks(b) {
        None => Slot::Vertex(b),
        Some(blocks) => {
            let block = blocks.iter().find(|blk| blk.contains(&top)).expect("block containing the edge");
            Slot::Copy(b, block[0])
        }
    }
}

#[derive(Debug, Clone)]
struct Stage {
    graph: BipartiteGraph,
    solution: Solution,
    tops: Vec<VertexId>,
    bottoms: Vec<Slot>,
}

impl Stage {
    fn resolve(&self) -> Result<(SplitGraph, Drawing), LiftError> {
        let split = apply_splits(&self.graph, &self.solution)?;
        let mut bottom_order = Vec::with_capacity(self.bottoms.len());
        for &s in &self.bottoms {
            let id = match s {
                Slot::Vertex(v) => v,
                Slot::Copy(v, key) => {
                    let blocks = self.solution.blocks(v).ok_or(DrawingError::Missing(v))?;
                    let i = blocks.iter().position(|b| b[0] == key).ok_or(DrawingError::Missing(v))?;
                    split.copies(v).expect("split vertex")[i]
                }
            };
            bottom_order.push(id);
        }
        let drawing = Drawing {
            top_order: self.tops.clone(),
            bottom_order,
        };
        Ok((split, drawing))
    }

    fn is_planar(&self) -> bool {
        self.resolve()
            .ok()
            .and_then(|(split, d)| count_crossings(&split.graph, &d).ok())
            == Some(0)
    }

    fn relayout(&mut self) -> Result<(), LiftError> {
        let split = apply_splits(&self.graph, &self.solution)?;
        let d = layout(&split.graph)?;
        self.set_from(&split, &d);
        Ok(())
    }

    fn set_from(&mut self, split: &SplitGraph, d: &Drawing) {
        self.tops = d.top_order.clone();
        self.bottoms = d
            .bottom_order
            .iter()
            .map(|&c| match split.origin(c) {
                Some(copy) => {
                    let blocks = self.solution.blocks(copy.vertex).expect("split vertex");
                    Slot::Copy(copy.vertex, blocks[copy.block][0])
                }
                None => Slot::Vertex(c),
            })
            .collect();
    }

    fn check(&mut self, relayouts: &mut usize) -> Result<(), LiftError> {
        if !self.is_planar() {
            *relayouts += 1;
            self.relayout()?;
        }
        Ok(())
    }
}

/// Doubly linked order with O(log n) insertion next to a known element.
#[derive(Debug, Clone)]
struct Chain<K: Ord + Copy> {
    links: BTreeMap<K, (Option<K>, Option<K>)>,
    head: Option<K>,
    tail: Option<K>,
}

impl<K: Ord + Copy> Chain<K> {
    fn from_vec(items: &[K]) -> Self {
        let mut c = Chain {
            links: BTreeMap::new(),
            head: None,
            tail: None,
        };
        for &k in items {
            c.push_back(k);
        }
        c
    }

    fn to_vec(&self) -> Vec<K> {
        let mut out = Vec::with_capacity(self.links.len());
        let mut cur = self.head;
        while let Some(k) = cur {
            out.push(k);
            cur = self.links[&k].1;
        }
        out
    }

    fn next(&self, k: K) -> Option<K> {
        self.links.get(&k).and_then(|l| l.1)
    }

    fn prev(&self, k: K) -> Option<K> {
        self.links.get(&k).and_then(|l| l.0)
    }

    fn set_next(&mut self, at: Option<K>, to: Option<K>) {
        match at {
            Some(a) => self.links.get_mut(&a).expect("linked").1 = to,
            None => self.head = to,
        }
    }

    fn set_prev(&mut self, at: Option<K>, to: Option<K>) {
        match at {
            Some(a) => self.links.get_mut(&a).expect("linked").0 = to,
            None => self.tail = to,
        }
    }

    fn push_back(&mut self, k: K) {
        let last = self.tail;
        self.links.insert(k, (last, None));
        self.set_next(last, Some(k));
        self.tail = Some(k);
    }

    fn insert_after(&mut self, anchor: K, k: K) {
        let next = self.next(anchor);
        self.links.insert(k, (Some(anchor), next));
        self.set_next(Some(anchor), Some(k));
        self.set_prev(next, Some(k));
    }

    fn insert_before(&mut self, anchor: K, k: K) {
        let prev = self.prev(anchor);
        self.links.insert(k, (prev, Some(anchor)));
        self.set_prev(Some(anchor), Some(k));
        self.set_next(prev, Some(k));
    }

    fn replace(&mut self, old: K, new: K) {
        let (prev, next) = self.links.remove(&old).expect("linked");
        self.links.insert(new, (prev, next));
        self.set_next(prev, Some(new));
        self.set_prev(next, Some(new));
    }
}

/// Lifts a solution of `kernel`'s graph to the graph the kernel was
/// computed from.
pub fn lift(kernel: &Kernel, kernel_solution: &Solution) -> Result<LiftedResult, LiftError> {
    let mut relayouts = 0;
    let graph = kernel.state.graph.clone();
    let split = apply_splits(&graph, kernel_solution)?;
    let drawing = layout(&split.graph)?;
    let mut stage = Stage {
        graph,
        solution: kernel_solution.clone(),
        tops: Vec::new(),
        bottoms: Vec::new(),
    };
    stage.set_from(&split, &drawing);

    undo_cycles_and_paths(&mut stage, kernel)?;
    stage.check(&mut relayouts)?;
    undo_forced_and_leaves(&mut stage, kernel)?;
    stage.check(&mut relayouts)?;

    let (split, drawing) = stage.resolve()?;
    let crossings = count_crossings(&split.graph, &drawing)?;
    if crossings != 0 {
        return Err(LiftError::Crossings(crossings));
    }
    let used = stage.solution.len();
    if used > kernel.budgets.k as usize {
        return Err(LiftError::TooManySplits {
            used,
            k: kernel.budgets.k,
        });
    }
    if split.contract()? != stage.graph {
        return Err(LiftError::ContractionMismatch);
    }
    Ok(LiftedResult {
        solution: stage.solution,
        split,
        drawing,
        relayouts,
    })
}

fn undo_cycles_and_paths(stage: &mut Stage, kernel: &Kernel) -> Result<(), LiftError> {
    let mut tops = Chain::from_vec(&stage.tops);
    let mut bottoms = Chain::from_vec(&stage.bottoms);
    let h = &mut stage.graph;
    let sol = &mut stage.solution;

    for action in kernel.trace.actions.iter().rev().filter(|a| !a.is_first_phase()) {
        match action {
            Reduction::ShortenedPath(step) => {
                let PathShortening {
                    removed_top,
                    left,
                    right,
                    left_outer,
                    right_outer,
                    merged,
                } = &**step;
                let (z, t, a, b) = (*merged, removed_top.id, left.id, right.id);
                let (&[p], &[q]) = (left_outer.as_slice(), right_outer.as_slice()) else {
                    if sol.is_split(z) {
                        return Err(LiftError::UnexpectedSplit(z));
                    }
                    undo_one(h, action)?;
                    continue;
                };
                if !sol.is_split(z) {
                    let zs = Slot::Vertex(z);
                    let (first, second, anchor) = if tops.prev(q) == Some(p) || tops.next(q) != Some(p) {
                        (a, b, p)
                    } else {
                        (b, a, q)
                    };
                    bottoms.replace(zs, Slot::Vertex(first));
                    bottoms.insert_after(Slot::Vertex(first), Slot::Vertex(second));
                    tops.insert_after(anchor, t);
                } else {
                    if sol.blocks(z).map(<[_]>::len) != Some(2) {
                        return Err(LiftError::UnexpectedSplit(z));
                    }
                    let zq = Slot::Copy(z, q);
                    let other = h
                        .adj(q)
                        .iter()
                        .copied()
                        .find(|&r| r != z)
                        .map(|r| slot_of(sol, r, q));
                    let hang_left = other.is_some() && bottoms.next(zq) == other;
                    bottoms.replace(Slot::Copy(z, p), Slot::Copy(a, p));
                    bottoms.replace(zq, Slot::Vertex(b));
                    if hang_left {
                        bottoms.insert_before(Slot::Vertex(b), Slot::Copy(a, t));
                        tops.insert_before(q, t);
                    } else {
                        bottoms.insert_after(Slot::Vertex(b), Slot::Copy(a, t));
                        tops.insert_after(q, t);
                    }
                    sol.remove(z);
                    sol.insert(a, vec![vec![p], vec![t]]);
                }
                undo_one(h, action)?;
            }
            Reduction::RemovedCycle { vertices, split } => {
                undo_one(h, action)?;
                let (first, last) = (vertices[1].id, vertices[vertices.len() - 1].id);
                sol.insert(*split, vec![vec![first], vec![last]]);
                bottoms.push_back(Slot::Copy(*split, first));
                for v in &vertices[1..] {
                    match v.side {
                        Side::Top => tops.push_back(v.id),
                        Side::Bottom => bottoms.push_back(Slot::Vertex(v.id)),
                    }
                }
                bottoms.push_back(Slot::Copy(*split, last));
            }
            Reduction::RemovedPathComponent { vertices } => {
                undo_one(h, action)?;
                for v in vertices {
                    match v.side {
                        Side::Top => tops.push_back(v.id),
                        Side::Bottom => bottoms.push_back(Slot::Vertex(v.id)),
                    }
                }
            }
            Reduction::RemovedForced { .. } | Reduction::RemovedLeaf { .. } => unreachable!(),
        }
    }
    stage.tops = tops.to_vec();
    stage.bottoms = bottoms.to_vec();
    Ok(())
}

fn positions(stage: &Stage) -> (Vec<usize>, BTreeMap<Slot, usize>) {
    let mut top_pos = vec![usize::MAX; stage.graph.id_bound()];
    for (i, &t) in stage.tops.iter().enumerate() {
        top_pos[t.index()] = i;
    }
    let bottom_pos = stage.bottoms.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    (top_pos, bottom_pos)
}

/// Pending changes to the two orders, applied in one pass.
#[derive(Default)]
struct Edits {
    before: BTreeMap<Slot, Vec<(usize, Vec<Slot>)>>,
    after: BTreeMap<Slot, Vec<(usize, Vec<Slot>)>>,
    removed_bottoms: BTreeSet<Slot>,
    appended_bottoms: Vec<Slot>,
    top_after: BTreeMap<VertexId, Vec<VertexId>>,
    removed_tops: BTreeSet<VertexId>,
    appended_tops: Vec<VertexId>,
}

impl Edits {
    fn apply(mut self, stage: &mut Stage) {
        let mut bottoms = Vec::with_capacity(stage.bottoms.len() + self.appended_bottoms.len());
        let emit = |groups: Option<Vec<(usize, Vec<Slot>)>>, out: &mut Vec<Slot>| {
            if let Some(mut groups) = groups {
                groups.sort_by_key(|g| g.0);
                for (_, g) in groups {
                    out.extend(g);
                }
            }
        };
        for &s in &stage.bottoms {
            emit(self.before.remove(&s), &mut bottoms);
            if !self.removed_bottoms.contains(&s) {
                bottoms.push(s);
            }
            emit(self.after.remove(&s), &mut bottoms);
        }
        bottoms.extend(self.appended_bottoms);
        stage.bottoms = bottoms;

        let mut tops = Vec::with_capacity(stage.tops.len() + self.appended_tops.len());
        for &t in &stage.tops {
            if !self.removed_tops.contains(&t) {
                tops.push(t);
            }
            if let Some(seq) = self.top_after.remove(&t) {
                tops.extend(seq);
            }
        }
        tops.extend(self.appended_tops);
        stage.tops = tops;
    }
}

fn undo_forced_and_leaves(stage: &mut Stage, kernel: &Kernel) -> Result<(), LiftError> {
    let mut full = stage.graph.clone();
    kernel.trace.undo(&mut full, Phase::ForcedAndLeaves)?;

    // pendant bottoms of tops still present, and forced copies on removed tops
    let mut pendants: BTreeMap<VertexId, Vec<Slot>> = BTreeMap::new();
    let mut forced_on: BTreeMap<VertexId, Vec<Slot>> = BTreeMap::new();
    let mut top_leaves: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for action in &kernel.trace.actions {
        match action {
            Reduction::RemovedForced { vertex, neighbors } => {
                let v = vertex.id;
                stage.solution.insert(v, neighbors.iter().map(|&t| vec![t]).collect());
                for &t in neighbors {
                    let target = if stage.graph.contains(t) { &mut pendants } else { &mut forced_on };
                    target.entry(t).or_default().push(Slot::Copy(v, t));
                }
            }
            Reduction::RemovedLeaf { vertex, neighbor } => match vertex.side {
                Side::Bottom => pendants.entry(*neighbor).or_default().push(Slot::Vertex(vertex.id)),
                Side::Top => top_leaves.entry(*neighbor).or_default().push(vertex.id),
            },
            _ => {}
        }
    }

    // bottom pendants next to their top
    let mut edits = Edits::default();
    {
        let (top_pos, bottom_pos) = positions(stage);
        let h = &stage.graph;
        for (&x, group) in &pendants {
            let owner = top_pos[x.index()];
            let slots: Vec<Slot> = h.adj(x).iter().map(|&b| slot_of(&stage.solution, b, x)).collect();
            match slots.as_slice() {
                [] => {
                    edits.removed_tops.insert(x);
                    edits.appended_tops.push(x);
                    edits.appended_bottoms.extend(group.iter().copied());
                }
                &[s] => {
                    let others_right = slot_tops(h, &stage.solution, s)
                        .into_iter()
                        .any(|y| y != x && top_pos[y.index()] > owner);
                    let side = if others_right { &mut edits.before } else { &mut edits.after };
                    side.entry(s).or_default().push((owner, group.clone()));
                }
                many => {
                    let leftmost = *many.iter().min_by_key(|s| bottom_pos[*s]).expect("nonempty");
                    edits.after.entry(leftmost).or_default().push((owner, group.clone()));
                }
            }
        }
    }
    edits.apply(stage);

    // top leaves around their bottom vertex
    let mut edits = Edits::default();
    {
        let (top_pos, _) = positions(stage);
        let h = &stage.graph;
        let forced = |u: VertexId| forced_on.get(&u).cloned().unwrap_or_default();
        let needy = |t: VertexId| full.deg(t) >= 2;
        for (&w, leaves) in &top_leaves {
            if let Some(blocks) = stage.solution.blocks(w) {
                let mut blocks = blocks.to_vec();
                for &u in leaves {
                    blocks.push(vec![u]);
                    edits.appended_tops.push(u);
                    edits.appended_bottoms.push(Slot::Copy(w, u));
                    edits.appended_bottoms.extend(forced(u));
                }
                stage.solution.insert(w, blocks);
                continue;
            }
            let (mut long, short): (Vec<VertexId>, Vec<VertexId>) = leaves.iter().partition(|&&u| needy(u));
            match *h.adj(w) {
                [] => {
                    edits.removed_bottoms.insert(Slot::Vertex(w));
                    let right = (long.len() > 1).then(|| long.remove(1));
                    let left = long.pop();
                    edits.appended_tops.extend(left.iter().chain(&short).chain(&right).copied());
                    edits.appended_tops.extend(&long);
                    edits.appended_bottoms.extend(left.map(forced).unwrap_or_default());
                    edits.appended_bottoms.push(Slot::Vertex(w));
                    edits.appended_bottoms.extend(right.map(forced).unwrap_or_default());
                    edits.appended_bottoms.extend(long.iter().flat_map(|&u| forced(u)));
                }
                [x, y] => {
                    let (t1, t2) = if top_pos[x.index()] < top_pos[y.index()] { (x, y) } else { (y, x) };
                    let mut spare = long.into_iter();
                    let left = if needy(t1) { t1 } else { spare.next().unwrap_or(t1) };
                    let right = if needy(t2) { t2 } else { spare.next().unwrap_or(t2) };
                    let mut inner: Vec<VertexId> = short;
                    inner.extend([t1, t2].into_iter().filter(|&t| t != left && t != right));
                    inner.extend(spare);
                    inner.sort_unstable();
                    let mut seq = vec![left];
                    seq.extend(inner);
                    seq.push(right);
                    for t in [t1, t2] {
                        if !needy(t) {
                            edits.removed_tops.insert(t);
                        }
                    }
                    seq.retain(|&t| !((t == t1 || t == t2) && needy(t)));
                    edits.top_after.insert(t1, seq);
                    if !h.contains(left) {
                        edits.before.entry(Slot::Vertex(w)).or_default().push((0, forced(left)));
                    }
                    if !h.contains(right) {
                        edits.after.entry(Slot::Vertex(w)).or_default().push((0, forced(right)));
                    }
                }
                _ => {
                    // not produced by the reduction; keep the drawing valid
                    // and let the final check relayout
                    edits.appended_tops.extend(leaves);
                    edits.appended_bottoms.extend(leaves.iter().flat_map(|&u| forced(u)));
                }
            }
        }
    }
    edits.apply(stage);
    stage.graph = full;
    Ok(())
}

/// Top neighbors of the vertex or copy at a slot.
fn slot_tops(h: &BipartiteGraph, sol: &Solution, s: Slot) -> Vec<VertexId> {
    match s {
        Slot::Vertex(b) => h.adj(b).to_vec(),
        Slot::Copy(b, key) => sol
            .blocks(b)
            .and_then(|blocks| blocks.iter().find(|blk| blk[0] == key))
            .cloned()
            .unwrap_or_default(),
    }
}
