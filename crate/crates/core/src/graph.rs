//! Two-layer bipartite graphs with stable vertex ids.
//!
//! Ids are handed out in increasing order and never reused by the graph
//! itself, so a record of a removed vertex stays meaningful after later
//! mutations. Each vertex keeps its adjacency list, so degrees are O(1).

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use smallvec::SmallVec;

type Adjacency = SmallVec<[VertexId; 2]>;

/// Stable identifier of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// The layer a vertex lives on: `Top` is the line y=1, `Bottom` the line y=0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Top,
    Bottom,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Top => f.write_str("top"),
            Side::Bottom => f.write_str("bottom"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} is not on the {1} layer")]
    WrongSide(VertexId, Side),
    #[error("edge {0}-{1} would join two vertices of the same layer")]
    SameLayer(VertexId, VertexId),
    #[error("edge {0}-{1} is already present")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(VertexId, VertexId),
    #[error("vertex id {0} is already in use")]
    IdInUse(VertexId),
    #[error("cannot identify {0} with itself")]
    SelfIdentification(VertexId),
    #[error("{u} and {v} share the top neighbor {common}")]
    CommonNeighbor {
        u: VertexId,
        v: VertexId,
        common: VertexId,
    },
    #[error("adjacency of {0} is inconsistent")]
    Inconsistent(VertexId),
}

#[derive(Debug, Clone)]
struct Vertex {
    side: Side,
    adj: Adjacency,
}

/// A simple bipartite graph `G = (T ∪ B, E)` whose edges always join a top
/// vertex to a bottom vertex.
#[derive(Debug, Clone, Default)]
pub struct BipartiteGraph {
    slots: Vec<Option<Vertex>>,
    // label of id i is names[spans[i]]; spans of removed ids are stale
    names: String,
    spans: Vec<(u32, u32)>,
    vertex_count: usize,
    edge_count: usize,
}

impl BipartiteGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(vertices: usize) -> Self {
        BipartiteGraph {
            slots: Vec::with_capacity(vertices),
            names: String::new(),
            spans: Vec::with_capacity(vertices),
            vertex_count: 0,
            edge_count: 0,
        }
    }

    pub fn add_vertex(&mut self, side: Side, label: impl AsRef<str>) -> VertexId {
        let id = VertexId(u32::try_from(self.slots.len()).expect("vertex id space exhausted"));
        self.slots.push(Some(Vertex {
            side,
            adj: Adjacency::new(),
        }));
        let span = self.intern(label.as_ref());
        self.spans.push(span);
        self.vertex_count += 1;
        id
    }

    /// Re-creates a vertex under a specific id, e.g. when undoing a removal.
    pub fn restore_vertex(
        &mut self,
        id: VertexId,
        side: Side,
        label: impl AsRef<str>,
    ) -> Result<(), GraphError> {
        if id.index() >= self.slots.len() {
            self.slots.resize_with(id.index() + 1, || None);
            self.spans.resize(id.index() + 1, (0, 0));
        }
        let slot = &mut self.slots[id.index()];
        if slot.is_some() {
            return Err(GraphError::IdInUse(id));
        }
        *slot = Some(Vertex {
            side,
            adj: Adjacency::new(),
        });
        self.spans[id.index()] = self.intern(label.as_ref());
        self.vertex_count += 1;
        Ok(())
    }

    /// Adds the edge `{a, b}`; the endpoints may be given in either order.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<(), GraphError> {
        let sa = self.side(a).ok_or(GraphError::UnknownVertex(a))?;
        let sb = self.side(b).ok_or(GraphError::UnknownVertex(b))?;
        if sa == sb {
            return Err(GraphError::SameLayer(a, b));
        }
        if self.has_edge(a, b) {
            return Err(GraphError::DuplicateEdge(a, b));
        }
        self.vertex_mut(a).adj.push(b);
        self.vertex_mut(b).adj.push(a);
        self.edge_count += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, a: VertexId, b: VertexId) -> Result<(), GraphError> {
        if !self.contains(a) {
            return Err(GraphError::UnknownVertex(a));
        }
        if !self.contains(b) {
            return Err(GraphError::UnknownVertex(b));
        }
        if !self.has_edge(a, b) {
            return Err(GraphError::MissingEdge(a, b));
        }
        unlink(&mut self.vertex_mut(a).adj, b);
        unlink(&mut self.vertex_mut(b).adj, a);
        self.edge_count -= 1;
        Ok(())
    }

    /// Deletes `v` with all incident edges and returns its former neighbors.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        let vertex = self
            .slots
            .get_mut(v.index())
            .and_then(Option::take)
            .ok_or(GraphError::UnknownVertex(v))?;
        for &u in &vertex.adj {
            unlink(&mut self.vertex_mut(u).adj, v);
        }
        self.vertex_count -= 1;
        self.edge_count -= vertex.adj.len();
        Ok(vertex.adj.into_vec())
    }

    /// [`remove_vertex`](Self::remove_vertex) without collecting the
    /// neighbors; returns the former degree.
    pub fn delete_vertex(&mut self, v: VertexId) -> Result<usize, GraphError> {
        let vertex = self
            .slots
            .get_mut(v.index())
            .and_then(Option::take)
            .ok_or(GraphError::UnknownVertex(v))?;
        for &u in &vertex.adj {
            unlink(&mut self.vertex_mut(u).adj, v);
        }
        self.vertex_count -= 1;
        self.edge_count -= vertex.adj.len();
        Ok(vertex.adj.len())
    }

    /// Deletes every vertex of `vs` with its edges in one pass over the graph.
    pub fn delete_vertices(&mut self, vs: &[VertexId]) -> Result<(), GraphError> {
        let mut gone = alloc::vec![false; self.slots.len()];
        for &v in vs {
            if !self.contains(v) || gone[v.index()] {
                return Err(GraphError::UnknownVertex(v));
            }
            gone[v.index()] = true;
        }
        for &v in vs {
            self.slots[v.index()] = None;
        }
        self.vertex_count -= vs.len();
        let mut half_edges = 0;
        for x in self.slots.iter_mut().flatten() {
            if x.adj.iter().any(|u| gone[u.index()]) {
                x.adj.retain(|u| !gone[u.index()]);
            }
            half_edges += x.adj.len();
        }
        self.edge_count = half_edges / 2;
        Ok(())
    }

    /// Deletes a set of vertices that has no edges to the rest of the graph.
    pub(crate) fn delete_closed_set(&mut self, vs: &[VertexId]) {
        let mut half_edges = 0;
        for &v in vs {
            let x = self.slots[v.index()].take().expect("vertex id not present");
            half_edges += x.adj.len();
        }
        self.vertex_count -= vs.len();
        self.edge_count -= half_edges / 2;
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        matches!(self.slots.get(v.index()), Some(Some(_)))
    }

    #[inline]
    pub fn side(&self, v: VertexId) -> Option<Side> {
        self.get(v).map(|x| x.side)
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.contains(v).then(|| self.name(v))
    }

    fn name(&self, v: VertexId) -> &str {
        let (a, b) = self.spans[v.index()];
        &self.names[a as usize..b as usize]
    }

    fn intern(&mut self, label: &str) -> (u32, u32) {
        let start = self.names.len();
        self.names.push_str(label);
        let span = (u32::try_from(start), u32::try_from(self.names.len()));
        match span {
            (Ok(a), Ok(b)) => (a, b),
            _ => panic!("label storage exceeds 4 GiB"),
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.get(v)
            .map(|x| x.adj.len())
            .ok_or(GraphError::UnknownVertex(v))
    }

    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        self.get(v)
            .map(|x| x.adj.as_slice())
            .ok_or(GraphError::UnknownVertex(v))
    }

    /// Degree of a vertex known to exist.
    #[inline]
    pub(crate) fn deg(&self, v: VertexId) -> usize {
        self.vertex(v).adj.len()
    }

    /// Degree of every id below [`id_bound`](Self::id_bound), zero for
    /// removed ids.
    pub(crate) fn degrees(&self) -> Vec<u32> {
        self.slots
            .iter()
            .map(|s| s.as_ref().map_or(0, |x| x.adj.len() as u32))
            .collect()
    }

    /// Neighbors of a vertex known to exist.
    #[inline]
    pub(crate) fn adj(&self, v: VertexId) -> &[VertexId] {
        &self.vertex(v).adj
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        match (self.get(a), self.get(b)) {
            (Some(x), Some(y)) => {
                if x.adj.len() <= y.adj.len() {
                    x.adj.contains(&b)
                } else {
                    y.adj.contains(&a)
                }
            }
            _ => false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    /// One past the largest id ever allocated in this graph.
    pub fn id_bound(&self) -> usize {
        self.slots.len()
    }

    /// Live vertices in increasing id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_some())
            .map(|(i, _)| VertexId(i as u32))
    }

    pub fn layer(&self, side: Side) -> impl Iterator<Item = VertexId> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter(move |(_, s)| matches!(s, Some(x) if x.side == side))
            .map(|(i, _)| VertexId(i as u32))
    }

    pub fn top_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.layer(Side::Top)
    }

    pub fn bottom_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.layer(Side::Bottom)
    }

    /// Edges as `(top, bottom)` pairs, grouped by top vertex in id order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.top_vertices()
            .flat_map(move |t| self.adj(t).iter().map(move |&b| (t, b)))
    }

    /// Replaces the bottom vertices `u` and `v` by one fresh bottom vertex
    /// carrying the union of their edges. Returns the new id.
    pub fn identify_bottom_vertices(
        &mut self,
        u: VertexId,
        v: VertexId,
    ) -> Result<VertexId, GraphError> {
        if u == v {
            return Err(GraphError::SelfIdentification(u));
        }
        for x in [u, v] {
            match self.side(x) {
                None => return Err(GraphError::UnknownVertex(x)),
                Some(Side::Top) => return Err(GraphError::WrongSide(x, Side::Bottom)),
                Some(Side::Bottom) => {}
            }
        }
        let (small, large) = if self.deg(u) <= self.deg(v) { (u, v) } else { (v, u) };
        let large_adj: BTreeSet<VertexId> = self.adj(large).iter().copied().collect();
        if let Some(&common) = self.adj(small).iter().find(|t| large_adj.contains(t)) {
            return Err(GraphError::CommonNeighbor { u, v, common });
        }
        let label = merged_label(self.label(u).unwrap_or(""), self.label(v).unwrap_or(""));
        let merged = self.add_vertex(Side::Bottom, label);
        for old in [u, v] {
            for t in self.remove_vertex(old)? {
                self.add_edge(merged, t)?;
            }
        }
        Ok(merged)
    }

    /// Non-mutating form of [`identify_bottom_vertices`](Self::identify_bottom_vertices).
    pub fn identified(
        &self,
        u: VertexId,
        v: VertexId,
    ) -> Result<(BipartiteGraph, VertexId), GraphError> {
        let mut g = self.clone();
        let merged = g.identify_bottom_vertices(u, v)?;
        Ok((g, merged))
    }

    /// Connected components, each sorted by id, ordered by their smallest id.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = alloc::vec![false; self.slots.len()];
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start.index()] {
                continue;
            }
            seen[start.index()] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in self.adj(x) {
                    if !seen[y.index()] {
                        seen[y.index()] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph on `vs` with every edge between members; ids are preserved.
    pub fn induced_subgraph(&self, vs: &BTreeSet<VertexId>) -> Result<BipartiteGraph, GraphError> {
        let mut g = BipartiteGraph::with_capacity(self.slots.len());
        for &v in vs {
            let x = self.get(v).ok_or(GraphError::UnknownVertex(v))?;
            g.restore_vertex(v, x.side, self.name(v))?;
        }
        for &v in vs {
            if self.side(v) != Some(Side::Top) {
                continue;
            }
            for &b in self.adj(v) {
                if vs.contains(&b) {
                    g.vertex_mut(v).adj.push(b);
                    g.vertex_mut(b).adj.push(v);
                    g.edge_count += 1;
                }
            }
        }
        Ok(g)
    }

    /// Checks bipartiteness, simplicity and the internal counters.
    pub fn validate(&self) -> Result<(), GraphError> {
        let mut vertices = 0;
        let mut half_edges = 0;
        for v in self.vertices() {
            vertices += 1;
            let x = self.vertex(v);
            let mut seen = BTreeSet::new();
            for &u in &x.adj {
                let y = self.get(u).ok_or(GraphError::Inconsistent(v))?;
                if y.side == x.side {
                    return Err(GraphError::SameLayer(v, u));
                }
                if !seen.insert(u) {
                    return Err(GraphError::DuplicateEdge(v, u));
                }
                if !y.adj.contains(&v) {
                    return Err(GraphError::Inconsistent(v));
                }
            }
            half_edges += x.adj.len();
        }
        if vertices != self.vertex_count || half_edges != 2 * self.edge_count {
            return Err(GraphError::Inconsistent(VertexId(u32::MAX)));
        }
        Ok(())
    }

    /// Edges as sorted `(top label, bottom label)` pairs; two graphs with the
    /// same labelled structure produce identical lists.
    pub fn labelled_edges(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .edges()
            .map(|(t, b)| (String::from(self.name(t)), String::from(self.name(b))))
            .collect();
        out.sort_unstable();
        out
    }

    #[inline]
    fn get(&self, v: VertexId) -> Option<&Vertex> {
        self.slots.get(v.index()).and_then(Option::as_ref)
    }

    #[inline]
    fn vertex(&self, v: VertexId) -> &Vertex {
        self.get(v).expect("vertex id not present")
    }

    #[inline]
    fn vertex_mut(&mut self, v: VertexId) -> &mut Vertex {
        self.slots[v.index()].as_mut().expect("vertex id not present")
    }
}

/// Graphs are equal when they have the same ids, sides, labels and edges.
impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        if self.vertex_count != other.vertex_count || self.edge_count != other.edge_count {
            return false;
        }
        for v in self.vertices() {
            let (Some(a), Some(b)) = (self.get(v), other.get(v)) else {
                return false;
            };
            if a.side != b.side || self.name(v) != other.name(v) || a.adj.len() != b.adj.len() {
                return false;
            }
            if !a.adj.iter().all(|u| b.adj.contains(u)) {
                return false;
            }
        }
        true
    }
}

impl Eq for BipartiteGraph {}

fn unlink(adj: &mut Adjacency, v: VertexId) {
    if let Some(pos) = adj.iter().position(|&x| x == v) {
        adj.swap_remove(pos);
    }
}

// Labels of repeatedly merged vertices keep only the two outermost names.
fn merged_label(a: &str, b: &str) -> String {
    let head = a.split('~').next().unwrap_or(a);
    let tail = b.rsplit('~').next().unwrap_or(b);
    let mut s = String::with_capacity(head.len() + tail.len() + 1);
    s.push_str(head);
    s.push('~');
    s.push_str(tail);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn path5() -> (BipartiteGraph, [VertexId; 5]) {
        // t1 - b1 - t2 - b2 - t3
        let mut g = BipartiteGraph::new();
        let t1 = g.add_vertex(Side::Top, "t1");
        let b1 = g.add_vertex(Side::Bottom, "b1");
        let t2 = g.add_vertex(Side::Top, "t2");
        let b2 = g.add_vertex(Side::Bottom, "b2");
        let t3 = g.add_vertex(Side::Top, "t3");
        for (a, b) in [(t1, b1), (t2, b1), (t2, b2), (t3, b2)] {
            g.add_edge(a, b).unwrap();
        }
        (g, [t1, b1, t2, b2, t3])
    }

    fn c4() -> BipartiteGraph {
        let mut g = BipartiteGraph::new();
        let t1 = g.add_vertex(Side::Top, "t1");
        let t2 = g.add_vertex(Side::Top, "t2");
        let b1 = g.add_vertex(Side::Bottom, "b1");
        let b2 = g.add_vertex(Side::Bottom, "b2");
        for (a, b) in [(t1, b1), (t2, b1), (t2, b2), (t1, b2)] {
            g.add_edge(a, b).unwrap();
        }
        g
    }

    #[test]
    fn batch_deletion_matches_one_by_one() {
        let (g, [t1, b1, t2, b2, t3]) = path5();
        let mut one = g.clone();
        one.remove_vertex(t1).unwrap();
        one.remove_vertex(b2).unwrap();
        let mut batch = g.clone();
        batch.delete_vertices(&[b2, t1]).unwrap();
        assert_eq!(batch, one);
        batch.validate().unwrap();
        assert_eq!(batch.edge_count(), 1);
        assert_eq!(batch.label(t1), None);
        assert!(batch.clone().delete_vertices(&[t1]).is_err());
        assert!(g.clone().delete_vertices(&[t3, t3]).is_err());

        let mut closed = g.clone();
        closed.delete_closed_set(&[t1, b1, t2, b2, t3]);
        assert!(closed.is_empty());
        assert_eq!(closed.edge_count(), 0);
        assert_eq!(g.clone().delete_vertex(t2), Ok(2));
    }

    #[test]
    fn degree_counts_incident_edges() {
        let mut g = BipartiteGraph::new();
        let iso = g.add_vertex(Side::Top, "x");
        assert_eq!(g.degree(iso), Ok(0));

        let b0 = g.add_vertex(Side::Bottom, "b0");
        for name in ["t1", "t2", "t3"] {
            let t = g.add_vertex(Side::Top, name);
            g.add_edge(t, b0).unwrap();
        }
        assert_eq!(g.degree(b0), Ok(3));

        let (p, [_, b1, ..]) = path5();
        assert_eq!(p.degree(b1), Ok(2));
        assert_eq!(p.degree(VertexId(99)), Err(GraphError::UnknownVertex(VertexId(99))));
    }

    #[test]
    fn components() {
        assert!(BipartiteGraph::new().connected_components().is_empty());

        let mut g = BipartiteGraph::new();
        for i in 0..2 {
            let t = g.add_vertex(Side::Top, alloc::format!("t{i}"));
            let b = g.add_vertex(Side::Bottom, alloc::format!("b{i}"));
            g.add_edge(t, b).unwrap();
        }
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));

        let mut g = c4();
        g.add_vertex(Side::Bottom, "iso");
        let sizes: Vec<usize> = g.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![4, 1]);
    }

    #[test]
    fn identify_shortens_a_path() {
        let (mut g, [t1, b1, t2, b2, t3]) = path5();
        g.remove_vertex(t2).unwrap();
        let m = g.identify_bottom_vertices(b1, b2).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(t1, m) && g.has_edge(t3, m));
        assert!(!g.contains(b1) && !g.contains(b2));
        assert_eq!(g.label(m), Some("b1~b2"));
        g.validate().unwrap();
    }

    #[test]
    fn identify_isolated_and_disjoint() {
        let mut g = BipartiteGraph::new();
        let u = g.add_vertex(Side::Bottom, "u");
        let v = g.add_vertex(Side::Bottom, "v");
        let (h, m) = g.identified(u, v).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.degree(m), Ok(0));

        let t1 = g.add_vertex(Side::Top, "t1");
        let t2 = g.add_vertex(Side::Top, "t2");
        g.add_edge(u, t1).unwrap();
        g.add_edge(v, t2).unwrap();
        let (h, m) = g.identified(u, v).unwrap();
        assert_eq!(h.degree(m), Ok(2));
        assert_eq!(h.edge_count(), g.edge_count());
    }

    #[test]
    fn identify_rejects_common_neighbor() {
        let g = c4();
        let bs: Vec<_> = g.bottom_vertices().collect();
        assert!(matches!(
            g.identified(bs[0], bs[1]),
            Err(GraphError::CommonNeighbor { .. })
        ));
        let ts: Vec<_> = g.top_vertices().collect();
        assert!(matches!(g.identified(ts[0], bs[1]), Err(GraphError::WrongSide(..))));
        assert!(matches!(g.identified(bs[0], bs[0]), Err(GraphError::SelfIdentification(_))));
    }

    #[test]
    fn induced_subgraphs() {
        let g = c4();
        let all: BTreeSet<_> = g.vertices().collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        assert!(g.induced_subgraph(&BTreeSet::new()).unwrap().is_empty());

        let mut three = all.clone();
        three.remove(&VertexId(0));
        let p = g.induced_subgraph(&three).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (3, 2));
        assert!(g.induced_subgraph(&[VertexId(7)].into_iter().collect()).is_err());
    }

    #[test]
    fn rejects_invalid_edges() {
        let mut g = BipartiteGraph::new();
        let a = g.add_vertex(Side::Top, "a");
        let b = g.add_vertex(Side::Top, "b");
        let c = g.add_vertex(Side::Bottom, "c");
        assert_eq!(g.add_edge(a, b), Err(GraphError::SameLayer(a, b)));
        g.add_edge(c, a).unwrap();
        assert_eq!(g.add_edge(a, c), Err(GraphError::DuplicateEdge(a, c)));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(a, c)]);
    }

    #[test]
    fn restore_after_remove_roundtrips() {
        let (g, [_, b1, t2, ..]) = path5();
        let mut h = g.clone();
        let nbrs = h.remove_vertex(t2).unwrap();
        h.restore_vertex(t2, Side::Top, "t2").unwrap();
        for b in nbrs {
            h.add_edge(t2, b).unwrap();
        }
        assert_eq!(h, g);
        assert_eq!(h.restore_vertex(b1, Side::Bottom, "x"), Err(GraphError::IdInUse(b1)));
    }
}
