//! Immutable undirected simple graphs with dense vertex ids.
//!
//! Vertices are numbered `0..V` and keep the external name they were loaded
//! with, so every output can be written back in the caller's id space. Edges
//! are stored once in canonical `(u, v)` order with `u < v`; an [`EdgeId`] is
//! the position of an edge in that sorted list, which doubles as the
//! canonical tie-break order used throughout the crate.

mod components;
mod io;

use std::collections::HashMap;
use std::io::Write;

use crate::{Error, Result};

pub use components::{connected_components, Components, DisjointSet};
pub use io::{load_communities, load_edge_list, Delimiter, LoadOptions, LoadStats};

pub type VertexId = u32;
pub type EdgeId = usize;

/// An undirected edge with endpoints in canonical order (`u < v`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    pub u: VertexId,
    pub v: VertexId,
}

impl EdgeRef {
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Self { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Self { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    slot_edges: Vec<EdgeId>,
    edges: Vec<EdgeRef>,
    names: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `n` vertices named `"0".."n-1"`.
    ///
    /// Duplicate pairs (in either orientation) collapse to one edge;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::with_names(names, edges)
    }

    /// Like [`Graph::from_edges`] with explicit external vertex names.
    pub fn with_names<I>(names: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let n = names.len();
        let mut canon = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x as usize >= n {
                    return Err(Error::VertexOutOfRange(x));
                }
            }
            canon.push(EdgeRef::new(a, b)?);
        }
        Ok(Self::build(names, canon))
    }

    fn build(names: Vec<String>, mut edges: Vec<EdgeRef>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let n = names.len();

        let mut offsets = vec![0usize; n + 1];
        for e in &edges {
            offsets[e.u as usize + 1] += 1;
            offsets[e.v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets[..n].to_vec();
        let mut neighbors = vec![0; offsets[n]];
        let mut slot_edges = vec![0; offsets[n]];
        // Edges arrive sorted by (u, v), so each list fills in ascending order:
        // smaller neighbors come from edges (w, x) with w < x, which precede
        // the edges (x, w') owned by x itself.
        for (id, e) in edges.iter().enumerate() {
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                let slot = cursor[a as usize];
                neighbors[slot] = b;
                slot_edges[slot] = id;
                cursor[a as usize] += 1;
            }
        }
        debug_assert!((0..n).all(|x| neighbors[offsets[x]..offsets[x + 1]]
            .windows(2)
            .all(|w| w[0] < w[1])));

        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as VertexId))
            .collect();
        Self {
            offsets,
            neighbors,
            slot_edges,
            edges,
            names,
            index,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Neighbors of `v` paired with the id of the connecting edge.
    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        let v = v as usize;
        let range = self.offsets[v]..self.offsets[v + 1];
        self.neighbors[range.clone()]
            .iter()
            .copied()
            .zip(self.slot_edges[range].iter().copied())
    }

    /// All edges in canonical order; the index is the [`EdgeId`].
    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> EdgeRef {
        self.edges[id]
    }

    /// Looks up the id of edge `{a, b}` by binary search in the shorter
    /// adjacency list.
    pub fn edge_id(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let n = self.vertex_count() as VertexId;
        if a >= n || b >= n || a == b {
            return None;
        }
        let (x, y) = if self.degree(a) <= self.degree(b) {
            (a, b)
        } else {
            (b, a)
        };
        let start = self.offsets[x as usize];
        self.neighbors(x)
            .binary_search(&y)
            .ok()
            .map(|pos| self.slot_edges[start + pos])
    }

    pub fn contains_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_id(a, b).is_some()
    }

    /// Resolves `e` to its id, failing when it is not an edge of this graph.
    pub fn require_edge(&self, e: EdgeRef) -> Result<EdgeId> {
        self.edge_id(e.u, e.v).ok_or(Error::NotAnEdge(e.u, e.v))
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    /// Subgraph on the same vertex set keeping only the active edges.
    pub fn subgraph(&self, mask: &EdgeMask) -> Result<Graph> {
        mask.check(self)?;
        let edges = self
            .edges
            .iter()
            .zip(&mask.0)
            .filter_map(|(e, &on)| on.then_some(*e))
            .collect();
        Ok(Self::build(self.names.clone(), edges))
    }

    /// Writes one tab-separated `u v` line per edge using external names.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(
            out,
            "# vertices: {} edges: {}",
            self.vertex_count(),
            self.edge_count()
        )?;
        for e in &self.edges {
            writeln!(out, "{}\t{}", self.name(e.u), self.name(e.v))?;
        }
        out.flush()
    }
}

/// A subset of a graph's edges, indexed by [`EdgeId`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMask(Vec<bool>);

impl EdgeMask {
    pub fn full(g: &Graph) -> Self {
        Self(vec![true; g.edge_count()])
    }

    pub fn empty(g: &Graph) -> Self {
        Self(vec![false; g.edge_count()])
    }

    pub fn from_bools(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn from_edges<I>(g: &Graph, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = EdgeRef>,
    {
        let mut mask = Self::empty(g);
        for e in edges {
            mask.0[g.require_edge(e)?] = true;
        }
        Ok(mask)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_active(&self, id: EdgeId) -> bool {
        self.0[id]
    }

    pub fn set(&mut self, id: EdgeId, active: bool) {
        self.0[id] = active;
    }

    pub fn active_count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn active_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<()> {
        if self.0.len() != g.edge_count() {
            return Err(Error::MaskMismatch {
                expected: g.edge_count(),
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

/// Partial map from vertices to dense community ids `0..C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommunityAssignment {
    labels: Vec<Option<u32>>,
    community_count: usize,
}

impl CommunityAssignment {
    /// All `vertex_count` vertices unlabeled.
    pub fn unlabeled(vertex_count: usize) -> Self {
        Self {
            labels: vec![None; vertex_count],
            community_count: 0,
        }
    }

    /// Densifies arbitrary labels to `0..C` in order of first appearance.
    pub fn from_labels<L: Eq + std::hash::Hash>(labels: Vec<Option<L>>) -> Self {
        let mut remap = HashMap::new();
        let labels = labels
            .into_iter()
            .map(|l| {
                l.map(|l| {
                    let next = remap.len() as u32;
                    *remap.entry(l).or_insert(next)
                })
            })
            .collect();
        Self {
            labels,
            community_count: remap.len(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn community_count(&self) -> usize {
        self.community_count
    }

    pub fn label(&self, v: VertexId) -> Option<u32> {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[Option<u32>] {
        &self.labels
    }

    pub fn labeled_count(&self) -> usize {
        self.labels.iter().filter(|l| l.is_some()).count()
    }

    /// Member lists indexed by community id, each sorted ascending.
    pub fn members(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.community_count];
        for (v, l) in self.labels.iter().enumerate() {
            if let Some(c) = l {
                out[*c as usize].push(v as VertexId);
            }
        }
        out
    }

    /// CSV with a `vertex,community` header, labeled vertices only.
    pub fn write_csv<W: Write>(&self, g: &Graph, mut out: W) -> std::io::Result<()> {
        writeln!(out, "vertex,community")?;
        for (v, l) in self.labels.iter().enumerate() {
            if let Some(c) = l {
                writeln!(out, "{},{}", g.name(v as VertexId), c)?;
            }
        }
        out.flush()
    }
}
