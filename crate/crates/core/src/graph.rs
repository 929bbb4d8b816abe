//! Mutable bipartite graph with sorted adjacency lists.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::biclique::Biclique;
use crate::error::GraphError;
use crate::sorted;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A vertex label. Left and right ids live in independent spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub side: Side,
    pub id: u32,
}

impl VertexId {
    pub fn left(id: u32) -> Self {
        VertexId {
            side: Side::Left,
            id,
        }
    }

    pub fn right(id: u32) -> Self {
        VertexId {
            side: Side::Right,
            id,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "L{}", self.id),
            Side::Right => write!(f, "R{}", self.id),
        }
    }
}

/// An edge between left vertex `left` and right vertex `right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub left: u32,
    pub right: u32,
}

impl Edge {
    pub fn new(left: u32, right: u32) -> Self {
        Edge { left, right }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(L{},R{})", self.left, self.right)
    }
}

/// An ordered batch of edges applied to a graph in one step.
///
/// Order matters: the new-biclique deduplication rule attributes each new
/// biclique to the first batch edge it contains.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeBatch {
    edges: Vec<Edge>,
}

impl EdgeBatch {
    pub fn new(edges: Vec<Edge>) -> Self {
        EdgeBatch { edges }
    }

    pub fn empty() -> Self {
        EdgeBatch::default()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.edges.iter()
    }

    pub(crate) fn check_distinct(&self) -> Result<(), GraphError> {
        let mut seen = HashSet::with_capacity(self.edges.len());
        for &e in &self.edges {
            if !seen.insert(e) {
                return Err(GraphError::DuplicateInBatch(e));
            }
        }
        Ok(())
    }
}

impl From<Vec<Edge>> for EdgeBatch {
    fn from(edges: Vec<Edge>) -> Self {
        EdgeBatch::new(edges)
    }
}

impl FromIterator<Edge> for EdgeBatch {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeBatch::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a EdgeBatch {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

/// Bipartite graph `(L, R, E)`.
///
/// Each side maps a vertex id to its ascending neighbor list on the other
/// side. Vertices are created on first use and never removed implicitly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BipartiteGraph {
    left: BTreeMap<u32, Vec<u32>>,
    right: BTreeMap<u32, Vec<u32>>,
    num_edges: usize,
}

impl BipartiteGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on left vertices `0..num_left` and right vertices `0..num_right`
    /// with no edges.
    pub fn with_vertices(num_left: u32, num_right: u32) -> Self {
        BipartiteGraph {
            left: (0..num_left).map(|u| (u, Vec::new())).collect(),
            right: (0..num_right).map(|v| (v, Vec::new())).collect(),
            num_edges: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting duplicates.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Result<Self, GraphError> {
        let mut g = BipartiteGraph::new();
        g.add_edges(&edges.into_iter().collect())?;
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        match v.side {
            Side::Left => self.left.entry(v.id).or_default(),
            Side::Right => self.right.entry(v.id).or_default(),
        };
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        match v.side {
            Side::Left => self.left.contains_key(&v.id),
            Side::Right => self.right.contains_key(&v.id),
        }
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.left
            .get(&e.left)
            .is_some_and(|nbrs| nbrs.binary_search(&e.right).is_ok())
    }

    /// Inserts every edge of `batch`, registering unseen endpoints.
    ///
    /// The batch is checked as a whole first; on error the graph is untouched.
    pub fn add_edges(&mut self, batch: &EdgeBatch) -> Result<(), GraphError> {
        self.check_addable(batch)?;
        for &e in batch {
            sorted::insert(self.left.entry(e.left).or_default(), e.right);
            sorted::insert(self.right.entry(e.right).or_default(), e.left);
        }
        self.num_edges += batch.len();
        Ok(())
    }

    /// Checks that `batch` could be passed to [`BipartiteGraph::add_edges`].
    pub fn check_addable(&self, batch: &EdgeBatch) -> Result<(), GraphError> {
        batch.check_distinct()?;
        match batch.iter().find(|&&e| self.has_edge(e)) {
            Some(&e) => Err(GraphError::EdgePresent(e)),
            None => Ok(()),
        }
    }

    /// Checks that `batch` could be passed to [`BipartiteGraph::remove_edges`].
    pub fn check_removable(&self, batch: &EdgeBatch) -> Result<(), GraphError> {
        batch.check_distinct()?;
        match batch.iter().find(|&&e| !self.has_edge(e)) {
            Some(&e) => Err(GraphError::EdgeAbsent(e)),
            None => Ok(()),
        }
    }

    /// Deletes every edge of `batch`. Endpoints stay in the graph.
    pub fn remove_edges(&mut self, batch: &EdgeBatch) -> Result<(), GraphError> {
        self.check_removable(batch)?;
        for &e in batch {
            if let Some(nbrs) = self.left.get_mut(&e.left) {
                sorted::remove(nbrs, e.right);
            }
            if let Some(nbrs) = self.right.get_mut(&e.right) {
                sorted::remove(nbrs, e.left);
            }
        }
        self.num_edges -= batch.len();
        Ok(())
    }

    pub fn neighbors(&self, v: VertexId) -> Result<&[u32], GraphError> {
        let nbrs = match v.side {
            Side::Left => self.left.get(&v.id),
            Side::Right => self.right.get(&v.id),
        };
        nbrs.map(Vec::as_slice).ok_or(GraphError::UnknownVertex(v))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.neighbors(v).map(<[u32]>::len)
    }

    /// Right neighbors of left vertex `u`; empty if `u` is unknown.
    pub fn left_neighbors(&self, u: u32) -> &[u32] {
        self.left.get(&u).map_or(&[], Vec::as_slice)
    }

    /// Left neighbors of right vertex `v`; empty if `v` is unknown.
    pub fn right_neighbors(&self, v: u32) -> &[u32] {
        self.right.get(&v).map_or(&[], Vec::as_slice)
    }

    pub(crate) fn side_neighbors(&self, side: Side, id: u32) -> &[u32] {
        match side {
            Side::Left => self.left_neighbors(id),
            Side::Right => self.right_neighbors(id),
        }
    }

    pub fn left_vertices(&self) -> impl ExactSizeIterator<Item = u32> + '_ {
        self.left.keys().copied()
    }

    pub fn right_vertices(&self) -> impl ExactSizeIterator<Item = u32> + '_ {
        self.right.keys().copied()
    }

    pub(crate) fn side_vertices(&self, side: Side) -> Vec<u32> {
        match side {
            Side::Left => self.left_vertices().collect(),
            Side::Right => self.right_vertices().collect(),
        }
    }

    pub fn num_left(&self) -> usize {
        self.left.len()
    }

    pub fn num_right(&self) -> usize {
        self.right.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    /// All edges, ordered by left id then right id.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.left
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.iter().map(move |&v| Edge::new(u, v)))
    }

    /// Maximum degree over both sides; 0 for a graph without vertices.
    pub fn max_degree(&self) -> usize {
        self.left
            .values()
            .chain(self.right.values())
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }

    /// Minimum degree over both sides; 0 for a graph without vertices.
    pub fn min_degree(&self) -> usize {
        self.left
            .values()
            .chain(self.right.values())
            .map(Vec::len)
            .min()
            .unwrap_or(0)
    }

    /// Subgraph induced by left set `Γ(e.right)` and right set `Γ(e.left)`.
    ///
    /// Every maximal biclique of this subgraph contains `e`, and these are
    /// exactly the maximal bicliques of `self` that contain `e`.
    pub fn edge_subgraph(&self, e: Edge) -> Result<BipartiteGraph, GraphError> {
        if !self.has_edge(e) {
            return Err(GraphError::EdgeAbsent(e));
        }
        let lefts = self.right_neighbors(e.right);
        let rights = self.left_neighbors(e.left);
        let mut sub = BipartiteGraph {
            left: BTreeMap::new(),
            right: rights.iter().map(|&v| (v, Vec::new())).collect(),
            num_edges: 0,
        };
        for &x in lefts {
            let nbrs = sorted::intersect(self.left_neighbors(x), rights);
            for &y in &nbrs {
                // x ascends, so pushing keeps each right list sorted.
                sub.right.get_mut(&y).expect("y drawn from rights").push(x);
            }
            sub.num_edges += nbrs.len();
            sub.left.insert(x, nbrs);
        }
        Ok(sub)
    }

    /// Direct maximality test: `X×Y ⊆ E`, `∩Γ(X) = Y` and `∩Γ(Y) = X`.
    pub fn is_maximal_biclique(&self, b: &Biclique) -> Result<bool, GraphError> {
        if b.has_empty_side() {
            return Err(GraphError::EmptySide(b.clone()));
        }
        for &u in b.left() {
            if !self.left.contains_key(&u) {
                return Err(GraphError::UnknownVertex(VertexId::left(u)));
            }
        }
        for &v in b.right() {
            if !self.right.contains_key(&v) {
                return Err(GraphError::UnknownVertex(VertexId::right(v)));
            }
        }
        let common_right = self.common_neighbors(Side::Left, b.left());
        if common_right != b.right() {
            // Either some pair is a non-edge (Y ⊄ ∩Γ(X)) or Y can grow.
            return Ok(false);
        }
        let common_left = self.common_neighbors(Side::Right, b.right());
        Ok(common_left == b.left())
    }

    /// `∩_{w ∈ set} Γ(w)` for vertices on `side`; `set` must be non-empty.
    pub(crate) fn common_neighbors(&self, side: Side, set: &[u32]) -> Vec<u32> {
        let mut iter = set.iter();
        let Some(&first) = iter.next() else {
            return Vec::new();
        };
        let mut acc = self.side_neighbors(side, first).to_vec();
        let mut scratch = Vec::new();
        for &w in iter {
            if acc.is_empty() {
                break;
            }
            sorted::intersect_into(&acc, self.side_neighbors(side, w), &mut scratch);
            std::mem::swap(&mut acc, &mut scratch);
        }
        acc
    }

    /// The same graph with left and right exchanged.
    pub fn transposed(&self) -> BipartiteGraph {
        BipartiteGraph {
            left: self.right.clone(),
            right: self.left.clone(),
            num_edges: self.num_edges,
        }
    }

    #[cfg(test)]
    pub(crate) fn check_invariants(&self) {
        let mut total = 0;
        for (&u, nbrs) in &self.left {
            assert!(nbrs.windows(2).all(|w| w[0] < w[1]));
            for &v in nbrs {
                assert!(self.right_neighbors(v).binary_search(&u).is_ok());
            }
            total += nbrs.len();
        }
        for (&v, nbrs) in &self.right {
            assert!(nbrs.windows(2).all(|w| w[0] < w[1]));
            for &u in nbrs {
                assert!(self.left_neighbors(u).binary_search(&v).is_ok());
            }
            total += nbrs.len();
        }
        assert_eq!(total, 2 * self.num_edges);
    }
}
