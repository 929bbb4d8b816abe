//! Change-sensitive maintenance of the maximal biclique set.
//!
//! Additions: new maximal bicliques all contain a batch edge, and those
//! containing edge `e` are exactly the maximal bicliques of the subgraph
//! induced by the endpoint neighborhoods of `e`. Every biclique that stops
//! being maximal is a maximal biclique of `b − H` for some new `b`, so
//! splitting each new biclique along its batch edges and keeping the pieces
//! found in the store yields the subsumed set.
//!
//! Deletions run the same machinery in reverse: the bicliques destroyed by
//! removing `H` from `G` are the ones created by adding `H` to `G − H`.

use std::time::{Duration, Instant};

use crate::biclique::Biclique;
use crate::changeset::ChangeSet;
use crate::error::{EngineError, GraphError};
use crate::graph::{BipartiteGraph, Edge, EdgeBatch};
use crate::mbe::{mine_lmbc, SizeThreshold};
use crate::signature::{SignatureStore, StoreMode};

/// Enumerates the maximal bicliques of `post` that contain at least one edge
/// of `h`, each once. Every edge of `h` must already be in `post`.
///
/// Batch edges are visited in order; a biclique found around `e_i` is
/// reported only if it contains none of `e_1..e_{i-1}`.
pub fn enumerate_new<F>(post: &BipartiteGraph, h: &EdgeBatch, s: SizeThreshold, mut sink: F) -> usize
where
    F: FnMut(Biclique),
{
    let mut count = 0;
    for (i, &e) in h.iter().enumerate() {
        let local = post
            .edge_subgraph(e)
            .expect("batch edges are present in the post-update graph");
        let earlier = &h.edges()[..i];
        mine_lmbc(&local, s, |b| {
            if !earlier.iter().any(|&f| b.contains_edge(f)) {
                count += 1;
                sink(b);
            }
        });
    }
    count
}

/// Maximal bicliques of `g + h` that are not maximal in `g`.
pub fn new_bc<F>(g: &BipartiteGraph, h: &EdgeBatch, s: SizeThreshold, sink: F) -> Result<usize, GraphError>
where
    F: FnMut(Biclique),
{
    let mut post = g.clone();
    post.add_edges(h)?;
    Ok(enumerate_new(&post, h, s, sink))
}

/// Maximal bicliques (both sides non-empty) of the graph `b − h`.
///
/// Each batch edge inside `b` splits every current piece containing it into
/// the piece without its left endpoint and the piece without its right
/// endpoint. The result holds at most `2^|E(b) ∩ h|` bicliques.
pub fn split_bicliques(b: &Biclique, h: &EdgeBatch) -> Vec<Biclique> {
    let inside: Vec<Edge> = h.iter().copied().filter(|&e| b.contains_edge(e)).collect();
    if inside.is_empty() {
        return vec![b.clone()];
    }
    let mut pieces = vec![b.clone()];
    let mut next = Vec::new();
    for e in inside {
        next.clear();
        for p in &pieces {
            if p.contains_edge(e) {
                next.push(p.without_left(e.left));
                next.push(p.without_right(e.right));
            } else {
                next.push(p.clone());
            }
        }
        next.sort_unstable();
        next.dedup();
        std::mem::swap(&mut pieces, &mut next);
    }
    pieces.retain(|p| !p.has_empty_side());
    // Splitting in sequence can leave a piece inside another one.
    let maximal: Vec<bool> = pieces
        .iter()
        .map(|p| !pieces.iter().any(|q| p.is_proper_sub_biclique_of(q)))
        .collect();
    pieces
        .into_iter()
        .zip(maximal)
        .filter_map(|(p, keep)| keep.then_some(p))
        .collect()
}

/// Reports the members of `store` that are maximal pieces of some new
/// biclique split along `h`, each once.
///
/// `store` must hold the threshold-`s` maximal bicliques of the graph before
/// `h` was added, and `new` the bicliques created by adding it.
pub fn sub_bc<'a, I, F>(h: &EdgeBatch, store: &SignatureStore, s: SizeThreshold, new: I, mut sink: F) -> usize
where
    I: IntoIterator<Item = &'a Biclique>,
    F: FnMut(Biclique),
{
    let mut seen = SignatureStore::new(store.mode());
    let mut count = 0;
    for b in new {
        for piece in split_bicliques(b, h) {
            if piece.meets_threshold(s.get()) && store.contains(&piece) && seen.try_insert(&piece) {
                count += 1;
                sink(piece);
            }
        }
    }
    count
}

/// Wall time spent in each phase of one update.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhaseTimes {
    /// Enumerating maximal bicliques around the batch edges.
    pub enumerate: Duration,
    /// Splitting those bicliques and checking the pieces.
    pub split: Duration,
    pub total: Duration,
}

impl PhaseTimes {
    fn accumulate(&mut self, other: PhaseTimes) {
        self.enumerate += other.enumerate;
        self.split += other.split;
        self.total += other.total;
    }
}

/// A graph together with a store holding exactly its maximal bicliques that
/// meet the size threshold.
#[derive(Debug, Clone)]
pub struct MaintainedState {
    graph: BipartiteGraph,
    store: SignatureStore,
    threshold: SizeThreshold,
}

impl MaintainedState {
    /// Enumerates the maximal bicliques of `graph` once to seed the store.
    pub fn new(graph: BipartiteGraph, threshold: SizeThreshold, mode: StoreMode) -> Self {
        let mut store = SignatureStore::new(mode);
        mine_lmbc(&graph, threshold, |b| {
            store.insert(&b).expect("enumeration emits each biclique once");
        });
        MaintainedState {
            graph,
            store,
            threshold,
        }
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn store(&self) -> &SignatureStore {
        &self.store
    }

    pub fn threshold(&self) -> SizeThreshold {
        self.threshold
    }

    /// Adds `h` and returns the change in maximal bicliques.
    pub fn add_batch(&mut self, h: &EdgeBatch) -> Result<ChangeSet, EngineError> {
        self.add_batch_timed(h).map(|(cs, _)| cs)
    }

    pub fn add_batch_timed(&mut self, h: &EdgeBatch) -> Result<(ChangeSet, PhaseTimes), EngineError> {
        let start = Instant::now();
        self.graph.add_edges(h)?;
        let s = self.threshold;

        let mut new = Vec::new();
        enumerate_new(&self.graph, h, s, |b| new.push(b));
        let enumerate = start.elapsed();

        let split_start = Instant::now();
        let mut del = Vec::new();
        sub_bc(h, &self.store, s, &new, |b| del.push(b));
        let split = split_start.elapsed();

        if let Err(e) = self.store.apply_changeset(&new, &del) {
            self.graph.remove_edges(h).expect("edges were just added");
            return Err(e.into());
        }
        let times = PhaseTimes {
            enumerate,
            split,
            total: start.elapsed(),
        };
        Ok((ChangeSet::new(new, del), times))
    }

    /// Adds `h`, handing each new biclique to `on_new` and each subsumed one
    /// to `on_del` without collecting either set. Returns the two counts.
    ///
    /// The store is updated as bicliques are produced. A store error midway
    /// (only possible through a signature collision) leaves it partially
    /// updated.
    pub fn add_batch_streaming<N, D>(
        &mut self,
        h: &EdgeBatch,
        mut on_new: N,
        mut on_del: D,
    ) -> Result<(usize, usize), EngineError>
    where
        N: FnMut(&Biclique),
        D: FnMut(&Biclique),
    {
        self.graph.add_edges(h)?;
        let MaintainedState {
            graph,
            store,
            threshold,
        } = self;
        let mut failure = None;
        let mut deleted = 0;
        let created = enumerate_new(graph, h, *threshold, |b| {
            if failure.is_some() {
                return;
            }
            on_new(&b);
            // Pieces of `b` avoid every batch edge, so they can never be
            // one of the new bicliques inserted here.
            for piece in split_bicliques(&b, h) {
                if piece.meets_threshold(threshold.get()) && store.contains(&piece) {
                    if let Err(e) = store.remove(&piece) {
                        failure = Some(e);
                        return;
                    }
                    deleted += 1;
                    on_del(&piece);
                }
            }
            if let Err(e) = store.insert(&b) {
                failure = Some(e);
            }
        });
        match failure {
            Some(e) => Err(e.into()),
            None => Ok((created, deleted)),
        }
    }

    /// Removes `h` and returns the change in maximal bicliques.
    pub fn remove_batch(&mut self, h: &EdgeBatch) -> Result<ChangeSet, EngineError> {
        self.remove_batch_timed(h).map(|(cs, _)| cs)
    }

    /// Destroyed bicliques are the maximal bicliques of the current graph
    /// that contain a removed edge. Created ones are maximal pieces of those,
    /// confirmed by a direct maximality test on the reduced graph.
    pub fn remove_batch_timed(&mut self, h: &EdgeBatch) -> Result<(ChangeSet, PhaseTimes), EngineError> {
        let start = Instant::now();
        self.graph.check_removable(h)?;
        let s = self.threshold;

        let mut del = Vec::new();
        enumerate_new(&self.graph, h, s, |b| del.push(b));
        let enumerate = start.elapsed();

        let split_start = Instant::now();
        self.graph.remove_edges(h)?;
        let mut seen = SignatureStore::new(self.store.mode());
        let mut new = Vec::new();
        for b in &del {
            for piece in split_bicliques(b, h) {
                if piece.meets_threshold(s.get())
                    && self.graph.is_maximal_biclique(&piece)?
                    && seen.try_insert(&piece)
                {
                    new.push(piece);
                }
            }
        }
        let split = split_start.elapsed();

        if let Err(e) = self.store.apply_changeset(&new, &del) {
            self.graph.add_edges(h).expect("edges were just removed");
            return Err(e.into());
        }
        let times = PhaseTimes {
            enumerate,
            split,
            total: start.elapsed(),
        };
        Ok((ChangeSet::new(new, del), times))
    }

    /// Adds `adds`, then removes `dels`, returning the net change.
    ///
    /// `dels` may name edges from `adds`. Both batches are validated before
    /// the state changes.
    pub fn apply_mixed(&mut self, adds: &EdgeBatch, dels: &EdgeBatch) -> Result<ChangeSet, EngineError> {
        self.apply_mixed_timed(adds, dels).map(|(cs, _)| cs)
    }

    pub fn apply_mixed_timed(
        &mut self,
        adds: &EdgeBatch,
        dels: &EdgeBatch,
    ) -> Result<(ChangeSet, PhaseTimes), EngineError> {
        self.graph.check_addable(adds)?;
        let added: std::collections::HashSet<Edge> = adds.iter().copied().collect();
        dels.check_distinct()?;
        if let Some(&e) = dels
            .iter()
            .find(|&&e| !self.graph.has_edge(e) && !added.contains(&e))
        {
            return Err(GraphError::EdgeAbsent(e).into());
        }
        let (first, mut times) = self.add_batch_timed(adds)?;
        let (second, more) = self.remove_batch_timed(dels)?;
        times.accumulate(more);
        Ok((first.then(second), times))
    }
}
