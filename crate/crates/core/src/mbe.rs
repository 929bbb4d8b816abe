//! Output-sensitive maximal biclique enumeration on a static graph.
//!
//! Depth-first search over vertex sets of the smaller side. Each node `X`
//! carries its common neighborhood `Γ(X)` and a tail of candidates that may
//! still be added. A child `X ∪ {v}` is closed to `Y = Γ(Γ(X ∪ {v}))` and
//! accepted only if everything the closure added beyond `X ∪ {v}` is still in
//! the tail; this makes every closed pair reachable from exactly one parent.

use std::collections::HashMap;
use std::fmt;

use crate::biclique::Biclique;
use crate::error::GraphError;
use crate::graph::{BipartiteGraph, Side};
use crate::sorted;

/// Minimum number of vertices required on each side of a reported biclique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SizeThreshold(usize);

impl SizeThreshold {
    /// All maximal bicliques with both sides non-empty.
    pub const ALL: SizeThreshold = SizeThreshold(1);

    pub fn new(s: usize) -> Option<Self> {
        (s >= 1).then_some(SizeThreshold(s))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl Default for SizeThreshold {
    fn default() -> Self {
        SizeThreshold::ALL
    }
}

impl fmt::Display for SizeThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Result of closing a left vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub biclique: Biclique,
    /// `Γ(X)` was empty, so the left side is all of `L` by convention.
    pub degenerate: bool,
}

/// Galois closure of a non-empty left set: `Y = ∩_{x∈X} Γ(x)`, `X' = ∩_{y∈Y} Γ(y)`.
pub fn closure(g: &BipartiteGraph, left: &[u32]) -> Result<Closure, GraphError> {
    let mut xs = left.to_vec();
    xs.sort_unstable();
    xs.dedup();
    if xs.is_empty() {
        return Err(GraphError::EmptySide(Biclique::default()));
    }
    for &x in &xs {
        if !g.contains_vertex(crate::graph::VertexId::left(x)) {
            return Err(GraphError::UnknownVertex(crate::graph::VertexId::left(x)));
        }
    }
    let ys = g.common_neighbors(Side::Left, &xs);
    if ys.is_empty() {
        return Ok(Closure {
            biclique: Biclique::from_sorted(g.left_vertices().collect(), Vec::new()),
            degenerate: true,
        });
    }
    let closed = g.common_neighbors(Side::Right, &ys);
    Ok(Closure {
        biclique: Biclique::from_sorted(closed, ys),
        degenerate: false,
    })
}

/// Emits every maximal biclique of `g` with at least `s` vertices per side,
/// each exactly once, and returns how many were emitted.
///
/// The traversal order is a deterministic function of the graph.
pub fn mine_lmbc<F>(g: &BipartiteGraph, s: SizeThreshold, mut sink: F) -> usize
where
    F: FnMut(Biclique),
{
    let expand = if g.num_right() < g.num_left() {
        Side::Right
    } else {
        Side::Left
    };
    let mut miner = Miner {
        g,
        expand,
        min: s.get(),
        count: 0,
        sink: &mut sink,
    };
    let tail = g.side_vertices(expand);
    let all_other = g.side_vertices(expand.opposite());
    miner.descend(&[], &all_other, &tail);
    miner.count
}

/// Collects the output of [`mine_lmbc`].
pub fn maximal_bicliques(g: &BipartiteGraph, s: SizeThreshold) -> Vec<Biclique> {
    let mut out = Vec::new();
    mine_lmbc(g, s, |b| out.push(b));
    out
}

struct Miner<'a, F> {
    g: &'a BipartiteGraph,
    /// Side whose subsets are enumerated.
    expand: Side,
    min: usize,
    count: usize,
    sink: &'a mut F,
}

impl<F: FnMut(Biclique)> Miner<'_, F> {
    /// `x` is the current (closed) set, `common` is `Γ(x)`, `tail` the
    /// ascending candidates that may extend `x`.
    fn descend(&mut self, x: &[u32], common: &[u32], tail: &[u32]) {
        let other = self.expand.opposite();
        // Γ(x ∪ {w}) = common ∩ Γ(w), built by scanning `common` in ascending
        // order so each list comes out sorted.
        let mut grown: HashMap<u32, Vec<u32>> = HashMap::new();
        for &q in common {
            for &w in self.g.side_neighbors(other, q) {
                if tail.binary_search(&w).is_ok() {
                    grown.entry(w).or_default().push(q);
                }
            }
        }
        let mut cands: Vec<(u32, Vec<u32>)> = grown
            .into_iter()
            .filter(|(_, n)| n.len() >= self.min)
            .collect();
        cands.sort_unstable_by(|a, b| a.1.len().cmp(&b.1.len()).then(a.0.cmp(&b.0)));

        let mut remaining: Vec<u32> = cands.iter().map(|c| c.0).collect();
        remaining.sort_unstable();

        for (v, n) in cands {
            sorted::remove(&mut remaining, v);
            if x.len() + 1 + remaining.len() < self.min {
                continue;
            }
            let closed = self.g.common_neighbors(other, &n);
            let canonical = closed
                .iter()
                .all(|&w| w == v || x.binary_search(&w).is_ok() || remaining.binary_search(&w).is_ok());
            if !canonical {
                continue;
            }
            if closed.len() >= self.min {
                self.count += 1;
                let b = Biclique::from_sorted(closed.clone(), n.clone());
                (self.sink)(match self.expand {
                    Side::Left => b,
                    Side::Right => b.transposed(),
                });
            }
            let child_tail: Vec<u32> = remaining
                .iter()
                .copied()
                .filter(|w| closed.binary_search(w).is_err())
                .collect();
            if !child_tail.is_empty() {
                self.descend(&closed, &n, &child_tail);
            }
        }
    }
}
