#![allow(dead_code)]

use bicliq_core::oracle::{gen_random, SplitMix64};
use bicliq_core::{BipartiteGraph, Edge, EdgeBatch, SizeThreshold};

/// One randomized (graph, additive batch, threshold) test case.
#[derive(Debug, Clone)]
pub struct Instance {
    pub seed: u64,
    pub graph: BipartiteGraph,
    pub batch: EdgeBatch,
    pub threshold: SizeThreshold,
    pub p: f64,
}

pub const DENSITIES: [f64; 3] = [0.2, 0.4, 0.6];

/// Deterministic corpus: `|L|, |R| ≤ max_side`, batch of up to `max_batch`
/// absent edges (occasionally touching a brand-new vertex), `s ∈ {1, 2}`.
pub fn corpus(count: u64, max_side: u64, max_batch: u64) -> Vec<Instance> {
    (0..count).map(|i| instance(i, max_side, max_batch)).collect()
}

pub fn instance(seed: u64, max_side: u64, max_batch: u64) -> Instance {
    let mut rng = SplitMix64::new(seed.wrapping_mul(0x1000_0001).wrapping_add(17));
    let nl = 1 + rng.below(max_side) as u32;
    let nr = 1 + rng.below(max_side) as u32;
    let p = DENSITIES[(seed % 3) as usize];
    let threshold = SizeThreshold::new(1 + ((seed / 3) % 2) as usize).unwrap();
    let graph = gen_random(nl, nr, p, rng.next_u64());

    let mut absent: Vec<Edge> = (0..nl)
        .flat_map(|u| (0..nr).map(move |v| Edge::new(u, v)))
        .filter(|&e| !graph.has_edge(e))
        .collect();
    // A fresh vertex on one side when the total vertex budget allows it.
    if rng.below(4) == 0 && (nl as u64) < max_side {
        absent.extend((0..nr).map(|v| Edge::new(nl, v)));
    } else if rng.below(4) == 0 && (nr as u64) < max_side {
        absent.extend((0..nl).map(|u| Edge::new(u, nr)));
    }
    rng.shuffle(&mut absent);
    let rho = (rng.below(max_batch + 1) as usize).min(absent.len());
    absent.truncate(rho);
    Instance {
        seed,
        graph,
        batch: absent.into(),
        threshold,
        p,
    }
}

pub fn after(inst: &Instance) -> BipartiteGraph {
    let mut g = inst.graph.clone();
    g.add_edges(&inst.batch).unwrap();
    g
}

/// Maximal bicliques as `(left mask, right mask)` pairs for a graph given by
/// per-left-vertex adjacency masks over `nr` right vertices, including the
/// one-sided ones. Sorted.
pub fn mask_bicliques(adj: &[u32], nr: usize) -> Vec<(u32, u32)> {
    let nl = adj.len();
    let all_r = if nr == 32 { u32::MAX } else { (1u32 << nr) - 1 };
    let all_l = if nl == 32 { u32::MAX } else { (1u32 << nl) - 1 };
    let mut out = Vec::new();
    for xs in 0..=all_l {
        let mut ys = all_r;
        for (u, &a) in adj.iter().enumerate() {
            if xs >> u & 1 == 1 {
                ys &= a;
            }
        }
        let mut closed = 0u32;
        for (u, &a) in adj.iter().enumerate() {
            if a & ys == ys {
                closed |= 1 << u;
            }
        }
        if closed == xs && !(xs == 0 && ys == 0) {
            out.push((xs, ys));
        }
    }
    out.sort_unstable();
    out
}

/// `|A △ B|` for sorted, duplicate-free slices.
pub fn symmetric_difference_len<T: Ord>(a: &[T], b: &[T]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    a.len() + b.len() - 2 * common
}

/// `2^{x/2}` as a float.
pub fn half_power(x: usize) -> f64 {
    2f64.powf(x as f64 / 2.0)
}
