use crate::error::OracleError;
use crate::graph::{BipartiteGraph, Edge, EdgeBatch};

/// SplitMix64 (Steele, Lea, Flood 2014).
///
/// Small enough to port anywhere bit-for-bit, so generated corpora can be
/// shared between implementations. Constants: increment
/// `0x9E3779B97F4A7C15`, mix multipliers `0xBF58476D1CE4E5B9` and
/// `0x94D049BB133111EB`, shifts 30/27/31.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `floor(next_u64 · n / 2^64)`, in `[0, n)`.
    pub fn below(&mut self, n: u64) -> u64 {
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    /// Fisher–Yates, walking from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// Cocktail-party graph `CP(k)`: `K_{k,k}` minus the perfect matching
/// `(i, i)`. Left and right vertices are `0..k`.
pub fn gen_cp(k: u32) -> BipartiteGraph {
    let mut g = BipartiteGraph::with_vertices(k, k);
    let edges: EdgeBatch = (0..k)
        .flat_map(|i| (0..k).filter(move |&p| p != i).map(move |p| Edge::new(i, p)))
        .collect();
    g.add_edges(&edges).expect("cocktail-party edges are distinct");
    g
}

/// Single-edge extremal construction on `n` vertices.
///
/// The core is `CP(n/2 − 1)` on ids `0..n/2−1` of both sides; `u = n/2 − 1`
/// on the left is joined to every core right vertex and `v = n/2 − 1` on the
/// right to every core left vertex. Returns the graph and the absent edge
/// `(u, v)` whose insertion changes `3·2^{(n−2)/2}` maximal bicliques when
/// one-sided bicliques are counted.
pub fn gen_extremal(n: u32) -> Result<(BipartiteGraph, Edge), OracleError> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(OracleError::Precondition(format!(
            "extremal construction needs an even vertex count of at least 4, got {n}"
        )));
    }
    let k = n / 2 - 1;
    let mut g = gen_cp(k);
    let (u, v) = (k, k);
    let spokes: EdgeBatch = (0..k)
        .flat_map(|i| [Edge::new(u, i), Edge::new(i, v)])
        .collect();
    g.add_edges(&spokes).expect("spokes are new edges");
    Ok((g, Edge::new(u, v)))
}

/// Random bipartite graph on left `0..num_left`, right `0..num_right`; each
/// pair is an edge independently with probability `p`. Pairs are visited in
/// row-major order, one draw each.
pub fn gen_random(num_left: u32, num_right: u32, p: f64, seed: u64) -> BipartiteGraph {
    let mut rng = SplitMix64::new(seed);
    let mut g = BipartiteGraph::with_vertices(num_left, num_right);
    let mut edges = Vec::new();
    for u in 0..num_left {
        for v in 0..num_right {
            if rng.next_f64() < p {
                edges.push(Edge::new(u, v));
            }
        }
    }
    g.add_edges(&edges.into()).expect("generated edges are distinct");
    g
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StreamSpec {
    /// Probability that an edge stays in the initial graph.
    pub retain_fraction: f64,
    pub batch_size: usize,
    pub seed: u64,
}

/// Splits `g` into an initial graph and a stream of addition batches that
/// rebuilds `g` when replayed.
///
/// Edges are visited in ascending order with one draw each; dropped edges are
/// shuffled with the same generator and cut into `batch_size` chunks. The
/// initial graph keeps every vertex of `g`.
pub fn make_stream(g: &BipartiteGraph, spec: StreamSpec) -> (BipartiteGraph, Vec<EdgeBatch>) {
    assert!(spec.batch_size >= 1, "batch size must be positive");
    let mut rng = SplitMix64::new(spec.seed);
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for e in g.edges() {
        if rng.next_f64() < spec.retain_fraction {
            kept.push(e);
        } else {
            dropped.push(e);
        }
    }
    rng.shuffle(&mut dropped);

    let mut initial = BipartiteGraph::new();
    for u in g.left_vertices() {
        initial.add_vertex(crate::graph::VertexId::left(u));
    }
    for v in g.right_vertices() {
        initial.add_vertex(crate::graph::VertexId::right(v));
    }
    initial.add_edges(&kept.into()).expect("edges of g are distinct");
    let batches = dropped
        .chunks(spec.batch_size)
        .map(|c| EdgeBatch::new(c.to_vec()))
        .collect();
    (initial, batches)
}
