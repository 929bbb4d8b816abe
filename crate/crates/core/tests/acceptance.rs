//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use bicliq_core::oracle::{
    baseline_bc, baseline_diff, brute_force_bc, brute_force_change, gen_cp, gen_extremal, gen_random,
    make_stream, Convention, SplitMix64, StreamSpec,
};
use bicliq_core::{
    split_bicliques, Biclique, BipartiteGraph, EdgeBatch, MaintainedState, SizeThreshold, StoreMode,
};
use common::{after, corpus, half_power, mask_bicliques, symmetric_difference_len, Instance};

/// Criterion 1: corpus size and wall-clock budget.
const CORPUS_SIZE: u64 = 600;
const MAX_SIDE: u64 = 7;
const MAX_BATCH: u64 = 6;
const ORACLE_BUDGET: Duration = Duration::from_secs(60);

/// Criterion 2.
const CP_RANGE: std::ops::RangeInclusive<u32> = 2..=8;
const COUNT_SAMPLES: u64 = 300;
const COUNT_MAX_N: u64 = 16;

/// Criterion 3.
const EXTREMAL_RANGE: std::ops::RangeInclusive<u32> = 4..=12;
const EXHAUSTIVE_MAX_N: usize = 8;

/// Criteria 6 and 7: desk-scale stream.
const LARGE_SIDE: u32 = 1000;
const LARGE_P: f64 = 0.0105;
const LARGE_SEED: u64 = 20_240_601;
const MIN_LARGE_EDGES: usize = 10_000;
const RETAIN: f64 = 0.1;
const BATCH: usize = 100;
const MAX_THRESHOLD: usize = 6;
const FASTER_FRACTION: f64 = 0.95;

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(id: &str, name: &str, outcome: &Outcome) {
    let tag = if outcome.pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {id} {name}: {}", outcome.detail);
}

fn oracle_equivalence(corpus: &[Instance]) -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for inst in corpus {
        let mut st = MaintainedState::new(inst.graph.clone(), inst.threshold, StoreMode::Exact);
        let dynamic = st.add_batch(&inst.batch).unwrap().sorted();
        let baseline = baseline_bc(&inst.graph, &inst.batch, inst.threshold).unwrap().sorted();
        let brute =
            brute_force_change(&inst.graph, &after(inst), Convention::NonTrivial(inst.threshold))
                .unwrap()
                .sorted();
        if dynamic != baseline || dynamic != brute {
            mismatches.push(inst.seed);
        }
    }
    let elapsed = start.elapsed();
    let thresholds: BTreeSet<_> = corpus.iter().map(|i| i.threshold.get()).collect();
    Outcome {
        pass: mismatches.is_empty() && elapsed < ORACLE_BUDGET && corpus.len() >= 500,
        detail: format!(
            "{} instances (s in {:?}), {} mismatches {:?}, {:.2?} (budget {:?})",
            corpus.len(),
            thresholds,
            mismatches.len(),
            &mismatches[..mismatches.len().min(5)],
            elapsed,
            ORACLE_BUDGET
        ),
    }
}

fn count_bound() -> Outcome {
    let mut failures = Vec::new();
    for k in CP_RANGE {
        let count = brute_force_bc(&gen_cp(k), Convention::TrivialInclusive).unwrap().len();
        if count != 1 << k {
            failures.push(format!("CP({k}) has {count}, expected {}", 1 << k));
        }
    }
    let mut max_ratio: f64 = 0.0;
    for seed in 0..COUNT_SAMPLES {
        let mut rng = SplitMix64::new(seed ^ 0x7071);
        let nl = 1 + rng.below(COUNT_MAX_N / 2) as u32;
        let nr = 1 + rng.below(COUNT_MAX_N / 2) as u32;
        let g = gen_random(nl, nr, rng.next_f64(), rng.next_u64());
        let n = g.num_vertices();
        let count = brute_force_bc(&g, Convention::TrivialInclusive).unwrap().len() as f64;
        max_ratio = max_ratio.max(count / half_power(n));
        if count > half_power(n) {
            failures.push(format!("seed {seed}: {count} > 2^({n}/2)"));
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!(
            "CP(k) = 2^k for k in {CP_RANGE:?}; {COUNT_SAMPLES} random graphs n<=16, max count/2^(n/2) = {max_ratio:.3}; {} failures {:?}",
            failures.len(),
            failures.first()
        ),
    }
}

/// Every graph with `nl` left and `nr` right vertices, every absent edge:
/// returns the largest single-edge change.
fn largest_single_edge_change(nl: usize, nr: usize) -> usize {
    let pairs = nl * nr;
    let graphs = 1usize << pairs;
    let adj_of = |mask: usize| -> Vec<u32> {
        (0..nl)
            .map(|u| ((mask >> (u * nr)) & ((1 << nr) - 1)) as u32)
            .collect()
    };
    let all: Vec<Vec<(u32, u32)>> = (0..graphs).map(|m| mask_bicliques(&adj_of(m), nr)).collect();
    let mut best = 0;
    for (m, before) in all.iter().enumerate() {
        for bit in 0..pairs {
            if m >> bit & 1 == 0 {
                best = best.max(symmetric_difference_len(before, &all[m | 1 << bit]));
            }
        }
    }
    best
}

fn single_edge_bound() -> Outcome {
    let mut failures = Vec::new();
    let mut attained = Vec::new();
    for n in EXTREMAL_RANGE.step_by(2) {
        let (g, e) = gen_extremal(n).unwrap();
        let mut g2 = g.clone();
        g2.add_edges(&vec![e].into()).unwrap();
        let observed = brute_force_change(&g, &g2, Convention::TrivialInclusive).unwrap().len();
        let predicted = 3usize << ((n - 2) / 2);
        attained.push(format!("n={n}:{observed}"));
        if observed != predicted {
            failures.push(format!("extremal n={n}: {observed} != {predicted}"));
        }
    }

    // The bitmask oracle used for the sweep must agree with the reference one.
    for seed in 0..50 {
        let g = gen_random(3, 4, 0.5, seed);
        let adj: Vec<u32> = g
            .left_vertices()
            .map(|u| g.left_neighbors(u).iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let masks = mask_bicliques(&adj, 4);
        let to_mask = |vs: &[u32]| vs.iter().fold(0u32, |m, &v| m | 1 << v);
        let mut reference: Vec<(u32, u32)> = brute_force_bc(&g, Convention::TrivialInclusive)
            .unwrap()
            .iter()
            .map(|b| (to_mask(b.left()), to_mask(b.right())))
            .collect();
        reference.sort_unstable();
        if masks != reference {
            failures.push(format!("mask oracle disagrees on seed {seed}"));
        }
    }

    let mut sweep = Vec::new();
    for n in 2..=EXHAUSTIVE_MAX_N {
        let mut worst = 0;
        for nl in 1..n {
            worst = worst.max(largest_single_edge_change(nl, n - nl));
        }
        let bound = 3.0 * half_power(n - 2);
        sweep.push(format!("n={n}:{worst}<={bound:.2}"));
        if worst as f64 > bound + 1e-9 {
            failures.push(format!("n={n}: change {worst} exceeds {bound}"));
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!(
            "extremal [{}]; exhaustive max [{}]; failures {:?}",
            attained.join(" "),
            sweep.join(" "),
            failures
        ),
    }
}

fn structural_properties(corpus: &[Instance]) -> Outcome {
    let (mut new_checked, mut del_checked, mut splits_checked) = (0, 0, 0);
    let mut failures = Vec::new();
    for inst in corpus {
        let mut st = MaintainedState::new(inst.graph.clone(), inst.threshold, StoreMode::Exact);
        let cs = st.add_batch(&inst.batch).unwrap();
        for b in &cs.new {
            new_checked += 1;
            if !inst.batch.iter().any(|&e| b.contains_edge(e)) {
                failures.push(format!("seed {}: new {b} has no batch edge", inst.seed));
            }
            let inside = inst.batch.iter().filter(|&&e| b.contains_edge(e)).count();
            splits_checked += 1;
            if split_bicliques(b, &inst.batch).len() > 1 << inside {
                failures.push(format!("seed {}: split of {b} too large", inst.seed));
            }
        }
        for d in &cs.del {
            del_checked += 1;
            if !cs.new.iter().any(|b| d.is_proper_sub_biclique_of(b)) {
                failures.push(format!("seed {}: subsumed {d} not inside a new one", inst.seed));
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!(
            "{new_checked} new, {del_checked} subsumed, {splits_checked} splits checked; {} failures {:?}",
            failures.len(),
            failures.first()
        ),
    }
}

fn decremental_inverse(corpus: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    for inst in corpus {
        for mode in [StoreMode::Hash64, StoreMode::Exact] {
            let mut st = MaintainedState::new(inst.graph.clone(), inst.threshold, mode);
            let store0 = st.store().clone();
            let added = st.add_batch(&inst.batch).unwrap();
            let removed = st.remove_batch(&inst.batch).unwrap();
            let restored = st.graph().edges().eq(inst.graph.edges())
                && st.graph().num_edges() == inst.graph.num_edges()
                && st.store() == &store0
                && removed.inverted().sorted() == added.sorted();
            if !restored {
                failures.push(inst.seed);
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!(
            "{} instances x 2 store modes; {} not restored {:?}",
            corpus.len(),
            failures.len(),
            &failures[..failures.len().min(5)]
        ),
    }
}

fn large_stream() -> (BipartiteGraph, BipartiteGraph, Vec<EdgeBatch>) {
    let g = gen_random(LARGE_SIDE, LARGE_SIDE, LARGE_P, LARGE_SEED);
    let spec = StreamSpec {
        retain_fraction: RETAIN,
        batch_size: BATCH,
        seed: LARGE_SEED,
    };
    let (init, batches) = make_stream(&g, spec);
    (g, init, batches)
}

fn threshold_monotonicity(graph: &BipartiteGraph, init: &BipartiteGraph, batches: &[EdgeBatch]) -> Outcome {
    let mut totals = Vec::new();
    for s in 1..=MAX_THRESHOLD {
        let mut st = MaintainedState::new(init.clone(), SizeThreshold::new(s).unwrap(), StoreMode::Hash64);
        let mut total = 0usize;
        for b in batches {
            total += st.add_batch(b).unwrap().len();
        }
        totals.push(total);
    }
    let monotone = totals.windows(2).all(|w| w[0] >= w[1]);
    Outcome {
        pass: monotone && graph.num_edges() >= MIN_LARGE_EDGES && batches.iter().all(|b| b.len() <= BATCH),
        detail: format!(
            "{} edges, {} batches of <= {BATCH}; emissions for s=1..{MAX_THRESHOLD}: {totals:?}",
            graph.num_edges(),
            batches.len()
        ),
    }
}

fn change_sensitive_smoke(graph: &BipartiteGraph, init: &BipartiteGraph, batches: &[EdgeBatch]) -> Outcome {
    let s = SizeThreshold::ALL;
    let mut st = MaintainedState::new(init.clone(), s, StoreMode::Hash64);
    let mut faster = 0;
    let mut ratios = Vec::new();
    let mut mismatches = 0;
    let start = Instant::now();
    for b in batches {
        let before = st.graph().clone();
        let (cs, times) = st.add_batch_timed(b).unwrap();
        let t = Instant::now();
        let base = baseline_diff(&before, st.graph(), s);
        let base_time = t.elapsed();
        if cs.sorted() != base.sorted() {
            mismatches += 1;
        }
        if times.total <= base_time {
            faster += 1;
        }
        ratios.push(base_time.as_secs_f64() / times.total.as_secs_f64().max(1e-9));
    }
    ratios.sort_by(f64::total_cmp);
    let median = ratios.get(ratios.len() / 2).copied().unwrap_or(f64::NAN);
    let fraction = faster as f64 / batches.len().max(1) as f64;
    Outcome {
        pass: fraction >= FASTER_FRACTION && mismatches == 0 && graph.num_edges() >= MIN_LARGE_EDGES,
        detail: format!(
            "dynamic <= baseline on {faster}/{} batches ({:.1}%, bar {:.0}%); median speedup {median:.1}x (typical target 10x); {mismatches} mismatches; {:.2?}",
            batches.len(),
            100.0 * fraction,
            100.0 * FASTER_FRACTION,
            start.elapsed()
        ),
    }
}

fn signature_soundness(corpus: &[Instance]) -> Outcome {
    let mut queries = 0usize;
    let mut disagreements = Vec::new();
    for inst in corpus {
        let mut hashed = MaintainedState::new(inst.graph.clone(), inst.threshold, StoreMode::Hash64);
        let mut exact = MaintainedState::new(inst.graph.clone(), inst.threshold, StoreMode::Exact);
        let post = after(inst);
        let mut probes: Vec<Biclique> = brute_force_bc(&inst.graph, Convention::TrivialInclusive).unwrap();
        probes.extend(brute_force_bc(&post, Convention::TrivialInclusive).unwrap());
        let check = |h: &MaintainedState, e: &MaintainedState, probes: &[Biclique], out: &mut Vec<(u64, Biclique)>| {
            for p in probes {
                if h.store().contains(p) != e.store().contains(p) {
                    out.push((inst.seed, p.clone()));
                }
            }
            probes.len()
        };
        queries += check(&hashed, &exact, &probes, &mut disagreements);
        let a = hashed.add_batch(&inst.batch).unwrap().sorted();
        let b = exact.add_batch(&inst.batch).unwrap().sorted();
        if a != b {
            disagreements.push((inst.seed, Biclique::default()));
        }
        let pieces: Vec<Biclique> = b
            .new
            .iter()
            .flat_map(|x| split_bicliques(x, &inst.batch))
            .collect();
        probes.extend(pieces);
        queries += check(&hashed, &exact, &probes, &mut disagreements);
    }
    Outcome {
        pass: disagreements.is_empty(),
        detail: format!(
            "{queries} membership queries over {} instances; {} disagreements",
            corpus.len(),
            disagreements.len()
        ),
    }
}

fn main() {
    let corpus = corpus(CORPUS_SIZE, MAX_SIDE, MAX_BATCH);
    let (graph, init, batches) = large_stream();

    let results = [
        ("C1", "oracle equivalence", oracle_equivalence(&corpus)),
        ("C2", "maximal biclique count bound", count_bound()),
        ("C3", "single-edge change bound", single_edge_bound()),
        ("C4", "structural properties", structural_properties(&corpus)),
        ("C5", "decremental inverse", decremental_inverse(&corpus)),
        ("C6", "threshold monotonicity", threshold_monotonicity(&graph, &init, &batches)),
        ("C7", "change-sensitive smoke benchmark", change_sensitive_smoke(&graph, &init, &batches)),
        ("C8", "signature soundness", signature_soundness(&corpus)),
    ];
    for (id, name, outcome) in &results {
        report(id, name, outcome);
    }
    let failed = results.iter().filter(|r| !r.2.pass).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
