//! Ground truth and test inputs: exhaustive enumeration, the recompute-and-diff
//! baseline, and graph/stream generators.

mod brute;
mod gen;

pub use brute::{
    baseline_bc, baseline_diff, brute_force_bc, brute_force_change, Convention,
    BRUTE_FORCE_VERTEX_LIMIT,
};
pub use gen::{gen_cp, gen_extremal, gen_random, make_stream, SplitMix64, StreamSpec};
