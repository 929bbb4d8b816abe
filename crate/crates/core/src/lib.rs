//! Maintenance of the maximal bicliques of a bipartite graph under batches of
//! edge insertions and deletions, with work proportional to the change.
//!
//! The main entry point is [`MaintainedState`], which pairs a
//! [`BipartiteGraph`] with a [`SignatureStore`] of its current maximal
//! bicliques and returns a [`ChangeSet`] for every batch. The [`oracle`]
//! module provides exhaustive and recompute-from-scratch references plus
//! graph generators used for testing.

pub mod biclique;
pub mod changeset;
pub mod engine;
pub mod error;
pub mod graph;
pub mod mbe;
pub mod oracle;
pub mod signature;
mod sorted;

pub use biclique::Biclique;
pub use changeset::ChangeSet;
pub use engine::{enumerate_new, new_bc, split_bicliques, sub_bc, MaintainedState, PhaseTimes};
pub use error::{EngineError, GraphError, OracleError, StoreError};
pub use graph::{BipartiteGraph, Edge, EdgeBatch, Side, VertexId};
pub use mbe::{closure, maximal_bicliques, mine_lmbc, Closure, SizeThreshold};
pub use signature::{canonical_form, decode_canonical, signature, Signature, SignatureStore, StoreMode};
