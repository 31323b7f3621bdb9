//! Oriented path and cycle patterns in tournaments: exact search kernels,
//! isomorph-free enumeration, the named exception catalogs, and exhaustive
//! verification sweeps over small orders.
//!
//! Tournaments are arc-direction bit tables (order at most 64) with a
//! line-based text format; patterns are signed block-length sequences. The
//! `verify` module re-derives every catalog and statement from scratch by
//! exhaustive search and reports differences rather than trusting either
//! side.

mod error;

pub mod catalog;
pub mod enumerate;
pub mod export;
pub mod pattern;
pub mod search;
pub mod tournament;
pub mod verify;

pub use error::{Error, Result};
pub use pattern::{parse_cycle_type, parse_path_type, CycleType, PathType, Sign};
pub use search::{
    contains_cycle, count_path_embeddings, find_cycle_embedding, find_path_embedding, origins,
    proof_guided_cycle_embedding, validate_cycle_embedding, validate_path_embedding, Embedding,
    SearchConstraints,
};
pub use tournament::{CanonicalForm, Tournament, VertexSet, MAX_ORDER};
