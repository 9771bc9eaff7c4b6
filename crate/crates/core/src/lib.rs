//! Exact burning and lazy burning of hypergraphs.
//!
//! A vertex catches fire when it lies in an edge of size at least two whose
//! other members are all burning. The round-based game adds one source per
//! round; the lazy game seeds a set once and lets the fire spread.

pub mod burning;
pub mod families;
pub mod bounds;
mod config;
mod error;
mod format;
mod hypergraph;
mod independence;
pub mod lazy;
mod mask;
mod vertex_set;

pub use burning::{
    burn_via_independent_set, burning_number_exact, burning_number_exact_with,
    is_burning_sequence, max_spread, max_spread_with, propagate_step, run_schedule, FireState,
    Schedule, SolveResult, Verdict,
};
pub use config::SolverConfig;
pub use error::{Error, ParseErrorKind, Result};
pub use format::{parse_hypergraph, serialize_hypergraph};
pub use hypergraph::{label_cmp, Hypergraph, StructuralProfile};
pub use independence::{max_independent_set, max_independent_set_with};
pub use lazy::{
    is_lazy_burning_set, lazy_burning_number_exact, lazy_burning_number_exact_with,
    lazy_closure, lazy_set_from_sequence, LazyRun,
};
pub use vertex_set::VertexSet;
