//! Small hand-drawn instances, stored in the canonical text format.

use crate::format::parse_hypergraph;
use crate::hypergraph::Hypergraph;

fn load(text: &str) -> Hypergraph {
    parse_hypergraph(text).expect("bundled fixture parses")
}

/// A 3-edge `{x, z, w}` plus the isolated vertex `y`. Here
/// `n − 𝓔 = b_L = b = α = 3`.
pub fn bounds_all_tight() -> Hypergraph {
    load(include_str!("../../fixtures/bounds_all_tight.hg"))
}

/// Tight 3-uniform paths on `1..6` and `7..11`. The components need 4 and 3
/// rounds, the whole only 5.
pub fn two_tight_paths() -> Hypergraph {
    load(include_str!("../../fixtures/two_tight_paths.hg"))
}

/// A tight 3-uniform path on ten vertices, a 3-edge and a 2-edge. The
/// components need 5, 3 and 2 rounds, the whole only 6.
pub fn path_triple_pair() -> Hypergraph {
    load(include_str!("../../fixtures/path_triple_pair.hg"))
}

/// Weak and strong subhypergraphs induced by `{u2, .., u5}` burn equally fast.
pub fn sub_equal() -> Hypergraph {
    load(include_str!("../../fixtures/sub_equal.hg"))
}

/// The weak subhypergraph induced by `{u1, u2, u3}` burns strictly faster
/// than the strong one.
pub fn sub_strict() -> Hypergraph {
    load(include_str!("../../fixtures/sub_strict.hg"))
}

/// The strong subhypergraph induced by `{u2, u3, u4}` burns slower than the
/// whole.
pub fn strong_induced_larger() -> Hypergraph {
    load(include_str!("../../fixtures/strong_induced_larger.hg"))
}

/// The strong subhypergraph induced by `{u6, u7, u8}` burns faster than the
/// whole.
pub fn strong_induced_smaller() -> Hypergraph {
    load(include_str!("../../fixtures/strong_induced_smaller.hg"))
}

/// Dropping all but the first edge restricted to `{u2, .., u6}` gives a weak,
/// non-induced subhypergraph that burns slower than the whole.
pub fn weak_noninduced_larger() -> Hypergraph {
    load(include_str!("../../fixtures/weak_noninduced_larger.hg"))
}
