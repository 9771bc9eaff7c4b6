use crate::burning::{propagate_step, run_schedule, Schedule};
use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::independence::max_independent_set_with;

pub fn burn_via_independent_set(h: &Hypergraph) -> Result<Schedule> {
    burn_via_independent_set_with(h, &SolverConfig::default())
}

/// Burns a maximum independent set one vertex per round, then finishes with
/// one more source if anything is left.
///
/// A maximum independent set `I` meets every vertex `v` outside it through an
/// edge `e` with `e \ {v} ⊆ I`, so once `I` is burned everything else ignites
/// in the next round. Members of `I` that propagation has already reached are
/// skipped, so the sequence has at most `|I| + 1` sources. Requires that no
/// edge has fewer than two vertices.
pub fn burn_via_independent_set_with(h: &Hypergraph, cfg: &SolverConfig) -> Result<Schedule> {
    if h.has_empty_edge() || h.has_singleton_edge() {
        return Err(Error::Precondition(
            "every edge must have at least two vertices".into(),
        ));
    }
    let independent = max_independent_set_with(h, cfg)?;
    let mut burned = h.no_vertices();
    let mut sources = Vec::new();
    for v in independent.iter() {
        if burned.is_full() {
            break;
        }
        if burned.contains(v) {
            continue;
        }
        sources.push(v);
        burned.union_with(&propagate_step(h, &burned));
        burned.insert(v);
    }
    if let Some(last) = burned.complement().iter().next() {
        sources.push(last);
    }
    let schedule = run_schedule(h, &sources)?;
    debug_assert!(schedule.is_complete());
    Ok(schedule)
}
