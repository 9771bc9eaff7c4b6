use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// One propagation step: every unburned vertex `v` that lies in an edge of
/// size at least two whose other members are all in `burned`.
pub fn propagate_step(h: &Hypergraph, burned: &VertexSet) -> VertexSet {
    assert_eq!(burned.universe(), h.vertex_count(), "universe mismatch");
    let mut out = h.no_vertices();
    for e in h.edges().iter().filter(|e| e.len() >= 2) {
        let mut unburned = e.iter().filter(|&&v| !burned.contains(v));
        if let (Some(v), None) = (unburned.next(), unburned.next()) {
            out.insert(*v);
        }
    }
    out
}

/// Fire at the end of a round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FireState {
    pub round: usize,
    pub source: usize,
    /// Vertices that caught fire by propagation this round (may include the
    /// source, in which case the source was redundant).
    pub spread: VertexSet,
    pub burned: VertexSet,
    /// 1-based round in which each vertex caught fire.
    pub burn_round: Vec<Option<usize>>,
}

impl FireState {
    pub fn redundant(&self) -> bool {
        self.spread.contains(self.source)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    /// Valid, and every vertex is burned after the last round.
    Complete { round: usize },
    /// Valid, but some vertex is still unburned after the last round.
    Incomplete,
    /// The source of `round` was already burned at the end of the previous round.
    NonValid { round: usize },
}

/// A source sequence together with its simulated trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    pub sources: Vec<usize>,
    /// States after rounds `1..`; stops before a non-valid round.
    pub trace: Vec<FireState>,
    pub verdict: Verdict,
}

impl Schedule {
    pub fn is_complete(&self) -> bool {
        matches!(self.verdict, Verdict::Complete { .. })
    }

    pub fn is_valid(&self) -> bool {
        !matches!(self.verdict, Verdict::NonValid { .. })
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    pub fn final_state(&self) -> Option<&FireState> {
        self.trace.last()
    }
}

/// Plays the round-based game. In round `r` propagation from `F_{r-1}` and the
/// ignition of the `r`-th source happen together; a source may be one that
/// propagation reaches in the same round, but not one already burned.
pub fn run_schedule(h: &Hypergraph, sources: &[usize]) -> Result<Schedule> {
    let n = h.vertex_count();
    if sources.is_empty() {
        return Err(Error::Precondition("source sequence is empty".into()));
    }
    if let Some(&v) = sources.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            vertex_count: n,
        });
    }

    let mut burned = h.no_vertices();
    let mut burn_round = vec![None; n];
    let mut trace = Vec::with_capacity(sources.len());
    for (i, &source) in sources.iter().enumerate() {
        let round = i + 1;
        if burned.contains(source) {
            return Ok(Schedule {
                sources: sources.to_vec(),
                trace,
                verdict: Verdict::NonValid { round },
            });
        }
        let spread = propagate_step(h, &burned);
        burned.union_with(&spread);
        burned.insert(source);
        for v in spread.iter().chain(std::iter::once(source)) {
            burn_round[v].get_or_insert(round);
        }
        trace.push(FireState {
            round,
            source,
            spread,
            burned: burned.clone(),
            burn_round: burn_round.clone(),
        });
    }
    let verdict = if burned.is_full() {
        Verdict::Complete {
            round: sources.len(),
        }
    } else {
        Verdict::Incomplete
    };
    Ok(Schedule {
        sources: sources.to_vec(),
        trace,
        verdict,
    })
}

pub fn is_burning_sequence(h: &Hypergraph, sources: &[usize]) -> Result<bool> {
    Ok(run_schedule(h, sources)?.is_complete())
}
