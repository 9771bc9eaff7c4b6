//! Lazy burning: seed a set once and let propagation run to a fixed point.

use crate::burning::{propagate_step, Schedule, SolveResult, Verdict};
use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::mask::{members, Compact, MAX_MASK_VERTICES};
use crate::vertex_set::VertexSet;

/// Trace of a lazy burning process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazyRun {
    pub initial: VertexSet,
    pub closure: VertexSet,
    /// Vertices newly burned at each synchronous step, in order.
    pub steps: Vec<VertexSet>,
}

impl LazyRun {
    pub fn burns_everything(&self) -> bool {
        self.closure.is_full()
    }
}

/// Propagates from `seeds` in synchronous waves until nothing changes.
pub fn lazy_closure(h: &Hypergraph, seeds: &VertexSet) -> LazyRun {
    let mut closure = seeds.clone();
    let mut steps = Vec::new();
    loop {
        let wave = propagate_step(h, &closure);
        if wave.is_empty() {
            break;
        }
        closure.union_with(&wave);
        steps.push(wave);
    }
    LazyRun {
        initial: seeds.clone(),
        closure,
        steps,
    }
}

pub fn is_lazy_burning_set(h: &Hypergraph, seeds: &VertexSet) -> bool {
    lazy_closure(h, seeds).burns_everything()
}

pub fn lazy_burning_number_exact(h: &Hypergraph) -> Result<SolveResult<VertexSet>> {
    lazy_burning_number_exact_with(h, &SolverConfig::default())
}

/// Exact lazy burning number with the lexicographically smallest optimal set
/// that contains no edge of size two or more.
///
/// Vertices outside every non-singleton edge are seeded up front. The search
/// then tries cardinalities upward from a lower bound; the first cardinality
/// with a set whose closure is everything is optimal. Sets containing a whole
/// non-singleton edge are skipped: dropping one vertex of such an edge still
/// burns everything, so some optimum avoids them.
pub fn lazy_burning_number_exact_with(
    h: &Hypergraph,
    cfg: &SolverConfig,
) -> Result<SolveResult<VertexSet>> {
    let n = h.vertex_count();
    SolverConfig::check("lazy", "vertex count", n, cfg.lazy_max_vertices.min(MAX_MASK_VERTICES))?;
    let c = Compact::new(h, "lazy")?;
    let out = solve_compact(&c);
    let witness = VertexSet::from_mask(n, out.set);
    debug_assert!(is_lazy_burning_set(h, &witness));
    Ok(SolveResult {
        value: out.value,
        witness,
        nodes_explored: out.nodes,
        bounds: (out.lower, n),
    })
}

pub(crate) struct LazyOutcome {
    pub value: usize,
    pub set: u64,
    pub nodes: u64,
    pub lower: usize,
}

pub(crate) fn solve_compact(c: &Compact) -> LazyOutcome {
    let mandatory = c.unignitable;
    let fixed = mandatory.count_ones() as usize;
    let pool: Vec<usize> = members(c.full & !mandatory).collect();
    let lower = (c.n.saturating_sub(c.edges.len()))
        .max(c.components.len())
        .max(fixed);

    let mut search = Combos {
        c,
        pool: &pool,
        nodes: 0,
    };
    for size in lower..=c.n {
        let picks = size - fixed;
        if let Some(set) = search.first(mandatory, 0, picks) {
            return LazyOutcome {
                value: size,
                set,
                nodes: search.nodes,
                lower,
            };
        }
    }
    unreachable!("the whole vertex set minus one vertex per edge always burns")
}

struct Combos<'a> {
    c: &'a Compact,
    pool: &'a [usize],
    nodes: u64,
}

impl Combos<'_> {
    /// First (in lexicographic order) way to add `picks` more vertices from
    /// `pool[from..]` to `chosen` that burns everything.
    fn first(&mut self, chosen: u64, from: usize, picks: usize) -> Option<u64> {
        if picks == 0 {
            self.nodes += 1;
            return (self.c.closure(chosen) == self.c.full).then_some(chosen);
        }
        let last_start = self.pool.len().checked_sub(picks)?;
        for i in from..=last_start {
            let next = chosen | (1 << self.pool[i]);
            if self.c.edges.iter().any(|&e| e & !next == 0) {
                continue;
            }
            if let Some(found) = self.first(next, i + 1, picks - 1) {
                return Some(found);
            }
        }
        None
    }
}

/// Drops the last source of a complete burning sequence; what remains is a
/// lazy burning set.
///
/// The last source must lie in an edge of size at least two: a vertex that
/// propagation can never reach has to stay a seed.
pub fn lazy_set_from_sequence(h: &Hypergraph, schedule: &Schedule) -> Result<VertexSet> {
    if !matches!(schedule.verdict, Verdict::Complete { .. }) {
        return Err(Error::Precondition(
            "schedule is not a complete burning sequence".into(),
        ));
    }
    let (&last, rest) = schedule
        .sources
        .split_last()
        .expect("complete schedules are nonempty");
    if h.unignitable_vertices().contains(last) {
        return Err(Error::Precondition(format!(
            "last source {} lies in no edge of size two or more",
            h.label(last)
        )));
    }
    let set = VertexSet::from_members(h.vertex_count(), rest.iter().copied());
    if !is_lazy_burning_set(h, &set) {
        return Err(Error::Precondition(
            "sources minus the last do not burn the hypergraph".into(),
        ));
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::run_schedule;

    fn tight3(n: usize) -> Hypergraph {
        Hypergraph::new(n, (0..n - 2).map(|i| vec![i, i + 1, i + 2])).unwrap()
    }

    #[test]
    fn empty_seed_burns_nothing() {
        let h = tight3(5);
        let run = lazy_closure(&h, &h.no_vertices());
        assert!(run.closure.is_empty());
        assert!(run.steps.is_empty());
    }

    #[test]
    fn seed_in_middle_spreads_both_ways() {
        let h = tight3(7);
        let run = lazy_closure(&h, &VertexSet::from_members(7, [2, 3]));
        assert!(run.burns_everything());
        let steps: Vec<Vec<usize>> = run.steps.iter().map(VertexSet::to_vec).collect();
        assert_eq!(steps, vec![vec![1, 4], vec![0, 5], vec![6]]);
    }

    #[test]
    fn tight_path_lazy_number_is_two() {
        for n in 3..=12 {
            let r = lazy_burning_number_exact(&tight3(n)).unwrap();
            assert_eq!(r.value, 2, "n = {n}");
            assert_eq!(r.witness.to_vec(), vec![0, 1]);
        }
    }

    #[test]
    fn unignitable_vertices_are_seeded() {
        let h = Hypergraph::new(4, vec![vec![0], vec![1, 2, 3]]).unwrap();
        let r = lazy_burning_number_exact(&h).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.witness.contains(0));
    }

    #[test]
    fn sequence_minus_last_source() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let s = run_schedule(&h, &[0, 1, 2]).unwrap();
        assert_eq!(lazy_set_from_sequence(&h, &s).unwrap().to_vec(), vec![0, 1]);

        let incomplete = run_schedule(&h, &[0, 1]).unwrap();
        assert!(lazy_set_from_sequence(&h, &incomplete).is_err());

        let iso = Hypergraph::new(3, vec![vec![0, 1]]).unwrap();
        let s = run_schedule(&iso, &[0, 1, 2]).unwrap();
        assert!(s.is_complete());
        assert!(lazy_set_from_sequence(&iso, &s).is_err());
    }

    #[test]
    fn guard() {
        let h = Hypergraph::new(23, Vec::<Vec<usize>>::new()).unwrap();
        assert!(matches!(
            lazy_burning_number_exact(&h),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
