use std::collections::HashMap;

use rayon::prelude::*;

use crate::burning::{run_schedule, Schedule};
use crate::config::SolverConfig;
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::independence::max_independent_set_with;
use crate::lazy;
use crate::mask::{members, Compact, MAX_MASK_VERTICES};

/// Outcome of an exact solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    /// Search nodes visited. Deterministic for a given input, whatever the
    /// thread count.
    pub nodes_explored: u64,
    /// Lower and upper bounds known before the search started.
    pub bounds: (usize, usize),
}

/// Root branches are searched in fixed-size groups so the work done, and hence
/// `nodes_explored`, does not depend on how many threads run them.
const ROOT_GROUP: usize = 8;

pub fn burning_number_exact(h: &Hypergraph) -> Result<SolveResult<Schedule>> {
    burning_number_exact_with(h, &SolverConfig::default())
}

/// Exact burning number with an optimal source sequence.
///
/// Iterative deepening on the sequence length, starting from the largest of:
/// the lazy burning number (plus one when every vertex can be reached by
/// propagation), and the burning number of each connected component. Within a
/// length the search is depth-first over sources in index order with
/// memoised dead states, so the witness is the lexicographically smallest
/// optimal sequence whose sources before the last are never ones propagation
/// would reach in the same round.
pub fn burning_number_exact_with(
    h: &Hypergraph,
    cfg: &SolverConfig,
) -> Result<SolveResult<Schedule>> {
    let n = h.vertex_count();
    SolverConfig::check(
        "burning",
        "vertex count",
        n,
        cfg.burning_max_vertices.min(MAX_MASK_VERTICES),
    )?;
    let c = Compact::new(h, "burning")?;
    let upper = if h.has_empty_edge() || h.has_singleton_edge() {
        n
    } else {
        let alpha = max_independent_set_with(h, &cfg.clone().with_max_vertices(n))?.len();
        (alpha + 1).min(n)
    };

    let depth = cfg.burning_max_depth.unwrap_or(n);
    let found = cfg.install(|| solve(&c, cfg.sequential(), depth))?;
    let witness = run_schedule(h, &found.sources)?;
    assert!(witness.is_complete(), "solver produced a non-burning sequence");
    Ok(SolveResult {
        value: found.sources.len(),
        witness,
        nodes_explored: found.nodes,
        bounds: (found.lower, upper),
    })
}

struct Found {
    sources: Vec<usize>,
    nodes: u64,
    lower: usize,
}

fn solve(c: &Compact, sequential: bool, depth: usize) -> Result<Found> {
    let lazy = lazy::solve_compact(c);
    let mut nodes = lazy.nodes;
    let mut lower = lazy.value;
    if c.n >= 2 && c.unignitable == 0 {
        lower += 1;
    }
    if c.components.len() > 1 {
        for (comp, _) in &c.components {
            let part = solve(&c.restrict(*comp), sequential, depth)?;
            nodes += part.nodes;
            lower = lower.max(part.sources.len());
        }
    }

    for k in lower..=c.n {
        SolverConfig::check("burning", "search depth", k, depth)?;
        let (hit, spent) = attempt(c, k, sequential);
        nodes += spent;
        if let Some(sources) = hit {
            return Ok(Found {
                sources,
                nodes,
                lower,
            });
        }
    }
    unreachable!("every hypergraph burns within n rounds")
}

/// Searches for a sequence of exactly `k` sources.
fn attempt(c: &Compact, k: usize, sequential: bool) -> (Option<Vec<usize>>, u64) {
    let mut probe = Dfs::new(c, k);
    let roots = match probe.expand(0, 0) {
        Expand::Done(u) => return (Some(vec![u]), probe.nodes),
        Expand::Dead => return (None, probe.nodes),
        Expand::Branch { cand, .. } => members(cand).collect::<Vec<_>>(),
    };
    let mut nodes = probe.nodes;

    let from_root = |&u: &usize| {
        let mut dfs = Dfs::new(c, k);
        dfs.path.push(u);
        let ok = dfs.run(1 << u, 1);
        (ok.then_some(dfs.path), dfs.nodes)
    };
    for group in roots.chunks(ROOT_GROUP) {
        let results: Vec<_> = if sequential {
            group.iter().map(from_root).collect()
        } else {
            group.par_iter().map(from_root).collect()
        };
        nodes += results.iter().map(|r| r.1).sum::<u64>();
        if let Some(path) = results.into_iter().find_map(|r| r.0) {
            return (Some(path), nodes);
        }
    }
    (None, nodes)
}

enum Expand {
    /// The final source; the sequence is complete.
    Done(usize),
    Dead,
    Branch { next: u64, cand: u64 },
}

struct Dfs<'a> {
    c: &'a Compact,
    k: usize,
    /// Burned set -> most remaining rounds known not to suffice.
    dead: HashMap<u64, usize>,
    path: Vec<usize>,
    nodes: u64,
}

impl<'a> Dfs<'a> {
    fn new(c: &'a Compact, k: usize) -> Self {
        Self {
            c,
            k,
            dead: HashMap::new(),
            path: Vec::with_capacity(k),
            nodes: 0,
        }
    }

    /// `fire` is the burned set after `done` rounds.
    fn expand(&mut self, fire: u64, done: usize) -> Expand {
        self.nodes += 1;
        let c = self.c;
        let left = self.k - done;
        let next = fire | c.step(fire);
        let missing = c.full & !next;

        if left == 1 {
            return match missing.count_ones() {
                0 => Expand::Done((c.full & !fire).trailing_zeros() as usize),
                1 => Expand::Done(missing.trailing_zeros() as usize),
                _ => Expand::Dead,
            };
        }
        if missing == 0 || self.dead.get(&fire).is_some_and(|&d| left <= d) {
            return Expand::Dead;
        }

        // Vertices no edge can ignite must all be sources.
        let stuck = c.unignitable & !fire;
        let stuck_count = stuck.count_ones() as usize;
        if stuck_count > left {
            return Expand::Dead;
        }
        // The remaining sources seed a lazy burning of the rest. When the
        // last source can be ignited, the others already suffice.
        let seeds = c.seeds_needed(c.closure(fire)) + usize::from(stuck == 0);
        if seeds > left {
            return Expand::Dead;
        }

        // A source that propagation reaches this round anyway is wasted
        // before the final round.
        let cand = if stuck_count == left { missing & stuck } else { missing };
        Expand::Branch { next, cand }
    }

    fn run(&mut self, fire: u64, done: usize) -> bool {
        match self.expand(fire, done) {
            Expand::Done(u) => {
                self.path.push(u);
                true
            }
            Expand::Dead => false,
            Expand::Branch { next, cand } => {
                for u in members(cand) {
                    self.path.push(u);
                    if self.run(next | 1 << u, done + 1) {
                        return true;
                    }
                    self.path.pop();
                }
                let left = self.k - done;
                let entry = self.dead.entry(fire).or_insert(0);
                *entry = (*entry).max(left);
                false
            }
        }
    }
}
