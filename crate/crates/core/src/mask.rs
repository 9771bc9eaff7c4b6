//! Word-sized vertex masks used by the exact solvers.
//!
//! Every solver works on hypergraphs of at most 64 vertices, so a vertex set
//! fits in one `u64` and propagation is a scan over edge masks.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub(crate) const MAX_MASK_VERTICES: usize = 64;

pub(crate) fn members(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Propagation view of a hypergraph: only the distinct non-singleton edges,
/// since empty and singleton edges never ignite anything.
#[derive(Debug, Clone)]
pub(crate) struct Compact {
    pub n: usize,
    pub full: u64,
    pub edges: Vec<u64>,
    /// Vertices that lie in no non-singleton edge. Propagation can never
    /// reach them, so every burning process must ignite them directly.
    pub unignitable: u64,
    /// Connected components of the propagation view, with the edge indices
    /// belonging to each.
    pub components: Vec<(u64, Vec<usize>)>,
}

impl Compact {
    pub fn new(h: &Hypergraph, solver: &'static str) -> Result<Self> {
        let n = h.vertex_count();
        if n > MAX_MASK_VERTICES {
            return Err(Error::GuardExceeded {
                solver,
                what: "vertex count",
                actual: n,
                limit: MAX_MASK_VERTICES,
            });
        }
        let edges = h
            .edges()
            .iter()
            .filter(|e| e.len() >= 2)
            .map(|e| e.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect();
        Ok(Self::from_edges(n, edges))
    }

    fn from_edges(n: usize, mut edges: Vec<u64>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let full = full_mask(n);
        let covered = edges.iter().fold(0u64, |m, &e| m | e);

        let mut components: Vec<(u64, Vec<usize>)> = Vec::new();
        let mut seen = 0u64;
        for v in 0..n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            loop {
                let grown = edges
                    .iter()
                    .filter(|&&e| e & comp != 0)
                    .fold(comp, |m, &e| m | e);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            let owned = (0..edges.len()).filter(|&i| edges[i] & comp != 0).collect();
            components.push((comp, owned));
        }

        Self {
            n,
            full,
            edges,
            unignitable: full & !covered,
            components,
        }
    }

    /// The part of the view living on `keep`, renumbered in vertex order.
    /// Only meaningful when `keep` is a union of components.
    pub fn restrict(&self, keep: u64) -> Compact {
        let old: Vec<usize> = members(keep).collect();
        let remap = |e: u64| {
            old.iter()
                .enumerate()
                .filter(|&(_, &v)| e >> v & 1 == 1)
                .fold(0u64, |m, (i, _)| m | (1 << i))
        };
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e & !keep == 0)
            .map(|&e| remap(e))
            .collect();
        Self::from_edges(old.len(), edges)
    }

    /// Vertices outside `burned` that ignite from `burned` in one step.
    #[inline]
    pub fn step(&self, burned: u64) -> u64 {
        let mut out = 0u64;
        for &e in &self.edges {
            let missing = e & !burned;
            if missing.is_power_of_two() {
                out |= missing;
            }
        }
        out
    }

    pub fn closure(&self, mut burned: u64) -> u64 {
        loop {
            let next = self.step(burned);
            if next == 0 {
                return burned;
            }
            burned |= next;
        }
    }

    /// Lower bound on the number of extra seeds needed to lazily burn
    /// everything once `closed` (a closed set) is burned.
    ///
    /// Per component: every unburned vertex must be seeded or ignited, and
    /// each edge not yet inside `closed` ignites at most one vertex. A
    /// component with nothing burned needs at least one seed.
    pub fn seeds_needed(&self, closed: u64) -> usize {
        let mut total = 0usize;
        for (comp, owned) in &self.components {
            let open = comp & !closed;
            if open == 0 {
                continue;
            }
            let live = owned
                .iter()
                .filter(|&&i| self.edges[i] & !closed != 0)
                .count();
            let bound = (open.count_ones() as usize).saturating_sub(live);
            let untouched = usize::from(comp & closed == 0);
            total += bound.max(untouched);
        }
        total
    }
}
