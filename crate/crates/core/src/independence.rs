//! Maximum independent sets: vertex sets that contain no edge entirely.

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::mask::MAX_MASK_VERTICES;
use crate::vertex_set::VertexSet;

pub fn max_independent_set(h: &Hypergraph) -> Result<VertexSet> {
    max_independent_set_with(h, &SolverConfig::default())
}

/// Exact maximum independent set by branch and bound.
///
/// Vertices are decided in index order with the include branch first, and the
/// incumbent only changes on a strict improvement, so the result is the
/// lexicographically smallest maximum independent set.
pub fn max_independent_set_with(h: &Hypergraph, cfg: &SolverConfig) -> Result<VertexSet> {
    if h.has_empty_edge() {
        return Err(Error::IndependenceUndefined);
    }
    let n = h.vertex_count();
    SolverConfig::check(
        "independence",
        "vertex count",
        n,
        cfg.independence_max_vertices.min(MAX_MASK_VERTICES),
    )?;

    // For each vertex, the other members of every edge containing it: adding
    // `v` is blocked when one of these is already fully chosen.
    let mut rest_of: Vec<Vec<u64>> = vec![Vec::new(); n];
    for e in h.edges() {
        let m = e.iter().fold(0u64, |m, &v| m | (1 << v));
        for &v in e {
            rest_of[v].push(m & !(1 << v));
        }
    }
    for lists in &mut rest_of {
        lists.sort_unstable();
        lists.dedup();
    }

    let mut search = Search {
        n,
        rest_of: &rest_of,
        best: 0,
        best_size: -1,
    };
    search.branch(0, 0, 0);
    Ok(VertexSet::from_mask(n, search.best))
}

struct Search<'a> {
    n: usize,
    rest_of: &'a [Vec<u64>],
    best: u64,
    best_size: i32,
}

impl Search<'_> {
    fn can_add(&self, chosen: u64, v: usize) -> bool {
        self.rest_of[v].iter().all(|&rest| rest & !chosen != 0)
    }

    // Leaves are reached in decreasing order of their indicator bits read
    // from vertex 0, so the first maximum found is the lexicographically
    // smallest one; only strict improvements are worth exploring after it.
    fn branch(&mut self, v: usize, chosen: u64, size: i32) {
        if size + (self.n - v) as i32 <= self.best_size {
            return;
        }
        if v == self.n {
            self.best = chosen;
            self.best_size = size;
            return;
        }
        if self.can_add(chosen, v) {
            self.branch(v + 1, chosen | (1 << v), size + 1);
        }
        self.branch(v + 1, chosen, size);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_on_eight() {
        let h = Hypergraph::new(8, vec![(0..8).collect::<Vec<_>>()]).unwrap();
        let s = max_independent_set(&h).unwrap();
        assert_eq!(s.to_vec(), (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn isolated_vertices_always_join() {
        let h = Hypergraph::new(4, vec![vec![0, 2, 3]]).unwrap();
        assert_eq!(max_independent_set(&h).unwrap().to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn singleton_edges_exclude_their_vertex() {
        let h = Hypergraph::new(3, vec![vec![0], vec![1, 2]]).unwrap();
        assert_eq!(max_independent_set(&h).unwrap().to_vec(), vec![1]);
    }

    #[test]
    fn empty_edge_is_undefined() {
        let h = Hypergraph::new(2, vec![vec![]]).unwrap();
        assert_eq!(max_independent_set(&h), Err(Error::IndependenceUndefined));
    }

    #[test]
    fn lexicographically_smallest_among_maxima() {
        // path 0-1-2-3: maxima {0,2}, {0,3}, {1,3}
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(max_independent_set(&h).unwrap().to_vec(), vec![0, 2]);
        // greedy takes vertex 0 first; the maximum avoids it
        let h = Hypergraph::new(5, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        assert_eq!(max_independent_set(&h).unwrap().to_vec(), vec![1, 2, 3, 4]);
    }
}
