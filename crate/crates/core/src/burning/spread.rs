use std::collections::HashSet;

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::mask::{members, Compact};

pub fn max_spread(h: &Hypergraph, rounds: usize) -> Result<usize> {
    max_spread_with(h, rounds, &SolverConfig::default())
}

/// Largest number of vertices that can be burned at the end of round
/// `rounds`, maximised over all valid source sequences.
///
/// Exhaustive: explores every reachable fire set layer by layer. A fully
/// burned set stays fully burned, so the value never decreases in `rounds`.
pub fn max_spread_with(h: &Hypergraph, rounds: usize, cfg: &SolverConfig) -> Result<usize> {
    if rounds == 0 {
        return Err(Error::InvalidParameter("round count must be at least 1".into()));
    }
    SolverConfig::check("max_spread", "vertex count", h.vertex_count(), cfg.spread_max_vertices)?;
    SolverConfig::check("max_spread", "round count", rounds, cfg.spread_max_rounds)?;
    let c = Compact::new(h, "max_spread")?;

    let mut layer: HashSet<u64> = HashSet::from([0u64]);
    for _ in 0..rounds {
        let mut next = HashSet::with_capacity(layer.len() * 2);
        for &fire in &layer {
            if fire == c.full {
                next.insert(fire);
                continue;
            }
            let spread = fire | c.step(fire);
            for u in members(c.full & !fire) {
                next.insert(spread | (1 << u));
            }
        }
        layer = next;
    }
    Ok(layer
        .iter()
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_round_burns_one() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2, 3]]).unwrap();
        assert_eq!(max_spread(&h, 1).unwrap(), 1);
    }

    #[test]
    fn triple_burns_out_by_round_three() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(max_spread(&h, 2).unwrap(), 2);
        assert_eq!(max_spread(&h, 3).unwrap(), 3);
        assert_eq!(max_spread(&h, 5).unwrap(), 3);
    }

    #[test]
    fn guards_are_enforced() {
        let h = Hypergraph::new(13, Vec::<Vec<usize>>::new()).unwrap();
        assert!(matches!(
            max_spread(&h, 2),
            Err(Error::GuardExceeded { what: "vertex count", .. })
        ));
        let h = Hypergraph::new(3, Vec::<Vec<usize>>::new()).unwrap();
        assert!(matches!(
            max_spread(&h, 7),
            Err(Error::GuardExceeded { what: "round count", .. })
        ));
        assert!(matches!(max_spread(&h, 0), Err(Error::InvalidParameter(_))));
    }
}
