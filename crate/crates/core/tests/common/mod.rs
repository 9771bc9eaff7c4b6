//! Brute-force oracles and random instance generators shared by the
//! integration tests. The oracles only use the public simulation API.

#![allow(dead_code)]

use hyperburn::{lazy_closure, propagate_step, Hypergraph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Smallest `k` such that some valid sequence of `k` sources burns `h`,
/// found by enumerating every valid sequence of each length in turn.
pub fn brute_burning_number(h: &Hypergraph) -> usize {
    fn extend(h: &Hypergraph, burned: &VertexSet, left: usize) -> bool {
        if left == 0 {
            return burned.is_full();
        }
        let spread = propagate_step(h, burned);
        for u in burned.complement().iter() {
            let mut next = burned.union(&spread);
            next.insert(u);
            if extend(h, &next, left - 1) {
                return true;
            }
        }
        false
    }
    let n = h.vertex_count();
    (1..=n)
        .find(|&k| extend(h, &h.no_vertices(), k))
        .expect("n sources always suffice")
}

/// Smallest seed set whose closure is everything, by enumerating subsets in
/// order of size.
pub fn brute_lazy_burning_number(h: &Hypergraph) -> usize {
    let n = h.vertex_count();
    assert!(n <= 20);
    let mut by_size: Vec<u32> = (0..1u32 << n).collect();
    by_size.sort_by_key(|m| m.count_ones());
    for m in by_size {
        let seeds = VertexSet::from_members(n, (0..n).filter(|v| m >> v & 1 == 1));
        if lazy_closure(h, &seeds).closure.is_full() {
            return m.count_ones() as usize;
        }
    }
    unreachable!("the full vertex set burns")
}

/// Largest vertex set containing no whole edge, by enumeration.
pub fn brute_alpha(h: &Hypergraph) -> usize {
    let n = h.vertex_count();
    (0..1u32 << n)
        .filter(|m| {
            h.edges()
                .iter()
                .all(|e| !e.iter().all(|&v| m >> v & 1 == 1))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn random_edge(rng: &mut ChaCha8Rng, n: usize, min: usize, max: usize) -> Vec<usize> {
    let size = rng.random_range(min..=max.min(n));
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(size);
    all
}

/// Any hypergraph at all: empty, singleton and parallel edges and isolated
/// vertices are all possible.
pub fn random_any(rng: &mut ChaCha8Rng, max_n: usize) -> Hypergraph {
    let n = rng.random_range(1..=max_n);
    let m = rng.random_range(0..=n + 2);
    let edges: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            let roll: f64 = rng.random();
            if roll < 0.05 {
                Vec::new()
            } else if roll < 0.15 {
                vec![rng.random_range(0..n)]
            } else {
                random_edge(rng, n, 2.min(n), 4)
            }
        })
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

/// A simple connected hypergraph on `n` vertices with every edge of size at
/// least two: a random spanning structure plus extra random edges.
pub fn random_simple_connected(rng: &mut ChaCha8Rng, n: usize) -> Hypergraph {
    assert!(n >= 2);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut reached = 1;
    while reached < n {
        let grow = rng.random_range(1..=(n - reached).min(3));
        let anchor = order[rng.random_range(0..reached)];
        let mut e = vec![anchor];
        e.extend_from_slice(&order[reached..reached + grow]);
        reached += grow;
        edges.push(e);
    }
    for _ in 0..rng.random_range(0..=n / 2) {
        edges.push(random_edge(rng, n, 2, 4));
    }
    for e in &mut edges {
        e.sort_unstable();
    }
    edges.sort();
    edges.dedup();
    Hypergraph::new(n, edges).unwrap()
}

/// Disjoint union of the given hypergraphs, vertices renumbered in order.
pub fn disjoint_union(parts: &[Hypergraph]) -> Hypergraph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        for e in g.edges() {
            edges.push(e.iter().map(|v| v + offset).collect::<Vec<_>>());
        }
        offset += g.vertex_count();
    }
    Hypergraph::new(offset, edges).unwrap()
}
