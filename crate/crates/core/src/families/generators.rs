use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// Tight `k`-uniform path: every window of `k` consecutive vertices is an edge.
pub fn gen_tight_path(k: usize, n: usize) -> Result<Hypergraph> {
    if k < 2 || n < k {
        return Err(invalid(format!("tight path needs k >= 2 and n >= k (k = {k}, n = {n})")));
    }
    Hypergraph::new(n, (0..=n - k).map(|i| (i..i + k).collect::<Vec<_>>()))
}

/// Loose `k`-uniform path with `m` edges, consecutive edges sharing one vertex.
pub fn gen_loose_path(k: usize, m: usize) -> Result<Hypergraph> {
    if k < 3 || m < 1 {
        return Err(invalid(format!("loose path needs k >= 3 and m >= 1 (k = {k}, m = {m})")));
    }
    gen_loose_path_sizes(&vec![k; m])
}

/// Loose `k`-uniform path given its order, which must be `1 (mod k - 1)`.
pub fn gen_loose_path_order(k: usize, n: usize) -> Result<Hypergraph> {
    if k < 3 || n < k || !(n - 1).is_multiple_of(k - 1) {
        return Err(invalid(format!(
            "no {k}-uniform loose path has {n} vertices"
        )));
    }
    gen_loose_path(k, (n - 1) / (k - 1))
}

/// Loose path with the given edge sizes in order. Consecutive edges share
/// exactly one vertex and no edge may have fewer than two vertices.
pub fn gen_loose_path_sizes(sizes: &[usize]) -> Result<Hypergraph> {
    if sizes.is_empty() || sizes.iter().any(|&s| s < 2) {
        return Err(invalid(format!("loose path edge sizes must be >= 2 (got {sizes:?})")));
    }
    let mut edges = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &s in sizes {
        edges.push((start..start + s).collect::<Vec<_>>());
        start += s - 1;
    }
    Hypergraph::new(start + 1, edges)
}

pub fn gen_single_edge(n: usize) -> Result<Hypergraph> {
    if n < 2 {
        return Err(invalid(format!("single edge needs n >= 2 (n = {n})")));
    }
    Hypergraph::new(n, [(0..n).collect::<Vec<_>>()])
}

/// Pairwise disjoint edges of the given sizes and nothing else.
pub fn gen_disjoint_edges(sizes: &[usize]) -> Result<Hypergraph> {
    if sizes.is_empty() || sizes.iter().any(|&s| s < 2) {
        return Err(invalid(format!("edge sizes must be >= 2 (got {sizes:?})")));
    }
    let mut edges = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &s in sizes {
        edges.push((start..start + s).collect::<Vec<_>>());
        start += s;
    }
    Hypergraph::new(start, edges)
}

/// Triples `{v1, v2, vi}` for `i = 3..=n`.
pub fn gen_star_family(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(invalid(format!("star family needs n >= 3 (n = {n})")));
    }
    Hypergraph::new(n, (2..n).map(|i| vec![0, 1, i]))
}

/// Prefix edges `{u1, u2}, {u1, u2, u3}, ..., {u1, ..., un}`.
pub fn gen_nested_family(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(invalid(format!("nested family needs n >= 3 (n = {n})")));
    }
    Hypergraph::new(n, (2..=n).map(|i| (0..i).collect::<Vec<_>>()))
}

/// Triples `{u1, u2, ui}` for `i = 3..=n` plus the edge `{u3, ..., un}`.
/// Its strong subhypergraph induced by `{u3, ..., un}` and its weak one
/// induced by `{u3, ..., u(n-1)}` both burn slower than the whole.
pub fn gen_strwk_family(n: usize) -> Result<Hypergraph> {
    if n < 5 {
        return Err(invalid(format!("strwk family needs n >= 5 (n = {n})")));
    }
    let mut edges: Vec<Vec<usize>> = (2..n).map(|i| vec![0, 1, i]).collect();
    edges.push((2..n).collect());
    Hypergraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_lists(h: &Hypergraph) -> Vec<Vec<usize>> {
        h.edges().to_vec()
    }

    #[test]
    fn tight_path_windows() {
        let h = gen_tight_path(3, 5).unwrap();
        assert_eq!(edge_lists(&h), vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]);
        assert_eq!(gen_tight_path(4, 10).unwrap().edge_count(), 7);
        assert!(gen_tight_path(1, 3).is_err());
        assert!(gen_tight_path(3, 2).is_err());
    }

    #[test]
    fn loose_path_shape() {
        let h = gen_loose_path(3, 2).unwrap();
        assert_eq!(edge_lists(&h), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        let h = gen_loose_path(6, 3).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (16, 3));
        assert!(h.is_linear());
        assert!(gen_loose_path(2, 3).is_err());
        assert!(gen_loose_path_order(4, 8).is_err());
        assert_eq!(gen_loose_path_order(4, 7).unwrap().edge_count(), 2);
        assert!(gen_loose_path_sizes(&[3, 1]).is_err());
        assert_eq!(gen_loose_path_sizes(&[2, 4, 3]).unwrap().vertex_count(), 7);
    }

    #[test]
    fn small_families() {
        assert_eq!(gen_single_edge(8).unwrap().edges()[0].len(), 8);
        let h = gen_disjoint_edges(&[3, 2]).unwrap();
        assert_eq!(edge_lists(&h), vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(gen_star_family(6).unwrap().edge_count(), 4);
        assert_eq!(gen_nested_family(5).unwrap().edge_count(), 4);
        let h = gen_strwk_family(6).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert!(h.edges().contains(&vec![2, 3, 4, 5]));
    }
}
