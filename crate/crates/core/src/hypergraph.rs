use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite hypergraph on the dense vertex indices `0..n`.
///
/// Edges form a multiset: parallel, singleton and empty edges are all
/// representable. Each edge is stored with its members ascending and the edge
/// list is kept sorted, so parallel edges sit next to each other.
///
/// Every vertex carries a string label. Labels are presentation only; two
/// hypergraphs are equal when they have the same labels and the same multiset
/// of labelled edges, whatever index each label was assigned.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    labels: Vec<String>,
    edges: Vec<Vec<usize>>,
}

pub(crate) fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'-'))
}

/// Natural ordering on labels: digit runs compare by numeric value, so
/// `v2 < v10`. Ties between spellings of the same number (`v01`, `v1`) fall
/// back to byte order, which keeps the order total.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> impl Iterator<Item = &str> {
        let bytes = s.as_bytes();
        let mut start = 0;
        std::iter::from_fn(move || {
            if start >= bytes.len() {
                return None;
            }
            let digit = bytes[start].is_ascii_digit();
            let mut end = start + 1;
            while end < bytes.len() && bytes[end].is_ascii_digit() == digit {
                end += 1;
            }
            let chunk = &s[start..end];
            start = end;
            Some(chunk)
        })
    }
    let mut ca = chunks(a);
    let mut cb = chunks(b);
    loop {
        match (ca.next(), cb.next()) {
            (None, None) => return a.cmp(b),
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => {
                let xd = x.as_bytes()[0].is_ascii_digit();
                let yd = y.as_bytes()[0].is_ascii_digit();
                let ord = if xd && yd {
                    let xs = x.trim_start_matches('0');
                    let ys = y.trim_start_matches('0');
                    xs.len().cmp(&ys.len()).then_with(|| xs.cmp(ys))
                } else {
                    x.cmp(y)
                };
                if ord != Ordering::Equal {
                    return ord;
                }
            }
        }
    }
}

impl Hypergraph {
    /// Hypergraph on `n` vertices labelled `v1..vn`.
    pub fn new<E, I>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        Self::with_labels((1..=n).map(|i| format!("v{i}")).collect(), edges)
    }

    /// Hypergraph whose vertex `i` is labelled `labels[i]`.
    pub fn with_labels<E, I>(labels: Vec<String>, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        if labels.is_empty() {
            return Err(Error::NoVertices);
        }
        let mut seen = HashMap::with_capacity(labels.len());
        for label in &labels {
            if !is_valid_label(label) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if seen.insert(label.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let n = labels.len();
        let mut stored = Vec::new();
        for (i, edge) in edges.into_iter().enumerate() {
            let mut members: Vec<usize> = edge.into_iter().collect();
            members.sort_unstable();
            for w in members.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedMember {
                        edge: i,
                        vertex: w[0],
                    });
                }
            }
            if let Some(&v) = members.last() {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count: n,
                    });
                }
            }
            stored.push(members);
        }
        stored.sort();
        Ok(Self {
            labels,
            edges: stored,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order, members ascending.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves a list of labels to vertex indices.
    pub fn resolve_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                let l = l.as_ref();
                self.vertex_by_label(l)
                    .ok_or_else(|| Error::UnknownLabel(l.to_string()))
            })
            .collect()
    }

    pub fn format_vertices<I: IntoIterator<Item = usize>>(&self, vertices: I) -> String {
        vertices
            .into_iter()
            .map(|v| self.label(v))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn no_vertices(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.degree(v) == 0
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        let mut out = self.all_vertices();
        for e in &self.edges {
            for &v in e {
                out.remove(v);
            }
        }
        out
    }

    /// Vertices that lie in no edge of size at least two. Propagation never
    /// reaches these, so they behave like isolated vertices in both games.
    pub fn unignitable_vertices(&self) -> VertexSet {
        let mut out = self.all_vertices();
        for e in self.edges.iter().filter(|e| e.len() >= 2) {
            for &v in e {
                out.remove(v);
            }
        }
        out
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(|e| e.is_empty())
    }

    pub fn has_singleton_edge(&self) -> bool {
        self.edges.iter().any(|e| e.len() == 1)
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.edges.windows(2).any(|w| w[0] == w[1])
    }

    /// No parallel edges and no edge with fewer than two members.
    pub fn is_simple(&self) -> bool {
        !self.has_parallel_edges() && self.edges.iter().all(|e| e.len() >= 2)
    }

    /// Any two distinct edges share at most one vertex. Parallel copies of an
    /// edge with two or more members count as distinct edges.
    pub fn is_linear(&self) -> bool {
        for (i, a) in self.edges.iter().enumerate() {
            for b in &self.edges[i + 1..] {
                let shared = a.iter().filter(|v| b.binary_search(v).is_ok()).count();
                if shared > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Common edge size, if every edge has the same size.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// Number of edges that are not empty, not singletons, and not duplicates
    /// of an earlier parallel edge.
    pub fn effective_edge_count(&self) -> usize {
        let mut count = 0;
        for (i, e) in self.edges.iter().enumerate() {
            if e.len() >= 2 && (i == 0 || self.edges[i - 1] != *e) {
                count += 1;
            }
        }
        count
    }

    pub fn edge_set(&self, i: usize) -> VertexSet {
        VertexSet::from_members(self.vertex_count(), self.edges[i].iter().copied())
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn component_partition(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for e in &self.edges {
            for w in e.windows(2) {
                let a = find(&mut parent, w[0]);
                let b = find(&mut parent, w[1]);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut by_root: Vec<Option<usize>> = vec![None; n];
        let mut parts: Vec<VertexSet> = Vec::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            let slot = match by_root[r] {
                Some(s) => s,
                None => {
                    parts.push(VertexSet::empty(n));
                    by_root[r] = Some(parts.len() - 1);
                    parts.len() - 1
                }
            };
            parts[slot].insert(v);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.component_partition().len() == 1
    }

    /// The components as strong subhypergraphs induced by their vertex sets.
    ///
    /// An empty edge is a subset of every vertex set; it is kept once, in the
    /// first component, so the components together carry exactly the edges of
    /// `self`.
    pub fn connected_components(&self) -> Vec<Hypergraph> {
        let parts = self.component_partition();
        parts
            .iter()
            .enumerate()
            .map(|(i, part)| {
                let edges = self
                    .edges
                    .iter()
                    .filter(|e| {
                        if e.is_empty() {
                            i == 0
                        } else {
                            part.contains(e[0])
                        }
                    })
                    .cloned();
                self.restrict(part, edges)
            })
            .collect()
    }

    /// The 2-section: the simple graph joining every pair of vertices that
    /// share an edge.
    pub fn two_section(&self) -> Hypergraph {
        let mut pairs: Vec<[usize; 2]> = Vec::new();
        for e in &self.edges {
            for (i, &a) in e.iter().enumerate() {
                for &b in &e[i + 1..] {
                    pairs.push([a, b]);
                }
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        Hypergraph {
            labels: self.labels.clone(),
            edges: pairs.into_iter().map(|p| p.to_vec()).collect(),
        }
    }

    fn check_universe(&self, w: &VertexSet) -> Result<()> {
        if w.universe() != self.vertex_count() {
            return Err(Error::UniverseMismatch {
                expected: self.vertex_count(),
                found: w.universe(),
            });
        }
        if w.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        Ok(())
    }

    /// Reindexes `w` to `0..|w|` (order preserving) and keeps `edges`, which
    /// must already lie inside `w`.
    fn restrict<I: IntoIterator<Item = Vec<usize>>>(&self, w: &VertexSet, edges: I) -> Hypergraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        let mut labels = Vec::with_capacity(w.len());
        for (new, old) in w.iter().enumerate() {
            index[old] = new;
            labels.push(self.labels[old].clone());
        }
        let mut edges: Vec<Vec<usize>> = edges
            .into_iter()
            .map(|e| e.into_iter().map(|v| index[v]).collect())
            .collect();
        edges.sort();
        Hypergraph { labels, edges }
    }

    /// Weak subhypergraph induced by `w`: every nonempty trace `e ∩ w`, one
    /// per original edge, singletons included.
    pub fn weak_induced_sub(&self, w: &VertexSet) -> Result<Hypergraph> {
        self.check_universe(w)?;
        let traces = self
            .edges
            .iter()
            .map(|e| e.iter().copied().filter(|&v| w.contains(v)).collect::<Vec<_>>())
            .filter(|t| !t.is_empty());
        Ok(self.restrict(w, traces))
    }

    /// Strong subhypergraph `(w, {edges[i] : i ∈ selected})`. Edge indices
    /// refer to the canonical order of [`Hypergraph::edges`].
    pub fn strong_sub(&self, w: &VertexSet, selected: &[usize]) -> Result<Hypergraph> {
        self.check_universe(w)?;
        let mut picked = Vec::with_capacity(selected.len());
        for &i in selected {
            let e = self.edges.get(i).ok_or(Error::EdgeOutOfRange {
                edge: i,
                edge_count: self.edge_count(),
            })?;
            if !w.contains_all(e) {
                return Err(Error::EdgeNotContained { edge: i });
            }
            picked.push(e.clone());
        }
        Ok(self.restrict(w, picked))
    }

    /// Strong subhypergraph induced by `w`, usually written `H[w]`: every edge
    /// contained in `w`.
    pub fn strong_induced_sub(&self, w: &VertexSet) -> Result<Hypergraph> {
        self.check_universe(w)?;
        let inside = self.edges.iter().filter(|e| w.contains_all(*e)).cloned();
        Ok(self.restrict(w, inside))
    }

    pub fn profile(&self) -> StructuralProfile {
        StructuralProfile {
            is_simple: self.is_simple(),
            is_linear: self.is_linear(),
            uniform_k: self.uniformity(),
            isolated_vertices: self.isolated_vertices(),
            effective_edge_count: self.effective_edge_count(),
            component_partition: self.component_partition(),
        }
    }

    /// Labelled view used for equality and serialization: sorted labels, and
    /// edges as label lists in canonical order.
    pub(crate) fn canonical_view(&self) -> (Vec<&str>, Vec<Vec<&str>>) {
        let mut order: Vec<usize> = (0..self.vertex_count()).collect();
        order.sort_by(|&a, &b| label_cmp(&self.labels[a], &self.labels[b]));
        let mut rank = vec![0usize; order.len()];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let mut edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .map(|e| {
                let mut ranks: Vec<usize> = e.iter().map(|&v| rank[v]).collect();
                ranks.sort_unstable();
                ranks
            })
            .collect();
        edges.sort();
        let labels: Vec<&str> = order.iter().map(|&v| self.labels[v].as_str()).collect();
        let edges = edges
            .into_iter()
            .map(|e| e.into_iter().map(|r| labels[r]).collect())
            .collect();
        (labels, edges)
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.canonical_view() == other.canonical_view()
    }
}

impl Eq for Hypergraph {}

/// Summary of the structural predicates of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralProfile {
    pub is_simple: bool,
    pub is_linear: bool,
    pub uniform_k: Option<usize>,
    pub isolated_vertices: VertexSet,
    pub effective_edge_count: usize,
    pub component_partition: Vec<VertexSet>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig_triangle() -> Hypergraph {
        // x y z w, one edge {x, z, w}; y isolated
        Hypergraph::with_labels(
            ["x", "y", "z", "w"].map(String::from).to_vec(),
            vec![vec![0, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn natural_label_order() {
        assert_eq!(label_cmp("v2", "v10"), Ordering::Less);
        assert_eq!(label_cmp("a", "b"), Ordering::Less);
        assert_eq!(label_cmp("10", "9"), Ordering::Greater);
        assert_eq!(label_cmp("v01", "v1"), Ordering::Less);
        assert_eq!(label_cmp("v", "v1"), Ordering::Less);
    }

    #[test]
    fn rejects_bad_construction() {
        assert_eq!(
            Hypergraph::new(0, Vec::<Vec<usize>>::new()),
            Err(Error::NoVertices)
        );
        assert!(matches!(
            Hypergraph::new(2, vec![vec![0, 0]]),
            Err(Error::RepeatedMember { .. })
        ));
        assert!(matches!(
            Hypergraph::new(2, vec![vec![0, 2]]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
        assert!(matches!(
            Hypergraph::with_labels(vec!["a".into(), "a".into()], Vec::<Vec<usize>>::new()),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn effective_edges_drop_degenerate_and_parallel() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1], vec![2], vec![]]).unwrap();
        assert_eq!(h.effective_edge_count(), 1);
        assert_eq!(fig_triangle().effective_edge_count(), 1);
        assert!(!h.is_simple());
    }

    #[test]
    fn components_and_isolated() {
        let h = fig_triangle();
        let parts = h.component_partition();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].to_vec(), vec![0, 2, 3]);
        assert_eq!(parts[1].to_vec(), vec![1]);
        assert_eq!(h.isolated_vertices().to_vec(), vec![1]);
        let comps = h.connected_components();
        assert_eq!(comps[0].edge_count(), 1);
        assert_eq!(comps[1].edge_count(), 0);
        assert_eq!(comps[1].labels(), &["y".to_string()]);
    }

    #[test]
    fn empty_edge_kept_once_in_components() {
        let h = Hypergraph::new(3, vec![vec![], vec![0, 1]]).unwrap();
        let comps = h.connected_components();
        let total: usize = comps.iter().map(Hypergraph::edge_count).sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn two_section_of_triple_is_triangle() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let g = h.two_section();
        assert_eq!(g.edges(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(g.two_section(), g);
    }

    #[test]
    fn linear_and_uniform() {
        let loose = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert!(loose.is_linear());
        assert_eq!(loose.uniformity(), Some(3));
        let tight = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert!(!tight.is_linear());
        let mixed = Hypergraph::new(3, vec![vec![0, 1, 2], vec![1, 2]]).unwrap();
        assert_eq!(mixed.uniformity(), None);
    }

    #[test]
    fn equality_ignores_index_assignment() {
        let a = fig_triangle();
        let b = Hypergraph::with_labels(
            ["w", "x", "y", "z"].map(String::from).to_vec(),
            vec![vec![0, 1, 3]],
        )
        .unwrap();
        assert_eq!(a, b);
        let c = Hypergraph::with_labels(
            ["w", "x", "y", "z"].map(String::from).to_vec(),
            vec![vec![0, 1, 2]],
        )
        .unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn strong_sub_checks_containment() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2, 3]]).unwrap();
        let w = VertexSet::from_members(4, [1, 2, 3]);
        assert_eq!(h.strong_sub(&w, &[0]), Err(Error::EdgeNotContained { edge: 0 }));
        let g = h.strong_sub(&w, &[1]).unwrap();
        assert_eq!(g.edges(), &[vec![0, 1, 2]]);
        assert_eq!(
            h.strong_induced_sub(&VertexSet::empty(4)),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn weak_induced_keeps_singletons() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2, 3]]).unwrap();
        let w = VertexSet::from_members(4, [1, 2]);
        let g = h.weak_induced_sub(&w).unwrap();
        assert_eq!(g.edges(), &[vec![0], vec![0, 1]]);
    }
}
