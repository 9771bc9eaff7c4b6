//! Mechanical checks of the standard inequalities between `n − 𝓔`, `b_L`,
//! `b` and `α`, of how the burning numbers compose over components, and of
//! how they behave on induced subhypergraphs.
//!
//! Every report carries the numbers its verdicts were computed from, and can
//! be rendered as `key=value` lines or as JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::burning::burning_number_exact_with;
use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::independence::max_independent_set_with;
use crate::lazy::{is_lazy_burning_set, lazy_burning_number_exact_with};
use crate::vertex_set::VertexSet;

/// Result of checking one inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    /// The inequality holds; `tight` when it holds with equality (for a
    /// strict inequality, when the gap is exactly one).
    Holds { tight: bool },
    Fails,
    /// The hypotheses under which the inequality is known are not met.
    Gated { reason: String },
}

impl Outcome {
    fn le(lhs: i64, rhs: i64) -> Self {
        if lhs <= rhs {
            Outcome::Holds { tight: lhs == rhs }
        } else {
            Outcome::Fails
        }
    }

    fn lt(lhs: i64, rhs: i64) -> Self {
        if lhs < rhs {
            Outcome::Holds {
                tight: lhs + 1 == rhs,
            }
        } else {
            Outcome::Fails
        }
    }

    fn gated(reason: &str) -> Self {
        Outcome::Gated {
            reason: reason.to_string(),
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds { .. })
    }

    pub fn is_tight(&self) -> bool {
        matches!(self, Outcome::Holds { tight: true })
    }

    pub fn fails(&self) -> bool {
        matches!(self, Outcome::Fails)
    }

    pub fn is_gated(&self) -> bool {
        matches!(self, Outcome::Gated { .. })
    }

    fn text(&self) -> String {
        match self {
            Outcome::Holds { tight: true } => "holds,tight".into(),
            Outcome::Holds { tight: false } => "holds".into(),
            Outcome::Fails => "fails".into(),
            Outcome::Gated { reason } => format!("gated,{reason}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub statement: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl Check {
    fn new(name: &'static str, statement: String, outcome: Outcome) -> Self {
        Self {
            name,
            statement,
            outcome,
        }
    }
}

fn checks_text(out: &mut String, checks: &[Check]) {
    for c in checks {
        let _ = writeln!(out, "check.{}={}", c.name, c.outcome.text());
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub effective_edges: usize,
    /// `None` when an empty edge makes independence meaningless.
    pub alpha: Option<usize>,
    pub b_lazy: usize,
    pub b: usize,
    pub has_isolated: bool,
    /// Some vertex lies in no edge of size two or more.
    pub has_unignitable: bool,
    pub has_singleton_or_empty: bool,
    pub simple: bool,
    pub connected: bool,
    pub checks: Vec<Check>,
}

impl BoundsReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n={}", self.n);
        let _ = writeln!(s, "effective_edges={}", self.effective_edges);
        let _ = writeln!(s, "alpha={}", opt(self.alpha));
        let _ = writeln!(s, "b_lazy={}", self.b_lazy);
        let _ = writeln!(s, "b={}", self.b);
        let _ = writeln!(s, "has_isolated={}", self.has_isolated);
        let _ = writeln!(s, "has_unignitable={}", self.has_unignitable);
        let _ = writeln!(s, "has_singleton_or_empty={}", self.has_singleton_or_empty);
        let _ = writeln!(s, "simple={}", self.simple);
        let _ = writeln!(s, "connected={}", self.connected);
        checks_text(&mut s, &self.checks);
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn bounds_report(h: &Hypergraph) -> Result<BoundsReport> {
    bounds_report_with(h, &SolverConfig::default())
}

/// Solves `b`, `b_L` and `α` exactly and checks
///
/// * `VminusE_le_bL`: `n − 𝓔 ≤ b_L`;
/// * `bL_le_b`: `b_L ≤ b`;
/// * `bL_lt_b`: `b_L < b`, when `n ≥ 2` and every vertex lies in an edge of
///   size at least two;
/// * `bL_le_alpha` and `b_le_alpha_plus_1`: `b_L ≤ α` and `b ≤ α + 1`, when
///   there are no singleton or empty edges;
/// * `chain`: `n − 𝓔 ≤ b_L < b ≤ α + 1`, for simple hypergraphs without
///   isolated vertices.
///
/// The α bounds are gated because a vertex carrying a singleton edge can be
/// in no independent set while propagation ignores that edge: with
/// `E = {{a}, {b}}`, `α = 0` but `b_L = 2`.
pub fn bounds_report_with(h: &Hypergraph, cfg: &SolverConfig) -> Result<BoundsReport> {
    let n = h.vertex_count();
    let b = burning_number_exact_with(h, cfg)?.value;
    let b_lazy = lazy_burning_number_exact_with(h, cfg)?.value;
    let alpha = if h.has_empty_edge() {
        None
    } else {
        Some(max_independent_set_with(h, cfg)?.len())
    };
    let effective_edges = h.effective_edge_count();
    let has_isolated = !h.isolated_vertices().is_empty();
    let has_unignitable = !h.unignitable_vertices().is_empty();
    let has_singleton_or_empty = h.has_empty_edge() || h.has_singleton_edge();
    let simple = h.is_simple();

    let n_minus_e = n as i64 - effective_edges as i64;
    let (bl, bi) = (b_lazy as i64, b as i64);
    let alpha_i = alpha.map(|a| a as i64);

    let mut checks = vec![
        Check::new(
            "VminusE_le_bL",
            format!("{n_minus_e} <= {bl}"),
            Outcome::le(n_minus_e, bl),
        ),
        Check::new("bL_le_b", format!("{bl} <= {bi}"), Outcome::le(bl, bi)),
    ];

    let strict = if n < 2 {
        Outcome::gated("fewer than two vertices")
    } else if has_unignitable {
        Outcome::gated("some vertex lies in no edge of size two or more")
    } else {
        Outcome::lt(bl, bi)
    };
    checks.push(Check::new("bL_lt_b", format!("{bl} < {bi}"), strict));

    let alpha_gate = if has_singleton_or_empty {
        Some("singleton or empty edge present")
    } else {
        None
    };
    let alpha_str = opt(alpha);
    let (le_alpha, le_alpha1) = match (alpha_gate, alpha_i) {
        (None, Some(a)) => (Outcome::le(bl, a), Outcome::le(bi, a + 1)),
        (gate, _) => {
            let reason = gate.unwrap_or("independence undefined");
            (Outcome::gated(reason), Outcome::gated(reason))
        }
    };
    checks.push(Check::new(
        "bL_le_alpha",
        format!("{bl} <= {alpha_str}"),
        le_alpha,
    ));
    checks.push(Check::new(
        "b_le_alpha_plus_1",
        format!("{bi} <= {alpha_str}+1"),
        le_alpha1,
    ));

    let chain = if !simple {
        Outcome::gated("not simple")
    } else if has_isolated {
        Outcome::gated("isolated vertex present")
    } else {
        let parts = [
            Outcome::le(n_minus_e, bl),
            Outcome::lt(bl, bi),
            Outcome::le(bi, alpha_i.expect("simple hypergraphs have no empty edge") + 1),
        ];
        if parts.iter().all(Outcome::holds) {
            Outcome::Holds {
                tight: parts.iter().all(Outcome::is_tight),
            }
        } else {
            Outcome::Fails
        }
    };
    checks.push(Check::new(
        "chain",
        format!("{n_minus_e} <= {bl} < {bi} <= {alpha_str}+1"),
        chain,
    ));

    Ok(BoundsReport {
        n,
        effective_edges,
        alpha,
        b_lazy,
        b,
        has_isolated,
        has_unignitable,
        has_singleton_or_empty,
        simple,
        connected: h.is_connected(),
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentValues {
    pub vertices: Vec<String>,
    pub b: usize,
    pub b_lazy: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionReport {
    pub b: usize,
    pub b_lazy: usize,
    pub components: Vec<ComponentValues>,
    pub checks: Vec<Check>,
}

impl CompositionReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "b={}", self.b);
        let _ = writeln!(s, "b_lazy={}", self.b_lazy);
        let _ = writeln!(s, "components={}", self.components.len());
        for (i, c) in self.components.iter().enumerate() {
            let _ = writeln!(s, "component.{i}.vertices={}", c.vertices.join(","));
            let _ = writeln!(s, "component.{i}.b={}", c.b);
            let _ = writeln!(s, "component.{i}.b_lazy={}", c.b_lazy);
        }
        checks_text(&mut s, &self.checks);
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn disconnected_composition_check(h: &Hypergraph) -> Result<CompositionReport> {
    disconnected_composition_check_with(h, &SolverConfig::default())
}

/// Compares `b` and `b_L` of a disconnected hypergraph with those of its
/// components `G_1, .., G_k`:
///
/// * `lazy_additive`: `b_L(H) = Σ b_L(G_i)`;
/// * `max_le_b`: `max b(G_i) ≤ b(H)`;
/// * `b_le_sum`: `b(H) ≤ Σ b(G_i)`;
/// * `b_le_sum_minus_k_plus_1`: `b(H) ≤ Σ b(G_i) − k + 1`, when every
///   component has an edge of size at least two.
pub fn disconnected_composition_check_with(
    h: &Hypergraph,
    cfg: &SolverConfig,
) -> Result<CompositionReport> {
    let parts = h.component_partition();
    if parts.len() < 2 {
        return Err(Error::Precondition("hypergraph is connected".into()));
    }
    let b = burning_number_exact_with(h, cfg)?.value;
    let b_lazy = lazy_burning_number_exact_with(h, cfg)?.value;

    let components = cfg.install(|| {
        use rayon::prelude::*;
        h.connected_components()
            .par_iter()
            .map(|g| -> Result<ComponentValues> {
                Ok(ComponentValues {
                    vertices: g.labels().to_vec(),
                    b: burning_number_exact_with(g, cfg)?.value,
                    b_lazy: lazy_burning_number_exact_with(g, cfg)?.value,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let all_ignitable = h
        .connected_components()
        .iter()
        .all(|g| g.edges().iter().any(|e| e.len() >= 2));

    let k = components.len() as i64;
    let sum_b: i64 = components.iter().map(|c| c.b as i64).sum();
    let sum_bl: i64 = components.iter().map(|c| c.b_lazy as i64).sum();
    let max_b = components.iter().map(|c| c.b as i64).max().unwrap_or(0);
    let (bi, bl) = (b as i64, b_lazy as i64);

    let additive = if bl == sum_bl {
        Outcome::Holds { tight: true }
    } else {
        Outcome::Fails
    };
    let minus_k = if all_ignitable {
        Outcome::le(bi, sum_b - k + 1)
    } else {
        Outcome::gated("some component has no edge of size two or more")
    };
    let checks = vec![
        Check::new("lazy_additive", format!("{bl} = {sum_bl}"), additive),
        Check::new("max_le_b", format!("{max_b} <= {bi}"), Outcome::le(max_b, bi)),
        Check::new("b_le_sum", format!("{bi} <= {sum_b}"), Outcome::le(bi, sum_b)),
        Check::new(
            "b_le_sum_minus_k_plus_1",
            format!("{bi} <= {sum_b}-{k}+1"),
            minus_k,
        ),
    ];
    Ok(CompositionReport {
        b,
        b_lazy,
        components,
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubValues {
    pub edges: usize,
    pub b: usize,
    pub b_lazy: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub vertices: Vec<String>,
    pub parent: SubValues,
    /// Strong subhypergraph induced by the vertex set.
    pub strong: SubValues,
    /// Weak subhypergraph induced by the vertex set.
    pub weak: SubValues,
    pub checks: Vec<Check>,
}

impl MonotonicityReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "vertices={}", self.vertices.join(","));
        for (name, v) in [("parent", &self.parent), ("strong", &self.strong), ("weak", &self.weak)] {
            let _ = writeln!(s, "{name}.edges={}", v.edges);
            let _ = writeln!(s, "{name}.b={}", v.b);
            let _ = writeln!(s, "{name}.b_lazy={}", v.b_lazy);
        }
        checks_text(&mut s, &self.checks);
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn subhypergraph_monotonicity_check(h: &Hypergraph, w: &VertexSet) -> Result<MonotonicityReport> {
    subhypergraph_monotonicity_check_with(h, w, &SolverConfig::default())
}

/// With `G1` the strong and `G2` the weak subhypergraph induced by `w`,
/// checks `b(G2) ≤ b(G1)` and `b_L(G2) ≤ b_L(G1)`. When `G2` keeps every
/// edge of `H` and has no singleton edge, also checks `b(G2) ≤ b(H)` and
/// `b_L(G2) ≤ b_L(H)`.
pub fn subhypergraph_monotonicity_check_with(
    h: &Hypergraph,
    w: &VertexSet,
    cfg: &SolverConfig,
) -> Result<MonotonicityReport> {
    let strong = h.strong_induced_sub(w)?;
    let weak = h.weak_induced_sub(w)?;
    let values = |g: &Hypergraph| -> Result<SubValues> {
        Ok(SubValues {
            edges: g.edge_count(),
            b: burning_number_exact_with(g, cfg)?.value,
            b_lazy: lazy_burning_number_exact_with(g, cfg)?.value,
        })
    };
    let (p, g1, g2) = (values(h)?, values(&strong)?, values(&weak)?);

    let le = |a: usize, b: usize| Outcome::le(a as i64, b as i64);
    let mut checks = vec![
        Check::new("weak_b_le_strong_b", format!("{} <= {}", g2.b, g1.b), le(g2.b, g1.b)),
        Check::new(
            "weak_bL_le_strong_bL",
            format!("{} <= {}", g2.b_lazy, g1.b_lazy),
            le(g2.b_lazy, g1.b_lazy),
        ),
    ];
    let gate = if g2.edges != p.edges {
        Some("weak subhypergraph lost an edge")
    } else if weak.has_singleton_edge() {
        Some("weak subhypergraph has a singleton edge")
    } else {
        None
    };
    let (pb, pbl) = match gate {
        None => (le(g2.b, p.b), le(g2.b_lazy, p.b_lazy)),
        Some(r) => (Outcome::gated(r), Outcome::gated(r)),
    };
    checks.push(Check::new("weak_b_le_parent_b", format!("{} <= {}", g2.b, p.b), pb));
    checks.push(Check::new(
        "weak_bL_le_parent_bL",
        format!("{} <= {}", g2.b_lazy, p.b_lazy),
        pbl,
    ));

    Ok(MonotonicityReport {
        vertices: w.iter().map(|v| h.label(v).to_string()).collect(),
        parent: p,
        strong: g1,
        weak: g2,
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceSubsetProbe {
    pub sources: Vec<String>,
    pub b_lazy: usize,
    /// A subset of the sources of size `b_lazy` that lazily burns everything,
    /// if one exists.
    pub lazy_subset: Option<Vec<String>>,
}

impl SequenceSubsetProbe {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "sources={}", self.sources.join(","));
        let _ = writeln!(s, "b_lazy={}", self.b_lazy);
        let found = self
            .lazy_subset
            .as_ref()
            .map_or_else(|| "none".to_string(), |v| v.join(","));
        let _ = writeln!(s, "lazy_subset={found}");
        s
    }
}

pub fn probe_sequence_lazy_subset(h: &Hypergraph) -> Result<SequenceSubsetProbe> {
    probe_sequence_lazy_subset_with(h, &SolverConfig::default())
}

/// Takes the solver's optimal burning sequence and looks for a subset of its
/// sources, of size `b_L`, that is itself a minimum lazy burning set. Purely
/// diagnostic: nothing guarantees one exists in general.
pub fn probe_sequence_lazy_subset_with(
    h: &Hypergraph,
    cfg: &SolverConfig,
) -> Result<SequenceSubsetProbe> {
    let sources = burning_number_exact_with(h, cfg)?.witness.sources;
    let b_lazy = lazy_burning_number_exact_with(h, cfg)?.value;
    let n = h.vertex_count();

    let mut found = None;
    let mut pick: Vec<usize> = (0..b_lazy).collect();
    loop {
        let set = VertexSet::from_members(n, pick.iter().map(|&i| sources[i]));
        if is_lazy_burning_set(h, &set) {
            found = Some(pick.iter().map(|&i| h.label(sources[i]).to_string()).collect());
            break;
        }
        // next combination of b_lazy indices out of sources.len()
        let Some(i) = (0..b_lazy).rev().find(|&i| pick[i] < sources.len() - b_lazy + i) else {
            break;
        };
        pick[i] += 1;
        for j in i + 1..b_lazy {
            pick[j] = pick[j - 1] + 1;
        }
    }
    Ok(SequenceSubsetProbe {
        sources: sources.iter().map(|&v| h.label(v).to_string()).collect(),
        b_lazy,
        lazy_subset: found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{fixtures, gen_disjoint_edges, gen_single_edge, gen_star_family};

    #[test]
    fn all_tight_fixture() {
        let r = bounds_report(&fixtures::bounds_all_tight()).unwrap();
        assert_eq!((r.effective_edges, r.b_lazy, r.b, r.alpha), (1, 3, 3, Some(3)));
        assert!(r.check("VminusE_le_bL").unwrap().outcome.is_tight());
        assert!(r.check("bL_le_alpha").unwrap().outcome.is_tight());
        assert!(r.check("bL_lt_b").unwrap().outcome.is_gated());
        assert!(r.check("chain").unwrap().outcome.is_gated());
    }

    #[test]
    fn single_edge_chain_is_tight() {
        let r = bounds_report(&gen_single_edge(8).unwrap()).unwrap();
        assert_eq!((r.b_lazy, r.b, r.alpha), (7, 8, Some(7)));
        assert!(r.check("chain").unwrap().outcome.is_tight());
    }

    #[test]
    fn star_alpha_slack() {
        let r = bounds_report(&gen_star_family(6).unwrap()).unwrap();
        assert_eq!((r.b_lazy, r.b, r.alpha), (2, 3, Some(5)));
        assert!(r.check("chain").unwrap().outcome.holds());
        assert!(!r.check("b_le_alpha_plus_1").unwrap().outcome.is_tight());
    }

    #[test]
    fn singleton_edges_gate_alpha() {
        let h = Hypergraph::new(2, vec![vec![0], vec![1]]).unwrap();
        let r = bounds_report(&h).unwrap();
        assert_eq!((r.alpha, r.b_lazy, r.b), (Some(0), 2, 2));
        assert!(r.check("bL_le_alpha").unwrap().outcome.is_gated());
        assert!(r.check("bL_lt_b").unwrap().outcome.is_gated());
    }

    #[test]
    fn text_and_json_render() {
        let r = bounds_report(&gen_single_edge(3).unwrap()).unwrap();
        let text = r.to_text();
        assert!(text.contains("b=3\n"));
        assert!(text.contains("check.chain=holds,tight\n"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["b_lazy"], 2);
        assert_eq!(json["checks"][0]["status"], "holds");
    }

    #[test]
    fn composition_of_figures() {
        let r = disconnected_composition_check(&fixtures::two_tight_paths()).unwrap();
        let bs: Vec<usize> = r.components.iter().map(|c| c.b).collect();
        assert_eq!((bs, r.b), (vec![4, 3], 5));
        assert!(r.check("b_le_sum_minus_k_plus_1").unwrap().outcome.holds());

        let r = disconnected_composition_check(&gen_disjoint_edges(&[3, 3]).unwrap()).unwrap();
        assert_eq!((r.b, r.b_lazy), (5, 4));
        assert!(r.check("b_le_sum_minus_k_plus_1").unwrap().outcome.is_tight());

        assert!(disconnected_composition_check(&gen_single_edge(3).unwrap()).is_err());
    }

    #[test]
    fn monotonicity_fixtures() {
        let h = fixtures::sub_equal();
        let w = VertexSet::from_members(5, h.resolve_labels(&["u2", "u3", "u4", "u5"]).unwrap());
        let r = subhypergraph_monotonicity_check(&h, &w).unwrap();
        assert_eq!((r.strong.b_lazy, r.weak.b_lazy, r.strong.b, r.weak.b), (2, 2, 3, 3));

        let h = fixtures::sub_strict();
        let w = VertexSet::from_members(4, h.resolve_labels(&["u1", "u2", "u3"]).unwrap());
        let r = subhypergraph_monotonicity_check(&h, &w).unwrap();
        assert_eq!((r.weak.b_lazy, r.strong.b_lazy, r.weak.b, r.strong.b), (1, 2, 2, 3));

        let r = subhypergraph_monotonicity_check(&h, &h.all_vertices()).unwrap();
        assert!(r.checks.iter().all(|c| c.outcome.is_tight()));
    }

    #[test]
    fn probe_finds_subsets() {
        let p = probe_sequence_lazy_subset(&gen_single_edge(3).unwrap()).unwrap();
        assert_eq!(p.lazy_subset.unwrap().len(), 2);
    }
}
