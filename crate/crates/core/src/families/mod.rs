//! Generators for the standard example families, their closed forms, and
//! bundled small instances.

mod formulas;
mod generators;
pub mod fixtures;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub use formulas::{
    path_burning_number, path_optimal_sequence, tight3_burning_number, tight3_max_spread,
    tight3_optimal_sequence,
};
pub use generators::{
    gen_disjoint_edges, gen_loose_path, gen_loose_path_order, gen_loose_path_sizes,
    gen_nested_family, gen_single_edge, gen_star_family, gen_strwk_family, gen_tight_path,
};

/// A family member, one variant per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    TightPath { k: usize, n: usize },
    /// Uniform loose path with `m` edges of size `k`.
    LoosePath { k: usize, m: usize },
    /// Loose path with explicit edge sizes.
    LoosePathSizes(Vec<usize>),
    SingleEdge { n: usize },
    DisjointEdges(Vec<usize>),
    Star { n: usize },
    Nested { n: usize },
    Strwk { n: usize },
    /// The graph path, i.e. the tight 2-uniform path.
    GraphPath { n: usize },
}

/// Family identifiers accepted by [`FamilySpec::from_parts`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    TightPath,
    LoosePath,
    SingleEdge,
    DisjointEdges,
    Star,
    Nested,
    Strwk,
    GraphPath,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::TightPath,
        FamilyId::LoosePath,
        FamilyId::SingleEdge,
        FamilyId::DisjointEdges,
        FamilyId::Star,
        FamilyId::Nested,
        FamilyId::Strwk,
        FamilyId::GraphPath,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::TightPath => "tight-path",
            FamilyId::LoosePath => "loose-path",
            FamilyId::SingleEdge => "single-edge",
            FamilyId::DisjointEdges => "disjoint-edges",
            FamilyId::Star => "star",
            FamilyId::Nested => "nested",
            FamilyId::Strwk => "strwk",
            FamilyId::GraphPath => "graph-path",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

/// Raw parameters as they arrive from a command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub sizes: Option<Vec<usize>>,
}

impl FamilySpec {
    /// Builds a spec from an id and parameters. Each family takes exactly the
    /// parameters its generator does; anything missing or extra is an error.
    ///
    /// `loose-path` takes `k` with either `m` (edge count) or `n` (order), or
    /// `sizes` alone. `disjoint-edges` takes `sizes`, or `k` and `m` for `m`
    /// edges of size `k`.
    pub fn from_parts(id: FamilyId, p: &FamilyParams) -> Result<Self> {
        let missing = |what: &str| Error::InvalidParameter(format!("{id} needs --{what}"));
        let given: Vec<&str> = [
            p.k.map(|_| "k"),
            p.n.map(|_| "n"),
            p.m.map(|_| "m"),
            p.sizes.as_ref().map(|_| "sizes"),
        ]
        .into_iter()
        .flatten()
        .collect();
        let only = |allowed: &[&str]| -> Result<()> {
            match given.iter().find(|g| !allowed.contains(g)) {
                Some(extra) => Err(Error::InvalidParameter(format!(
                    "{id} does not take --{extra}"
                ))),
                None => Ok(()),
            }
        };
        let n = || p.n.ok_or_else(|| missing("n"));

        Ok(match id {
            FamilyId::TightPath => {
                only(&["k", "n"])?;
                FamilySpec::TightPath {
                    k: p.k.ok_or_else(|| missing("k"))?,
                    n: n()?,
                }
            }
            FamilyId::LoosePath => {
                if let Some(sizes) = &p.sizes {
                    only(&["sizes"])?;
                    FamilySpec::LoosePathSizes(sizes.clone())
                } else {
                    only(&["k", "m", "n"])?;
                    let k = p.k.ok_or_else(|| missing("k"))?;
                    match (p.m, p.n) {
                        (Some(m), None) => FamilySpec::LoosePath { k, m },
                        (None, Some(n)) => {
                            if k < 2 || n < 1 || (n - 1) % (k - 1) != 0 {
                                return Err(Error::InvalidParameter(format!(
                                    "no {k}-uniform loose path has {n} vertices"
                                )));
                            }
                            FamilySpec::LoosePath { k, m: (n - 1) / (k - 1) }
                        }
                        _ => {
                            return Err(Error::InvalidParameter(
                                "loose-path needs exactly one of --m and --n".into(),
                            ))
                        }
                    }
                }
            }
            FamilyId::DisjointEdges => {
                if let Some(sizes) = &p.sizes {
                    only(&["sizes"])?;
                    FamilySpec::DisjointEdges(sizes.clone())
                } else {
                    only(&["k", "m"])?;
                    let k = p.k.ok_or_else(|| missing("k"))?;
                    let m = p.m.ok_or_else(|| missing("m"))?;
                    FamilySpec::DisjointEdges(vec![k; m])
                }
            }
            FamilyId::SingleEdge => {
                only(&["n"])?;
                FamilySpec::SingleEdge { n: n()? }
            }
            FamilyId::Star => {
                only(&["n"])?;
                FamilySpec::Star { n: n()? }
            }
            FamilyId::Nested => {
                only(&["n"])?;
                FamilySpec::Nested { n: n()? }
            }
            FamilyId::Strwk => {
                only(&["n"])?;
                FamilySpec::Strwk { n: n()? }
            }
            FamilyId::GraphPath => {
                only(&["n"])?;
                FamilySpec::GraphPath { n: n()? }
            }
        })
    }

    pub fn id(&self) -> FamilyId {
        match self {
            FamilySpec::TightPath { .. } => FamilyId::TightPath,
            FamilySpec::LoosePath { .. } | FamilySpec::LoosePathSizes(_) => FamilyId::LoosePath,
            FamilySpec::SingleEdge { .. } => FamilyId::SingleEdge,
            FamilySpec::DisjointEdges(_) => FamilyId::DisjointEdges,
            FamilySpec::Star { .. } => FamilyId::Star,
            FamilySpec::Nested { .. } => FamilyId::Nested,
            FamilySpec::Strwk { .. } => FamilyId::Strwk,
            FamilySpec::GraphPath { .. } => FamilyId::GraphPath,
        }
    }

    pub fn generate(&self) -> Result<Hypergraph> {
        match self {
            &FamilySpec::TightPath { k, n } => gen_tight_path(k, n),
            &FamilySpec::LoosePath { k, m } => gen_loose_path(k, m),
            FamilySpec::LoosePathSizes(sizes) => gen_loose_path_sizes(sizes),
            &FamilySpec::SingleEdge { n } => gen_single_edge(n),
            FamilySpec::DisjointEdges(sizes) => gen_disjoint_edges(sizes),
            &FamilySpec::Star { n } => gen_star_family(n),
            &FamilySpec::Nested { n } => gen_nested_family(n),
            &FamilySpec::Strwk { n } => gen_strwk_family(n),
            &FamilySpec::GraphPath { n } => {
                if n == 1 {
                    Hypergraph::new(1, Vec::<Vec<usize>>::new())
                } else {
                    gen_tight_path(2, n)
                }
            }
        }
    }

    /// The smallest member of every family.
    pub fn minimal_members() -> Vec<FamilySpec> {
        vec![
            FamilySpec::TightPath { k: 2, n: 2 },
            FamilySpec::TightPath { k: 3, n: 3 },
            FamilySpec::LoosePath { k: 3, m: 1 },
            FamilySpec::LoosePathSizes(vec![2]),
            FamilySpec::SingleEdge { n: 2 },
            FamilySpec::DisjointEdges(vec![2]),
            FamilySpec::Star { n: 3 },
            FamilySpec::Nested { n: 3 },
            FamilySpec::Strwk { n: 5 },
            FamilySpec::GraphPath { n: 1 },
        ]
    }
}
