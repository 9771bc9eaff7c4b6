//! Line-oriented text format for hypergraphs.
//!
//! ```text
//! # comment
//! v y          declares a vertex (needed only for isolated vertices)
//! e x z w      an edge; a bare `e` is the empty edge
//! ```
//!
//! Labels match `[A-Za-z0-9_.-]+`. Vertices are indexed in order of first
//! appearance. Serialization writes every vertex as a `v` line in natural
//! label order, then every edge as an `e` line in canonical order, so
//! structurally equal hypergraphs serialize to identical bytes.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, ParseErrorKind, Result};
use crate::hypergraph::{is_valid_label, Hypergraph};

fn intern<'t>(index: &mut HashMap<&'t str, usize>, labels: &mut Vec<String>, label: &'t str) -> usize {
    let next = labels.len();
    *index.entry(label).or_insert_with(|| {
        labels.push(label.to_string());
        next
    })
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut declared: HashSet<&str> = HashSet::new();
    let mut edges: Vec<Vec<usize>> = Vec::new();

    for (lineno, raw) in text.split('\n').enumerate() {
        let line = lineno + 1;
        let err = |kind| Error::Parse { line, kind };
        let trimmed = raw.trim_start_matches([' ', '\t']);
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split([' ', '\t']).filter(|t| !t.is_empty());
        let directive = tokens.next().expect("line has a token");
        match directive {
            "v" => {
                let label = tokens
                    .next()
                    .ok_or_else(|| err(ParseErrorKind::BadVertexDeclaration))?;
                if tokens.next().is_some() {
                    return Err(err(ParseErrorKind::BadVertexDeclaration));
                }
                if !is_valid_label(label) {
                    return Err(err(ParseErrorKind::InvalidLabel(label.to_string())));
                }
                if !declared.insert(label) {
                    return Err(err(ParseErrorKind::DuplicateDeclaration(label.to_string())));
                }
                intern(&mut index, &mut labels, label);
            }
            "e" => {
                let mut members = Vec::new();
                for label in tokens {
                    if !is_valid_label(label) {
                        return Err(err(ParseErrorKind::InvalidLabel(label.to_string())));
                    }
                    let v = intern(&mut index, &mut labels, label);
                    if members.contains(&v) {
                        return Err(err(ParseErrorKind::RepeatedLabel(label.to_string())));
                    }
                    members.push(v);
                }
                edges.push(members);
            }
            other => return Err(err(ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }

    if labels.is_empty() {
        return Err(Error::NoVertices);
    }
    Hypergraph::with_labels(labels, edges)
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let (labels, edges) = h.canonical_view();
    let mut out = String::new();
    for label in labels {
        let _ = writeln!(out, "v {label}");
    }
    for edge in edges {
        out.push('e');
        for label in edge {
            out.push(' ');
            out.push_str(label);
        }
        out.push('\n');
    }
    out
}
