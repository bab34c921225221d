//! Line-oriented hypergraph text format.
//!
//! ```text
//! # comment lines start with '#'
//! k n m
//! v1 v2 ... vk      (m lines)
//! ```
//!
//! Blank lines are ignored. Writing always emits each edge with its vertices
//! sorted ascending, edges in stored order, and no comments.

use std::fmt::Write as _;

use super::hypergraph::{Hypergraph, HypergraphError, LinearHypergraph, Vertex};

/// Parses and validates a linear hypergraph.
pub fn parse_hypergraph(text: &str) -> Result<LinearHypergraph, HypergraphError> {
    LinearHypergraph::try_from_hypergraph(parse_any_hypergraph(text)?)
}

/// Parses a uniform hypergraph without requiring linearity.
pub fn parse_any_hypergraph(text: &str) -> Result<Hypergraph, HypergraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (_, header) = lines
        .next()
        .ok_or_else(|| HypergraphError::MalformedHeader("missing header line".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(HypergraphError::MalformedHeader(format!(
            "expected `k n m`, got `{header}`"
        )));
    }
    let num = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| HypergraphError::MalformedHeader(format!("{what} is not a count: `{s}`")))
    };
    let k = num(fields[0], "k")?;
    let n = num(fields[1], "n")?;
    let m = num(fields[2], "m")?;

    let mut edges: Vec<Vec<Vertex>> = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(HypergraphError::MalformedLine {
                line,
                msg: format!("more than the declared {m} edges"),
            });
        }
        let edge = body
            .split_whitespace()
            .map(|t| {
                t.parse::<Vertex>().map_err(|_| HypergraphError::MalformedLine {
                    line,
                    msg: format!("`{t}` is not a vertex id"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(HypergraphError::MalformedHeader(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Hypergraph::new(k, n, edges)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {} {}", h.k(), h.n(), h.m()).unwrap();
    for e in h.edges() {
        let mut first = true;
        for v in e {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}
