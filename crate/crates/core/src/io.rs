//! Text formats: edge lists for graphs, node/bag listings for tree models,
//! and facet lists for simplicial complexes.

use std::collections::BTreeSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::treemodel::TreeModel;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Edge-list format: optional `#` comment lines, a header `n m`, then `m`
/// lines `u v` with 0-based ids. Self-loops and duplicate edges are
/// rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = data
        .next()
        .ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(header_line, "bad vertex count"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(header_line, "bad edge count"))?;
    if parts.next().is_some() {
        return Err(parse_err(header_line, "expected exactly `n m`"));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = data
            .next()
            .ok_or_else(|| parse_err(header_line, format!("expected {m} edge lines")))?;
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "bad edge endpoint"))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "bad edge endpoint"))?;
        if parts.next().is_some() {
            return Err(parse_err(line_no, "expected exactly `u v`"));
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = data.next() {
        return Err(parse_err(line_no, "trailing content after the edge list"));
    }
    Graph::from_edges(n, &edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Tree-model format: a line `k` (node count), `k` lines of space-separated
/// bag members (`-` for an empty bag), then `k − 1` lines `a b` of tree
/// edges.
pub fn parse_tree_model(text: &str) -> Result<TreeModel> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_line, first) = data
        .next()
        .ok_or_else(|| parse_err(0, "missing node count"))?;
    let k: usize = first
        .parse()
        .map_err(|_| parse_err(first_line, "bad node count"))?;
    let mut bags = Vec::with_capacity(k);
    for _ in 0..k {
        let (line_no, line) = data
            .next()
            .ok_or_else(|| parse_err(first_line, format!("expected {k} bag lines")))?;
        let mut bag = BTreeSet::new();
        if line != "-" {
            for token in line.split_whitespace() {
                let v: usize = token
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad bag member {token:?}")))?;
                bag.insert(v);
            }
        }
        bags.push(bag);
    }
    let mut edges = Vec::new();
    for _ in 0..k.saturating_sub(1) {
        let (line_no, line) = data.next().ok_or_else(|| {
            parse_err(first_line, format!("expected {} tree edge lines", k - 1))
        })?;
        let mut parts = line.split_whitespace();
        let a: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "bad tree edge"))?;
        let b: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "bad tree edge"))?;
        edges.push((a, b));
    }
    if let Some((line_no, _)) = data.next() {
        return Err(parse_err(line_no, "trailing content after the tree edges"));
    }
    TreeModel::new(bags, edges)
}

pub fn format_tree_model(t: &TreeModel) -> String {
    let mut out = format!("{}\n", t.node_count());
    for bag in t.bags() {
        if bag.is_empty() {
            out.push_str("-\n");
        } else {
            let members: Vec<String> = bag.iter().map(usize::to_string).collect();
            out.push_str(&members.join(" "));
            out.push('\n');
        }
    }
    for &(a, b) in t.tree_edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

/// Facet-list format: one facet per line of space-separated vertex ids, with
/// `∅` (or `-`) for the empty facet.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "∅" || line == "-" {
            facets.push(Vec::new());
            continue;
        }
        let mut facet = Vec::new();
        for token in line.split_whitespace() {
            let v: usize = token
                .parse()
                .map_err(|_| parse_err(i + 1, format!("bad vertex {token:?}")))?;
            facet.push(v);
        }
        facets.push(facet);
    }
    Ok(SimplicialComplex::from_facets(facets))
}

pub fn format_facets(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    for facet in k.facets() {
        if facet.is_empty() {
            out.push_str("∅\n");
        } else {
            let members: Vec<String> = facet.iter().map(usize::to_string).collect();
            out.push_str(&members.join(" "));
            out.push('\n');
        }
    }
    out
}
