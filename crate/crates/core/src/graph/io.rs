//! Edge-list and DIMACS text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with `0 <= u < v < n`.
//! DIMACS: `c` comment lines, one `p edge n m` header, and `e u v` lines with
//! 1-based vertices.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

fn add_edge(g: &mut Graph, u: usize, v: usize, line: usize) -> Result<()> {
    g.try_add_edge(u, v).map_err(|e| match e {
        Error::InvalidInput(msg) => parse_err(line, msg),
        other => other,
    })
}

/// Parses the edge-list format. Blank lines are skipped. The number of edge
/// lines must match the header; repeated edges are accepted.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut toks = header.split_ascii_whitespace();
    let n = parse_usize(toks.next(), hline, "vertex count")?;
    let m = parse_usize(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(parse_err(hline, "malformed header, expected `n m`"));
    }

    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (lineno, l) in lines {
        let mut toks = l.split_ascii_whitespace();
        let u = parse_usize(toks.next(), lineno, "endpoint")?;
        let v = parse_usize(toks.next(), lineno, "endpoint")?;
        if toks.next().is_some() {
            return Err(parse_err(lineno, "trailing tokens after edge"));
        }
        add_edge(&mut g, u, v, lineno)?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

/// Writes the edge-list format: LF endings, edges in lexicographic order.
pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::with_capacity(16 + edges.len() * 8);
    writeln!(out, "{} {}", g.n(), edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses DIMACS `p edge` files. The declared edge count is not enforced,
/// since many published instances list edges in both directions.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        let mut toks = l.split_ascii_whitespace();
        match toks.next() {
            Some("p") => {
                if g.is_some() {
                    return Err(parse_err(lineno, "second `p` header"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_err(
                            lineno,
                            format!("unsupported problem type {other:?}"),
                        ))
                    }
                }
                let n = parse_usize(toks.next(), lineno, "vertex count")?;
                parse_usize(toks.next(), lineno, "edge count")?;
                g = Some(Graph::empty(n));
            }
            Some("e") => {
                let graph = g
                    .as_mut()
                    .ok_or_else(|| parse_err(lineno, "edge before `p` header"))?;
                let u = parse_usize(toks.next(), lineno, "endpoint")?;
                let v = parse_usize(toks.next(), lineno, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(lineno, "DIMACS vertices are 1-based"));
                }
                add_edge(graph, u - 1, v - 1, lineno)?;
            }
            Some(tok) => return Err(parse_err(lineno, format!("unknown line type `{tok}`"))),
            None => unreachable!(),
        }
    }
    g.ok_or_else(|| parse_err(1, "missing `p edge n m` header"))
}

/// Detects the format from the first meaningful line: DIMACS if it begins
/// with `c` or `p`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with('p') || l.starts_with('c') => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}
