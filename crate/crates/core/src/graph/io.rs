//! Edge-list text format.
//!
//! ```text
//! c optional comments
//! p <n> <m>
//! e <u> <v>      (m lines, 1-based, u != v)
//! ```
//!
//! [`serialize_graph`] writes edges with `u < v` in lexicographic order, so the
//! output is canonical for a given numbering.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Non-blank, non-comment lines as `(1-based line number, tokens)`.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

pub(crate) fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a 1-based vertex token against a host of `n` vertices.
pub(crate) fn parse_vertex(line: usize, token: &str, n: usize) -> Result<usize> {
    let v: usize = token
        .parse()
        .map_err(|_| parse_error(line, format!("bad vertex {token:?}")))?;
    if v == 0 || v > n {
        return Err(parse_error(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Parses a header line `<tag> <n> <m>`.
pub(crate) fn parse_header(line: usize, tokens: &[&str], tag: &str) -> Result<(usize, usize)> {
    if tokens.len() != 3 || tokens[0] != tag {
        return Err(parse_error(
            line,
            format!("expected header `{tag} <n> <m>`"),
        ));
    }
    let n = tokens[1]
        .parse()
        .map_err(|_| parse_error(line, format!("bad vertex count {:?}", tokens[1])))?;
    let m = tokens[2]
        .parse()
        .map_err(|_| parse_error(line, format!("bad edge count {:?}", tokens[2])))?;
    Ok((n, m))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(text.lines().count().max(1), "missing header `p <n> <m>`"))?;
    let (n, m) = parse_header(header_line, &header, "p")?;

    let mut g = Graph::empty(n);
    let mut count = 0;
    let mut last_line = header_line;
    for (line, tokens) in lines {
        last_line = line;
        if tokens[0] != "e" || tokens.len() != 3 {
            return Err(parse_error(line, "expected edge line `e <u> <v>`"));
        }
        let u = parse_vertex(line, tokens[1], n)?;
        let v = parse_vertex(line, tokens[2], n)?;
        if u == v {
            return Err(parse_error(line, format!("loop at vertex {}", u + 1)));
        }
        if g.has_edge(u, v) {
            return Err(parse_error(
                line,
                format!("duplicate edge {} {}", u + 1, v + 1),
            ));
        }
        count += 1;
        if count > m {
            return Err(parse_error(
                line,
                format!("more than the declared {m} edges"),
            ));
        }
        g = with_edge(g, u, v);
    }
    if count != m {
        return Err(parse_error(
            last_line,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

fn with_edge(mut g: Graph, u: usize, v: usize) -> Graph {
    g.adj[u].insert(v);
    g.adj[v].insert(u);
    g
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
