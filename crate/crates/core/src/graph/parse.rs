//! Text formats for graphs and vertex weights.
//!
//! Graph file: the first non-comment line is `n m`, followed by `m` lines
//! `u v` with `0 <= u, v < n` and `u != v`. A `#` starts a comment that runs
//! to the end of the line; blank lines are ignored.
//!
//! Weights file: exactly `n` lines, each a nonnegative decimal.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};
use crate::weights::{parse_decimal, Weights};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| parse_err(line, format!("expected two integers, got `{text}`")))?;
        field
            .parse()
            .map_err(|_| parse_err(line, format!("`{field}` is not a nonnegative integer")))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(parse_err(
            line,
            format!("expected two integers, got `{text}`"),
        ));
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut content = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    });

    let (header_line, header) = content
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(header_line, header)?;
    if n == 0 {
        return Err(parse_err(header_line, "a graph needs at least one vertex"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    let mut last_line = header_line;
    for (line, body) in content {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(line, body)?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {{{u}, {v}}}")));
        }
        edges.push((u.min(v), u.max(v)));
        last_line = line;
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn parse_weights(text: &str, n: usize) -> Result<Weights> {
    let mut lines: Vec<&str> = text.lines().collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    if lines.len() != n {
        return Err(parse_err(
            lines.len().max(1),
            format!("expected {n} weight lines, found {}", lines.len()),
        ));
    }
    let values = lines
        .iter()
        .enumerate()
        .map(|(i, l)| parse_decimal(l).map_err(|m| parse_err(i + 1, m)))
        .collect::<Result<Vec<_>>>()?;
    Weights::from_ratios(&values)
}
