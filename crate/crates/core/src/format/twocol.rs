//! The `.2col` text format for colorings.
//!
//! ```text
//! n=<N>
//! host=complete | host=star-deleted k=<k> | host=edges
//! edge: u v        # only with host=edges
//! red: u v
//! ```
//!
//! Host edges not listed as red are blue. `#` starts a comment.

use std::fmt::Write;

use crate::coloring::TwoColoring;
use crate::error::{Error, Result};
use crate::graph::{complete_host, star_deleted_host, SimpleGraph};

enum HostSpec {
    Complete,
    StarDeleted(usize),
    Edges,
}

pub fn parse_coloring(text: &str) -> Result<TwoColoring> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n=<N>` header"))?;
    let n = parse_assignment(header, "n")
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(|| Error::parse(line, format!("expected `n=<N>`, found `{header}`")))?;
    if n > crate::coloring::MAX_COLORING_ORDER {
        return Err(Error::parse(line, format!("order {n} exceeds the supported maximum")));
    }

    let (line, host_line) = lines
        .next()
        .ok_or_else(|| Error::parse(line + 1, "missing `host=` line"))?;
    let mut words = host_line.split_whitespace();
    let spec = match words.next().and_then(|w| parse_assignment(w, "host")) {
        Some("complete") => HostSpec::Complete,
        Some("edges") => HostSpec::Edges,
        Some("star-deleted") => {
            let k = words
                .next()
                .and_then(|w| parse_assignment(w, "k"))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::parse(line, "star-deleted host needs `k=<k>`"))?;
            HostSpec::StarDeleted(k)
        }
        _ => return Err(Error::parse(line, format!("unknown host line `{host_line}`"))),
    };
    if words.next().is_some() {
        return Err(Error::parse(line, "trailing tokens on host line"));
    }
    let mut host = match spec {
        HostSpec::Complete => complete_host(n),
        HostSpec::StarDeleted(k) => {
            star_deleted_host(n, k).map_err(|e| Error::parse(line, e.to_string()))?
        }
        HostSpec::Edges => SimpleGraph::new(n),
    };
    let listed_edges = matches!(spec, HostSpec::Edges);

    let mut red = Vec::new();
    for (line, body) in lines {
        let (kind, rest) = body
            .split_once(':')
            .ok_or_else(|| Error::parse(line, format!("expected `edge:` or `red:`, found `{body}`")))?;
        let (u, v) = parse_pair(rest, n).map_err(|msg| Error::parse(line, msg))?;
        match kind.trim() {
            "edge" if listed_edges => {
                if host.has_edge(u, v) {
                    return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
                }
                host.add_edge(u, v);
            }
            "edge" => return Err(Error::parse(line, "`edge:` lines require `host=edges`")),
            "red" => red.push((line, u, v)),
            other => return Err(Error::parse(line, format!("unknown record `{other}`"))),
        }
    }

    let mut red_graph = SimpleGraph::new(n);
    for (line, u, v) in red {
        if !host.has_edge(u, v) {
            return Err(Error::parse(line, format!("red edge {u} {v} is not a host edge")));
        }
        if red_graph.has_edge(u, v) {
            return Err(Error::parse(line, format!("duplicate red edge {u} {v}")));
        }
        red_graph.add_edge(u, v);
    }
    TwoColoring::from_parts(host, red_graph)
}

fn parse_assignment<'a>(token: &'a str, key: &str) -> Option<&'a str> {
    let (k, v) = token.split_once('=')?;
    (k.trim() == key).then_some(v.trim())
}

fn parse_pair(rest: &str, n: usize) -> std::result::Result<(usize, usize), String> {
    let nums: Vec<&str> = rest.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(format!("expected two vertices, found `{}`", rest.trim()));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| format!("invalid vertex `{s}`"))
            .and_then(|v| {
                if v < n {
                    Ok(v)
                } else {
                    Err(format!("vertex {v} out of range for n={n}"))
                }
            })
    };
    let (u, v) = (parse(nums[0])?, parse(nums[1])?);
    if u == v {
        return Err(format!("loop at vertex {u}"));
    }
    Ok((u.min(v), u.max(v)))
}

/// Emits the normal form: the most specific host line, then edges and red
/// edges in lexicographic order.
pub fn emit_coloring(c: &TwoColoring) -> String {
    let n = c.order();
    let host = c.host();
    let mut out = format!("n={n}\n");
    if host.edge_count() == n * n.saturating_sub(1) / 2 {
        out.push_str("host=complete\n");
    } else if let Some(k) = star_deleted_k(host) {
        let _ = writeln!(out, "host=star-deleted k={k}");
    } else {
        out.push_str("host=edges\n");
        for (u, v) in host.edges() {
            let _ = writeln!(out, "edge: {u} {v}");
        }
    }
    for (u, v) in c.red_edges() {
        let _ = writeln!(out, "red: {u} {v}");
    }
    out
}

fn star_deleted_k(host: &SimpleGraph) -> Option<usize> {
    let n = host.order();
    if n == 0 {
        return None;
    }
    let k = host.degree(n - 1);
    match star_deleted_host(n, k) {
        Ok(g) if &g == host => Some(k),
        _ => None,
    }
}
