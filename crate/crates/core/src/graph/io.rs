//! Edge-list and graph6 readers/writers.
//!
//! Edge-list: one `u v` pair per line, `#` starts a comment. A line holding a
//! single integer declares a vertex (useful for isolated vertices). Labels
//! are compacted to `0..n` in order of first appearance.
//!
//! graph6: the standard encoding for graphs on at most 62 vertices.

use std::collections::HashMap;

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_MAX_N: usize = 62;
const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// `labels[v]` is the input label of vertex `v`.
    pub labels: Vec<u64>,
    pub format: GraphFormat,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn looks_like_edge_pair(line: &str) -> bool {
    let mut toks = strip_comment(line).split_whitespace();
    matches!(
        (toks.next(), toks.next()),
        (Some(a), Some(b)) if a.parse::<u64>().is_ok() && b.parse::<u64>().is_ok()
    )
}

/// Parses either format; graph6 is assumed iff no line holds an integer pair.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    if text.lines().any(looks_like_edge_pair) {
        return parse_edgelist(text);
    }
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    if lines.iter().all(|(_, l)| l.parse::<u64>().is_ok()) {
        return parse_edgelist(text);
    }
    match (lines.first().copied(), lines.get(1).copied()) {
        (None, _) => parse_edgelist(text),
        (Some((line, l)), None) => {
            let graph = parse_graph6(l).map_err(|e| match e {
                Error::Parse { token, reason, .. } => Error::Parse { line, token, reason },
                other => other,
            })?;
            let labels = (0..graph.n() as u64).collect();
            Ok(ParsedGraph {
                graph,
                labels,
                format: GraphFormat::Graph6,
            })
        }
        (Some(_), Some((line, l))) => Err(Error::Parse {
            line,
            token: l.to_string(),
            reason: "expected a single graph6 string".into(),
        }),
    }
}

pub fn parse_edgelist(text: &str) -> Result<ParsedGraph> {
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut seen = HashMap::new();
    let mut intern = |label: u64, labels: &mut Vec<u64>| {
        *ids.entry(label).or_insert_with(|| {
            labels.push(label);
            labels.len() - 1
        })
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let parse_tok = |t: &str| {
            t.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                token: t.to_string(),
                reason: "expected a non-negative integer vertex label".into(),
            })
        };
        match toks.as_slice() {
            [v] => {
                let v = parse_tok(v)?;
                intern(v, &mut labels);
            }
            [a, b] => {
                let (la, lb) = (parse_tok(a)?, parse_tok(b)?);
                if la == lb {
                    return Err(Error::Parse {
                        line: line_no,
                        token: line.to_string(),
                        reason: "self-loop".into(),
                    });
                }
                let u = intern(la, &mut labels);
                let v = intern(lb, &mut labels);
                let key = (u.min(v), u.max(v));
                if let Some(first) = seen.insert(key, line_no) {
                    return Err(Error::Parse {
                        line: line_no,
                        token: line.to_string(),
                        reason: format!("duplicate edge (first given on line {first})"),
                    });
                }
                edges.push(key);
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    token: line.to_string(),
                    reason: "expected `u v`".into(),
                })
            }
        }
    }
    let graph = Graph::new(labels.len(), edges)?;
    Ok(ParsedGraph {
        graph,
        labels,
        format: GraphFormat::EdgeList,
    })
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim();
    let body = body.strip_prefix(GRAPH6_HEADER).unwrap_or(body);
    let bad = |token: &str, reason: &str| Error::Parse {
        line: 1,
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(bad(body, "empty graph6 string"));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(bad(&body[pos..], "byte outside the graph6 range 63..=126"));
    }
    if first == 126 {
        return Err(bad(body, "graphs on more than 62 vertices are not supported"));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(bad(
            body,
            &format!("expected {expected} bytes for {n} vertices, got {}", bytes.len()),
        ));
    }
    let data = &bytes[1..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::SizeLimit {
            op: "graph6",
            limit: GRAPH6_MAX_N,
            n,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Writes the graph as an edge list that parses back to the same graph.
///
/// Vertex-declaration lines are emitted up front whenever first-appearance
/// order in the edge list would not reproduce the vertex numbering.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    for &(a, b) in g.edges() {
        for v in [a, b] {
            if !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
    }
    let mut out = String::new();
    if order.len() != g.n() || order.iter().enumerate().any(|(i, &v)| i != v) {
        for v in g.vertices() {
            out.push_str(&format!("{v}\n"));
        }
    }
    for &(a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
