//! Graph ingestion and the JSON documents emitted by the CLI.
//!
//! Graph files are plain text: a header line `n m`, then `m` lines `u v`
//! with `0 <= u < v < n`. Blank lines are ignored.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bench::BenchReport;
use crate::choose::{Certificate, ChiPcReport, ChoiceMode, Verdict};
use crate::graph::{self, Graph, GraphError, RawGraph};
use crate::suite::SuiteReport;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("expected {expected} integers, found {found} tokens")]
    TokenCount { expected: usize, found: usize },
    #[error("not a nonnegative integer: {0:?}")]
    NotInteger(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex out of range in edge {u} {v} (n = {n})")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("edge {0} {1} must be written with the smaller endpoint first")]
    Descending(usize, usize),
    #[error("header promises {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("invalid graph6: {0}")]
    Graph6(String),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn integers(line: usize, text: &str, expected: usize) -> Result<Vec<usize>, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != expected {
        return Err(err(line, ParseErrorKind::TokenCount { expected, found: tokens.len() }));
    }
    tokens
        .iter()
        .map(|t| t.parse::<usize>().map_err(|_| err(line, ParseErrorKind::NotInteger(t.to_string()))))
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let (header_line, header) = lines.next().ok_or(err(1, ParseErrorKind::MissingHeader))?;
    let nm = integers(header_line, header, 2)?;
    let (n, m) = (nm[0], nm[1]);

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        let uv = integers(line, text, 2)?;
        let (u, v) = (uv[0], uv[1]);
        if u == v {
            return Err(err(line, ParseErrorKind::SelfLoop(u)));
        }
        if u >= n || v >= n {
            return Err(err(line, ParseErrorKind::OutOfRange { u, v, n }));
        }
        if u > v {
            return Err(err(line, ParseErrorKind::Descending(u, v)));
        }
        if edges.contains(&(u, v)) {
            return Err(err(line, ParseErrorKind::DuplicateEdge(u, v)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(last_line, ParseErrorKind::EdgeCount { expected: m, found: edges.len() }));
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

/// Inverse of [`parse_graph`]; edges sorted.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes a graph6 string (no `>>graph6<<` header).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let g6 = |msg: &str| err(1, ParseErrorKind::Graph6(msg.to_string()));
    let bytes: Vec<u8> = text.trim().bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(g6("byte outside 63..=126"));
    }
    let (n, body) = match bytes.as_slice() {
        [] => return Err(g6("empty")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(g6("truncated size"));
            }
            (rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6("truncated size"));
            }
            (rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize), &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(g6("body length does not match vertex count"));
    }
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).map_err(|e| g6(&e.to_string()))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (j, &set) in chunk.iter().enumerate() {
            if set {
                b |= 1 << (5 - j);
            }
        }
        out.push(b + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Named families selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Kmm,
    WangLih,
    LinearForest,
}

/// Builds a family member. `n` is the family's size parameter: vertex count
/// for path, cycle and complete; leaf count for star; m for K_{m,m}; k for
/// the Wang–Lih tree. Linear forests take `orders` instead.
pub fn build_family(family: Family, n: Option<usize>, orders: &[usize]) -> Result<(String, Graph), GraphError> {
    let need = |what: &str| n.ok_or_else(|| GraphError::InvalidParameter(format!("{what} needs --n")));
    Ok(match family {
        Family::Path => {
            let n = need("path")?;
            (format!("P{n}"), graph::path(n))
        }
        Family::Cycle => {
            let n = need("cycle")?;
            (format!("C{n}"), graph::cycle(n)?)
        }
        Family::Star => {
            let m = need("star")?;
            (format!("K1,{m}"), graph::star(m))
        }
        Family::Complete => {
            let n = need("complete")?;
            (format!("K{n}"), graph::complete(n))
        }
        Family::Kmm => {
            let m = need("kmm")?;
            (format!("K{m},{m}"), graph::complete_bipartite(m))
        }
        Family::WangLih => {
            let k = need("wang-lih")?;
            (format!("T{k}"), graph::wang_lih_tree(k)?.graph)
        }
        Family::LinearForest => {
            if orders.is_empty() || orders.contains(&0) {
                return Err(GraphError::InvalidParameter("linear-forest needs --orders with positive parts".into()));
            }
            (forest_name(orders), graph::linear_forest(orders))
        }
    })
}

/// `P5+P2+P1` style name.
pub fn forest_name(orders: &[usize]) -> String {
    if orders.is_empty() {
        return "null".into();
    }
    orders.iter().map(|o| format!("P{o}")).collect::<Vec<_>>().join("+")
}

/// A single `decide` invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decision {
    pub graph_name: String,
    pub graph: RawGraph,
    pub k: usize,
    pub mode: ChoiceMode,
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Decision(Decision),
    ChiPc(ChiPcReport),
    Certificate(Certificate),
    Suite(SuiteReport),
    Bench(BenchReport),
}

/// Top-level JSON document: `{"schema_version": "1", "kind": ..., ...}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    #[serde(flatten)]
    pub body: Report,
}

impl ReportDocument {
    pub fn new(body: Report) -> Self {
        ReportDocument { schema_version: SCHEMA_VERSION.to_string(), body }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report documents always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

pub fn certificate_to_json(cert: &Certificate) -> String {
    serde_json::to_string_pretty(cert).expect("certificates always serialize")
}

pub fn certificate_from_json(text: &str) -> serde_json::Result<Certificate> {
    serde_json::from_str(text)
}
