//! Graph file formats and report serialization.
//!
//! Three formats are read and written: DIMACS `.col` (1-based `e u v`
//! lines after a `p edge n m` header), a plain edge list (`n m` header,
//! then 0-based pairs) and graph6. Parse errors carry 1-based line numbers.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::colorers::{ColoringResult, TraceStep, Violation};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    DimacsCol,
    EdgeList,
    Graph6,
}

impl Format {
    pub const ALL: [Format; 3] = [Format::DimacsCol, Format::EdgeList, Format::Graph6];

    pub fn name(self) -> &'static str {
        match self {
            Format::DimacsCol => "dimacs-col",
            Format::EdgeList => "edge-list",
            Format::Graph6 => "graph6",
        }
    }

    /// Guess from a file extension.
    pub fn from_extension(path: &Path) -> Option<Format> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "col" | "dimacs" => Some(Format::DimacsCol),
            "g6" | "graph6" => Some(Format::Graph6),
            "el" | "edges" | "txt" => Some(Format::EdgeList),
            _ => None,
        }
    }

    /// Guess from the first meaningful line.
    pub fn sniff(text: &str) -> Format {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        if first.starts_with('c') && (first.len() == 1 || first.as_bytes()[1] == b' ') || first.starts_with("p ") {
            Format::DimacsCol
        } else if first.split_whitespace().count() == 2
            && first.split_whitespace().all(|t| t.parse::<usize>().is_ok())
        {
            Format::EdgeList
        } else {
            Format::Graph6
        }
    }

    /// The explicit choice, else the extension, else the content.
    pub fn resolve(explicit: Option<Format>, path: Option<&Path>, text: &str) -> Format {
        explicit
            .or_else(|| path.and_then(Format::from_extension))
            .unwrap_or_else(|| Format::sniff(text))
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        match norm.as_str() {
            "dimacs" | "col" => Ok(Format::DimacsCol),
            "g6" => Ok(Format::Graph6),
            "edges" => Ok(Format::EdgeList),
            _ => Format::ALL
                .into_iter()
                .find(|f| f.name() == norm)
                .ok_or_else(|| format!("unknown format `{s}`")),
        }
    }
}

/// Parses one graph. For graph6 the text must hold exactly one graph.
pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::DimacsCol => parse_dimacs(text),
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => {
            let mut all = parse_graph6_all(text)?;
            match all.len() {
                1 => Ok(all.pop().unwrap()),
                0 => Err(Error::parse(1, "no graph6 line found")),
                k => Err(Error::parse(2, format!("expected one graph, found {k}"))),
            }
        }
    }
}

struct EdgeSink {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    seen: std::collections::HashSet<(Vertex, Vertex)>,
}

impl EdgeSink {
    fn new(n: usize) -> Self {
        EdgeSink {
            n,
            edges: Vec::new(),
            seen: Default::default(),
        }
    }

    fn add(&mut self, line: usize, u: Vertex, v: Vertex, shown: (usize, usize)) -> Result<()> {
        for (x, s) in [(u, shown.0), (v, shown.1)] {
            if x >= self.n {
                return Err(Error::parse(line, format!("vertex {s} out of range for {} vertices", self.n)));
            }
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {}", shown.0)));
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge {} {}", shown.0, shown.1)));
        }
        self.edges.push((u, v));
        Ok(())
    }
}

fn number(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("{what} `{tok}` is not a non-negative integer")))
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut sink: Option<(EdgeSink, usize)> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        last = line;
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("p") => {
                if sink.is_some() {
                    return Err(Error::parse(line, "second `p` header"));
                }
                match toks.next() {
                    Some("edge" | "edges" | "col") => {}
                    other => return Err(Error::parse(line, format!("expected `p edge`, found `p {}`", other.unwrap_or("")))),
                }
                let n = number(line, toks.next(), "vertex count")?;
                let m = number(line, toks.next(), "edge count")?;
                if toks.next().is_some() {
                    return Err(Error::parse(line, "trailing tokens in header"));
                }
                sink = Some((EdgeSink::new(n), m));
            }
            Some("e") => {
                let Some((s, _)) = sink.as_mut() else {
                    return Err(Error::parse(line, "edge before the `p edge` header"));
                };
                let u = number(line, toks.next(), "endpoint")?;
                let v = number(line, toks.next(), "endpoint")?;
                if toks.next().is_some() {
                    return Err(Error::parse(line, "trailing tokens after edge"));
                }
                if u == 0 || v == 0 {
                    return Err(Error::parse(line, "DIMACS vertex ids start at 1"));
                }
                s.add(line, u - 1, v - 1, (u, v))?;
            }
            Some(t) => return Err(Error::parse(line, format!("unexpected line type `{t}`"))),
            None => unreachable!(),
        }
    }
    let (s, m) = sink.ok_or_else(|| Error::parse(last.max(1), "missing `p edge <n> <m>` header"))?;
    if s.edges.len() != m {
        return Err(Error::parse(
            last.max(1),
            format!("header announces {m} edges but {} were given", s.edges.len()),
        ));
    }
    Graph::from_edges(s.n, &s.edges)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut sink: Option<(EdgeSink, usize)> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.split('#').next().unwrap().trim();
        if l.is_empty() {
            continue;
        }
        last = line;
        let mut toks = l.split_whitespace();
        let a = number(line, toks.next(), "first field")?;
        let b = number(line, toks.next(), "second field")?;
        if toks.next().is_some() {
            return Err(Error::parse(line, "expected exactly two fields"));
        }
        match sink.as_mut() {
            None => sink = Some((EdgeSink::new(a), b)),
            Some((s, _)) => s.add(line, a, b, (a, b))?,
        }
    }
    let (s, m) = sink.ok_or_else(|| Error::parse(1, "missing `<n> <m>` header"))?;
    if s.edges.len() != m {
        return Err(Error::parse(
            last.max(1),
            format!("header announces {m} edges but {} were given", s.edges.len()),
        ));
    }
    Graph::from_edges(s.n, &s.edges)
}

/// Every graph in a graph6 stream, one per non-empty line.
pub fn parse_graph6_all(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_line(l.trim(), i + 1))
        .collect()
}

pub fn parse_graph6_line(s: &str, line: usize) -> Result<Graph> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(line, format!("byte {b:#04x} is not valid graph6")));
    }
    let (n, rest) = match bytes {
        [] => return Err(Error::parse(line, "empty graph6 line")),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                return Err(Error::parse(line, "truncated graph6 size"));
            }
            let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[8..])
        }
        [126, ..] => {
            if bytes.len() < 4 {
                return Err(Error::parse(line, "truncated graph6 size"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[4..])
        }
        [b, ..] => ((b - 63) as usize, &bytes[1..]),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if rest.len() != need {
        return Err(Error::parse(
            line,
            format!("graph6 body for {n} vertices needs {need} bytes, found {}", rest.len()),
        ));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if (bits..need * 6).any(bit) {
        return Err(Error::parse(line, "nonzero padding bits"));
    }
    Graph::from_edges(n, &edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::DimacsCol => to_dimacs(g),
        Format::EdgeList => to_edge_list(g),
        Format::Graph6 => to_graph6(g) + "\n",
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Machine-readable envelope shared by every command.
#[derive(Clone, Debug, Serialize)]
pub struct JsonReport<T: Serialize> {
    pub command: Vec<String>,
    pub input_sha256: Option<String>,
    pub version: &'static str,
    pub result: T,
    pub trace: Vec<TraceStep>,
    pub violations: Vec<Violation>,
}

impl<T: Serialize> JsonReport<T> {
    pub fn new(command: Vec<String>, input: Option<&[u8]>, result: T) -> Self {
        JsonReport {
            command,
            input_sha256: input.map(sha256_hex),
            version: env!("CARGO_PKG_VERSION"),
            result,
            trace: Vec::new(),
            violations: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ColoringSummary {
    pub colors: usize,
    pub bound_claimed: usize,
    pub coloring: Vec<usize>,
}

/// Text form: one `v <vertex> <color>` line per vertex, then
/// `colors=<k>`, then one `violation:` line per recorded violation.
pub fn coloring_text(result: &ColoringResult) -> String {
    let mut s = String::new();
    for (v, c) in result.coloring.colors().iter().enumerate() {
        s.push_str(&format!("v {v} {c}\n"));
    }
    s.push_str(&format!("colors={}\n", result.coloring.colors_used()));
    for v in &result.violations {
        s.push_str(&format!("violation: {v}\n"));
    }
    s
}

/// The coloring as text, or as a [`JsonReport`] when `json` carries the
/// command line and input bytes.
pub fn serialize_coloring(result: &ColoringResult, json: Option<(Vec<String>, &[u8])>) -> String {
    match json {
        None => coloring_text(result),
        Some((command, input)) => {
            let mut r = JsonReport::new(
                command,
                Some(input),
                ColoringSummary {
                    colors: result.coloring.colors_used(),
                    bound_claimed: result.bound_claimed,
                    coloring: result.coloring.colors().to_vec(),
                },
            );
            r.trace = result.trace.clone();
            r.violations = result.violations.clone();
            r.to_json()
        }
    }
}
