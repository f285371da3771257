//! Line-oriented text formats.
//!
//! Hypergraphs: `v <id> <weight>` and `e <id> <id> [<id>]`, with `#`
//! comments. Arrays: a `ca n=<n> k=<k>` header, then one
//! `row <id> g=<g>: s1 s2 ... sn` line per row.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{CoveringArray, Edge, SymbolVector, VertexId, WeightedHypergraph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content(raw: &str) -> &str {
    raw.split('#').next().unwrap().trim()
}

fn number<T: std::str::FromStr>(word: &str, line: usize, what: &str) -> Result<T> {
    word.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what} is not a non-negative integer: `{word}`"),
        )
    })
}

pub fn parse_hypergraph(text: &str) -> Result<WeightedHypergraph> {
    let mut h = WeightedHypergraph::new([], Vec::<Vec<VertexId>>::new())?;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let words: Vec<&str> = content(raw).split_whitespace().collect();
        match words.as_slice() {
            [] => {}
            ["v", id, weight] => {
                let id: VertexId = number(id, line, "vertex id")?;
                let weight: u32 = number(weight, line, "weight")?;
                if weight == 0 {
                    return Err(parse_err(line, format!("vertex {id} has weight 0")));
                }
                h.add_vertex(id, weight)
                    .map_err(|e| parse_err(line, e.to_string()))?;
            }
            ["e", ids @ ..] if (2..=3).contains(&ids.len()) => {
                let ids: Vec<VertexId> = ids
                    .iter()
                    .map(|w| number(w, line, "vertex id"))
                    .collect::<Result<_>>()?;
                if let Some(v) = ids.iter().find(|&&v| !h.contains_vertex(v)) {
                    return Err(parse_err(line, format!("edge names undeclared vertex {v}")));
                }
                let edge = Edge::new(ids.clone()).map_err(|e| parse_err(line, e.to_string()))?;
                if h.contains_edge(&edge) {
                    return Err(parse_err(line, format!("duplicate edge {edge}")));
                }
                h.add_edge(ids)
                    .map_err(|e| parse_err(line, e.to_string()))?;
            }
            ["e", ..] => return Err(parse_err(line, "an edge needs 2 or 3 vertex ids")),
            [kw, ..] => return Err(parse_err(line, format!("unknown record `{kw}`"))),
        }
    }
    Ok(h)
}

pub fn emit_hypergraph(h: &WeightedHypergraph) -> String {
    let mut out = String::new();
    for (v, w) in h.vertices() {
        writeln!(out, "v {v} {w}").unwrap();
    }
    for e in h.edges() {
        out.push('e');
        for v in e.vertices() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn emit_array(ca: &CoveringArray) -> String {
    let mut out = format!("ca n={} k={}\n", ca.size(), ca.row_count());
    for (v, row) in ca.rows() {
        write!(out, "row {v} g={}:", row.alphabet()).unwrap();
        for s in row.symbols() {
            write!(out, " {s}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses the rows of an array without binding them to a hypergraph.
pub fn parse_array_rows(text: &str) -> Result<BTreeMap<VertexId, SymbolVector>> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows = BTreeMap::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        last = line;
        let Some((n, _)) = header else {
            let words: Vec<&str> = body.split_whitespace().collect();
            let ["ca", n, k] = words.as_slice() else {
                return Err(parse_err(line, "expected header `ca n=<n> k=<k>`"));
            };
            let field = |w: &str, key: &str| -> Result<usize> {
                let v = w.strip_prefix(key).ok_or_else(|| {
                    parse_err(line, format!("expected `{key}<value>`, found `{w}`"))
                })?;
                number(v, line, key.trim_end_matches('='))
            };
            header = Some((field(n, "n=")?, field(k, "k=")?));
            continue;
        };
        let (head, symbols) = body
            .split_once(':')
            .ok_or_else(|| parse_err(line, "expected `row <id> g=<g>: symbols`"))?;
        let words: Vec<&str> = head.split_whitespace().collect();
        let ["row", id, g] = words.as_slice() else {
            return Err(parse_err(line, "expected `row <id> g=<g>: symbols`"));
        };
        let id: VertexId = number(id, line, "vertex id")?;
        let g: u32 = number(
            g.strip_prefix("g=")
                .ok_or_else(|| parse_err(line, "expected `g=<alphabet>`"))?,
            line,
            "alphabet",
        )?;
        let symbols: Vec<u32> = symbols
            .split_whitespace()
            .map(|w| number(w, line, "symbol"))
            .collect::<Result<_>>()?;
        if symbols.len() != n {
            return Err(parse_err(
                line,
                format!("row has {} symbols, header says {n}", symbols.len()),
            ));
        }
        let row = SymbolVector::new(symbols, g).map_err(|e| parse_err(line, e.to_string()))?;
        if rows.insert(id, row).is_some() {
            return Err(parse_err(line, format!("row {id} given twice")));
        }
    }
    let (_, k) = header.ok_or_else(|| parse_err(last.max(1), "missing `ca` header"))?;
    if rows.len() != k {
        return Err(parse_err(
            last.max(1),
            format!("{} rows, header says {k}", rows.len()),
        ));
    }
    Ok(rows)
}

/// Parses an array and binds it to `h`; row ids and alphabets must match.
pub fn parse_array(text: &str, h: &WeightedHypergraph) -> Result<CoveringArray> {
    let rows = parse_array_rows(text)?;
    CoveringArray::new(h.clone(), rows)
}
