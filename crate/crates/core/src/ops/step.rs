use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{Edge, VertexId, WeightedHypergraph};

/// A vertex introduced by a hook, with its weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NewVertex {
    pub id: VertexId,
    pub weight: u32,
}

impl NewVertex {
    pub fn new(id: VertexId, weight: u32) -> Self {
        NewVertex { id, weight }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HookKind {
    EdgeI,
    EdgeII,
    TwoVertexHyperedge,
    HyperedgeI,
    HyperedgeII,
}

/// One hooking operation. `u` (and `v` for the two-vertex hook) are new
/// vertices; the remaining ids are anchors in the current hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HookStep {
    /// Adds `u` and the edge `{u, v}`.
    EdgeI { u: NewVertex, v: VertexId },
    /// Adds `u` and the edges `{u, v}`, `{u, w}`.
    EdgeII {
        u: NewVertex,
        v: VertexId,
        w: VertexId,
    },
    /// Adds `u`, `v` and the hyperedge `{u, v, w}`.
    TwoVertexHyperedge {
        u: NewVertex,
        v: NewVertex,
        w: VertexId,
    },
    /// Adds `u` and the hyperedge `{u, v, w}`; an edge `{v, w}` is replaced,
    /// otherwise `{v, w}` must lie in an existing hyperedge.
    HyperedgeI {
        u: NewVertex,
        v: VertexId,
        w: VertexId,
    },
    /// Adds `u`, the hyperedge `{u, v, w}` and the edge `{u, z}`, where
    /// `{v, w, z}` is an existing hyperedge.
    HyperedgeII {
        u: NewVertex,
        v: VertexId,
        w: VertexId,
        z: VertexId,
    },
}

impl HookStep {
    pub fn kind(&self) -> HookKind {
        match self {
            HookStep::EdgeI { .. } => HookKind::EdgeI,
            HookStep::EdgeII { .. } => HookKind::EdgeII,
            HookStep::TwoVertexHyperedge { .. } => HookKind::TwoVertexHyperedge,
            HookStep::HyperedgeI { .. } => HookKind::HyperedgeI,
            HookStep::HyperedgeII { .. } => HookKind::HyperedgeII,
        }
    }

    pub fn new_vertices(&self) -> Vec<NewVertex> {
        match *self {
            HookStep::TwoVertexHyperedge { u, v, .. } => vec![u, v],
            HookStep::EdgeI { u, .. }
            | HookStep::EdgeII { u, .. }
            | HookStep::HyperedgeI { u, .. }
            | HookStep::HyperedgeII { u, .. } => vec![u],
        }
    }

    pub fn anchors(&self) -> Vec<VertexId> {
        match *self {
            HookStep::EdgeI { v, .. } => vec![v],
            HookStep::EdgeII { v, w, .. } | HookStep::HyperedgeI { v, w, .. } => vec![v, w],
            HookStep::TwoVertexHyperedge { w, .. } => vec![w],
            HookStep::HyperedgeII { v, w, z, .. } => vec![v, w, z],
        }
    }

    /// Edges the step inserts.
    pub fn added_edges(&self) -> Vec<Vec<VertexId>> {
        match *self {
            HookStep::EdgeI { u, v } => vec![vec![u.id, v]],
            HookStep::EdgeII { u, v, w } => vec![vec![u.id, v], vec![u.id, w]],
            HookStep::TwoVertexHyperedge { u, v, w } => vec![vec![u.id, v.id, w]],
            HookStep::HyperedgeI { u, v, w } => vec![vec![u.id, v, w]],
            HookStep::HyperedgeII { u, v, w, z } => vec![vec![u.id, v, w], vec![u.id, z]],
        }
    }

    /// The hypergraph after this step, without touching any array.
    pub fn apply_to(&self, h: &WeightedHypergraph) -> Result<WeightedHypergraph> {
        let mut out = h.clone();
        for nv in self.new_vertices() {
            if h.contains_vertex(nv.id) {
                return Err(Error::Precondition(format!(
                    "vertex {} already exists",
                    nv.id
                )));
            }
            out.add_vertex(nv.id, nv.weight)?;
        }
        for a in self.anchors() {
            if !h.contains_vertex(a) {
                return Err(Error::Precondition(format!(
                    "anchor vertex {a} does not exist"
                )));
            }
        }
        match *self {
            HookStep::HyperedgeI { v, w, .. } => {
                let pair = Edge::new([v, w])?;
                if !out.remove_edge(&pair) && !h.covers(&[v, w]) {
                    return Err(Error::Precondition(format!(
                        "{pair} is neither an edge nor inside a hyperedge"
                    )));
                }
            }
            HookStep::HyperedgeII { v, w, z, .. } => {
                let triple = Edge::new([v, w, z])?;
                if !h.contains_edge(&triple) {
                    return Err(Error::Precondition(format!(
                        "{{{v},{w},{z}}} is not a hyperedge"
                    )));
                }
            }
            _ => {}
        }
        for e in self.added_edges() {
            out.add_edge(e)?;
        }
        Ok(out)
    }

    /// Removes what the step added (vertices and edges) and restores a
    /// replaced edge.
    pub fn undo(&self, h: &WeightedHypergraph) -> Result<WeightedHypergraph> {
        let added: Vec<Edge> = self
            .added_edges()
            .into_iter()
            .map(Edge::new)
            .collect::<Result<_>>()?;
        let fresh: Vec<VertexId> = self.new_vertices().iter().map(|v| v.id).collect();
        let mut edges: Vec<Vec<VertexId>> = h
            .edges()
            .iter()
            .filter(|e| !added.contains(e))
            .map(|e| e.vertices().to_vec())
            .collect();
        if let HookStep::HyperedgeI { v, w, .. } = *self {
            // the pair was an edge unless it lies in a surviving hyperedge
            let covered = edges.iter().any(|e| e.contains(&v) && e.contains(&w));
            if !covered {
                edges.push(vec![v, w]);
            }
        }
        WeightedHypergraph::new(h.vertices().filter(|(v, _)| !fresh.contains(v)), edges)
    }
}

fn fmt_new(f: &mut fmt::Formatter<'_>, u: NewVertex) -> fmt::Result {
    write!(f, "u={} w={}", u.id, u.weight)
}

impl fmt::Display for HookStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HookStep::EdgeI { u, v } => {
                write!(f, "hookI ")?;
                fmt_new(f, u)?;
                write!(f, " anchor={v}")
            }
            HookStep::EdgeII { u, v, w } => {
                write!(f, "hookII ")?;
                fmt_new(f, u)?;
                write!(f, " anchor={v},{w}")
            }
            HookStep::TwoVertexHyperedge { u, v, w } => {
                write!(f, "twohook ")?;
                fmt_new(f, u)?;
                write!(f, " v={} wv={} anchor={w}", v.id, v.weight)
            }
            HookStep::HyperedgeI { u, v, w } => {
                write!(f, "hyperI ")?;
                fmt_new(f, u)?;
                write!(f, " anchor={v},{w}")
            }
            HookStep::HyperedgeII { u, v, w, z } => {
                write!(f, "hyperII ")?;
                fmt_new(f, u)?;
                write!(f, " anchor={v},{w} z={z}")
            }
        }
    }
}

fn parse_line(line: &str) -> std::result::Result<HookStep, String> {
    let mut words = line.split_whitespace();
    let op = words.next().ok_or("empty step")?;
    let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
    for word in words {
        let (k, v) = word
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, found `{word}`"))?;
        if fields.insert(k, v).is_some() {
            return Err(format!("field `{k}` given twice"));
        }
    }
    let mut take = |key: &str| -> std::result::Result<&str, String> {
        fields
            .remove(key)
            .ok_or_else(|| format!("missing field `{key}`"))
    };
    let num = |s: &str, key: &str| -> std::result::Result<u32, String> {
        s.parse()
            .map_err(|_| format!("field `{key}` is not a non-negative integer: `{s}`"))
    };
    let ids = |s: &str, count: usize| -> std::result::Result<Vec<VertexId>, String> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != count {
            return Err(format!("anchor needs {count} vertex id(s), found `{s}`"));
        }
        parts.iter().map(|p| num(p, "anchor")).collect()
    };
    let u = NewVertex::new(num(take("u")?, "u")?, num(take("w")?, "w")?);
    let step = match op {
        "hookI" => HookStep::EdgeI {
            u,
            v: ids(take("anchor")?, 1)?[0],
        },
        "hookII" => {
            let a = ids(take("anchor")?, 2)?;
            HookStep::EdgeII {
                u,
                v: a[0],
                w: a[1],
            }
        }
        "twohook" => {
            let v = NewVertex::new(num(take("v")?, "v")?, num(take("wv")?, "wv")?);
            HookStep::TwoVertexHyperedge {
                u,
                v,
                w: ids(take("anchor")?, 1)?[0],
            }
        }
        "hyperI" => {
            let a = ids(take("anchor")?, 2)?;
            HookStep::HyperedgeI {
                u,
                v: a[0],
                w: a[1],
            }
        }
        "hyperII" => {
            let a = ids(take("anchor")?, 2)?;
            let z = num(take("z")?, "z")?;
            HookStep::HyperedgeII {
                u,
                v: a[0],
                w: a[1],
                z,
            }
        }
        other => return Err(format!("unknown step `{other}`")),
    };
    if let Some(k) = fields.keys().next() {
        return Err(format!("unexpected field `{k}`"));
    }
    Ok(step)
}

impl FromStr for HookStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_line(s).map_err(|message| Error::Parse { line: 1, message })
    }
}

/// Parses one step per line; blank lines and `#` comments are skipped.
pub fn parse_steps(text: &str) -> Result<Vec<HookStep>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_line(line).map_err(|message| Error::Parse {
            line: i + 1,
            message,
        })?);
    }
    Ok(out)
}
