//! Hooking operations: grow a hypergraph together with its balanced
//! covering array, keeping the array size `n` fixed.
//!
//! Every hook is persistent (returns a new array) and checks eagerly that
//! the grown hypergraph still has product weight at most `n`.

mod step;

pub use step::{parse_steps, HookKind, HookStep, NewVertex};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::extension::{extend_3qi, extend_balanced, extend_pairwise_balanced_pair};
use crate::model::{CoveringArray, SymbolVector, VertexId, WeightedHypergraph};
use crate::tripartite::extend_3qi_constrained;

/// A one-vertex array: the cyclic row `0, 1, .., w-1, 0, 1, ..` of length `n`.
pub fn seed_array(v: NewVertex, n: usize) -> Result<CoveringArray> {
    let h = WeightedHypergraph::new([(v.id, v.weight)], Vec::<Vec<VertexId>>::new())?;
    let rows = BTreeMap::from([(v.id, SymbolVector::cyclic(n, v.weight))]);
    CoveringArray::new(h, rows)
}

/// Adds an isolated vertex carrying the cyclic row.
pub fn add_seed_vertex(ca: &CoveringArray, v: NewVertex) -> Result<CoveringArray> {
    if ca.hypergraph().contains_vertex(v.id) {
        return Err(Error::Precondition(format!(
            "vertex {} already exists",
            v.id
        )));
    }
    let mut h = ca.hypergraph().clone();
    h.add_vertex(v.id, v.weight)?;
    let mut rows = ca.rows().clone();
    rows.insert(v.id, SymbolVector::cyclic(ca.size(), v.weight));
    CoveringArray::new(h, rows)
}

fn row(ca: &CoveringArray, v: VertexId) -> Result<&SymbolVector> {
    ca.row(v)
        .ok_or_else(|| Error::Precondition(format!("anchor vertex {v} does not exist")))
}

fn grown(ca: &CoveringArray, step: &HookStep) -> Result<WeightedHypergraph> {
    let h = step.apply_to(ca.hypergraph())?;
    let pw = h.max_edge_product().unwrap_or(0);
    if pw > ca.size() as u64 {
        return Err(Error::Precondition(format!(
            "product weight {pw} after the step exceeds the array size {}",
            ca.size()
        )));
    }
    Ok(h)
}

fn assemble(
    ca: &CoveringArray,
    h: WeightedHypergraph,
    new_rows: Vec<(VertexId, SymbolVector)>,
) -> Result<CoveringArray> {
    let mut rows = ca.rows().clone();
    rows.extend(new_rows);
    CoveringArray::new(h, rows)
}

/// Adds `u` joined to `v`; the new row is pairwise balanced with row `v`.
pub fn hook_edge_i(ca: &CoveringArray, u: NewVertex, v: VertexId) -> Result<CoveringArray> {
    let h = grown(ca, &HookStep::EdgeI { u, v })?;
    let y = extend_balanced(row(ca, v)?, u.weight)?;
    assemble(ca, h, vec![(u.id, y)])
}

/// Adds `u` joined to `v` and `w`; the new row is pairwise balanced with both.
pub fn hook_edge_ii(
    ca: &CoveringArray,
    u: NewVertex,
    v: VertexId,
    w: VertexId,
) -> Result<CoveringArray> {
    let h = grown(ca, &HookStep::EdgeII { u, v, w })?;
    let y = extend_pairwise_balanced_pair(row(ca, v)?, row(ca, w)?, u.weight)?;
    assemble(ca, h, vec![(u.id, y)])
}

/// Adds the hyperedge `{u, v, w}` with `u`, `v` new: the row of `u` is
/// pairwise balanced with row `w`, then the row of `v` completes the triple.
pub fn hook_two_vertex_hyperedge(
    ca: &CoveringArray,
    u: NewVertex,
    v: NewVertex,
    w: VertexId,
) -> Result<CoveringArray> {
    let h = grown(ca, &HookStep::TwoVertexHyperedge { u, v, w })?;
    let xw = row(ca, w)?;
    let yu = extend_balanced(xw, u.weight)?;
    let yv = extend_3qi(xw, &yu, v.weight)?;
    assemble(ca, h, vec![(u.id, yu), (v.id, yv)])
}

/// Adds `u` to the pair `{v, w}`, replacing the edge `{v, w}` if present.
pub fn hook_hyperedge_i(
    ca: &CoveringArray,
    u: NewVertex,
    v: VertexId,
    w: VertexId,
) -> Result<CoveringArray> {
    let h = grown(ca, &HookStep::HyperedgeI { u, v, w })?;
    let y = extend_3qi(row(ca, v)?, row(ca, w)?, u.weight)?;
    assemble(ca, h, vec![(u.id, y)])
}

/// Adds the hyperedge `{u, v, w}` and the edge `{u, z}` next to the
/// hyperedge `{v, w, z}`. Both orders of `v`, `w` are tried as the leading
/// row of the split, since the size bounds are not symmetric in them.
pub fn hook_hyperedge_ii(
    ca: &CoveringArray,
    u: NewVertex,
    v: VertexId,
    w: VertexId,
    z: VertexId,
) -> Result<CoveringArray> {
    let h = grown(ca, &HookStep::HyperedgeII { u, v, w, z })?;
    let (xv, xw, xz) = (row(ca, v)?, row(ca, w)?, row(ca, z)?);
    let y = match extend_3qi_constrained(xv, xw, xz, u.weight) {
        Err(Error::Precondition(first)) => {
            extend_3qi_constrained(xw, xv, xz, u.weight).map_err(|e| match e {
                Error::Precondition(second) => {
                    Error::Precondition(format!("{first}; with anchors swapped: {second}"))
                }
                other => other,
            })?
        }
        other => other?,
    };
    assemble(ca, h, vec![(u.id, y)])
}

pub fn apply_step(ca: &CoveringArray, step: &HookStep) -> Result<CoveringArray> {
    match *step {
        HookStep::EdgeI { u, v } => hook_edge_i(ca, u, v),
        HookStep::EdgeII { u, v, w } => hook_edge_ii(ca, u, v, w),
        HookStep::TwoVertexHyperedge { u, v, w } => hook_two_vertex_hyperedge(ca, u, v, w),
        HookStep::HyperedgeI { u, v, w } => hook_hyperedge_i(ca, u, v, w),
        HookStep::HyperedgeII { u, v, w, z } => hook_hyperedge_ii(ca, u, v, w, z),
    }
}

/// Folds the steps over `ca`; the first failure is reported with its
/// zero-based index.
pub fn apply_sequence(ca: &CoveringArray, steps: &[HookStep]) -> Result<CoveringArray> {
    let mut cur = ca.clone();
    for (index, step) in steps.iter().enumerate() {
        cur = apply_step(&cur, step).map_err(|e| Error::Step {
            index,
            source: Box::new(e),
        })?;
    }
    Ok(cur)
}
