//! Synthesis of a new balanced row that is pairwise balanced with, or
//! 3-qualitatively independent of, given rows.
//!
//! All three operations follow the same pipeline: build the column-indexed
//! bipartite multigraph of the two input rows, split every class into copies
//! of degree at most `h`, colour the split graph with `h` matchings, even out
//! the matching sizes, and read the new row off the colours (column `i` gets
//! the colour of edge `i`).

mod bipartite;
mod matching;

pub(crate) use bipartite::color_bipartite_edges;
pub use bipartite::{
    build_index_graph, edge_color_bipartite, Block, IndexedBipartiteMultigraph, SplitCopy,
    SplitGraph,
};
pub use matching::{equalize_matchings, MatchingPartition};

use crate::error::{precondition, Result};
use crate::model::SymbolVector;
use crate::verify::{are_pairwise_balanced, is_balanced};

fn check_h(h: u32) -> Result<()> {
    if h == 0 {
        return precondition("target alphabet size h must be positive");
    }
    Ok(())
}

fn color_row(split: &SplitGraph, h: u32) -> Result<SymbolVector> {
    let h = h as usize;
    let coloring = edge_color_bipartite(split, h)?;
    let coloring = equalize_matchings(&split.incidence(), coloring)?;
    let symbols = coloring.colors().iter().map(|&c| c as u32).collect();
    Ok(SymbolVector::from_raw(symbols, h as u32))
}

/// A balanced row over `Z_h` pairwise balanced with the balanced row `x`.
pub fn extend_balanced(x: &SymbolVector, h: u32) -> Result<SymbolVector> {
    extend_pairwise_balanced_pair(x, x, h)
}

/// A balanced row over `Z_h` pairwise balanced with each of the balanced rows
/// `x1` and `x2`; the inputs need not be pairwise balanced with each other.
pub fn extend_pairwise_balanced_pair(
    x1: &SymbolVector,
    x2: &SymbolVector,
    h: u32,
) -> Result<SymbolVector> {
    check_h(h)?;
    let g = build_index_graph(x1, x2)?;
    if !is_balanced(x1) || !is_balanced(x2) {
        return precondition("input rows must be balanced");
    }
    if h == 1 {
        return Ok(SymbolVector::constant(x1.len(), 1));
    }
    let split = SplitGraph::uniform(&g, h as usize)?;
    color_row(&split, h)
}

/// A balanced row `y` over `Z_h` with `(x1, x2, y)` 3-qualitatively
/// independent and `y` pairwise balanced with both inputs. Needs `x1`, `x2`
/// pairwise balanced and `g1 * g2 * h <= n`.
pub fn extend_3qi(x1: &SymbolVector, x2: &SymbolVector, h: u32) -> Result<SymbolVector> {
    check_h(h)?;
    let g = build_index_graph(x1, x2)?;
    let n = x1.len() as u64;
    let need = x1.alphabet() as u64 * x2.alphabet() as u64 * h as u64;
    if need > n {
        return precondition(format!("g1*g2*h = {need} exceeds n = {n}"));
    }
    if !are_pairwise_balanced(x1, x2)? {
        return precondition("input rows must be pairwise balanced");
    }
    if h == 1 {
        return Ok(SymbolVector::constant(x1.len(), 1));
    }
    let split = SplitGraph::with_blocks(&g, h as usize)?;
    color_row(&split, h)
}
