//! A balanced row `y` over `Z_h` that is 3-qualitatively independent of two
//! rows `x1`, `x2` and pairwise balanced with a third row `x3` as well.
//!
//! The three rows define a tripartite multi-hypergraph (one hyperedge per
//! column). Splitting its vertices into copies of degree at most `h` gives a
//! balanced hypergraph, whose hyperedges fall into `h` matchings; the matching
//! index of hyperedge `i` is `y(i)`.

mod balanced;
mod decompose;
mod multi;
mod split;

pub use balanced::{is_balanced_hypergraph, BalanceCheck, MAX_COLORING_VERTICES};
pub use decompose::{decompose_into_matchings, DEFAULT_DECOMPOSE_BUDGET};
pub use multi::MultiHypergraph;
pub use split::{
    build_tripartite, split_tripartite, BlockKey, CopyRole, IndexedTripartiteHypergraph, Part,
    SplitVertex, TripartiteSplit,
};

use crate::error::{Error, Result};
use crate::extension::{color_bipartite_edges, equalize_matchings, MatchingPartition};
use crate::model::SymbolVector;

/// Colours the split with `h` matchings. The exact search runs first; if it
/// hits its budget the split's bipartite quotient is edge-coloured instead.
fn matchings_of(split: &TripartiteSplit) -> Result<MatchingPartition> {
    let h = split.h();
    match decompose_into_matchings(&split.hypergraph(), h, DEFAULT_DECOMPOSE_BUDGET) {
        Err(Error::BudgetExceeded(_)) => {
            let ends = split.quotient_edges();
            Ok(color_bipartite_edges(&ends, split.vertices().len(), h))
        }
        other => other,
    }
}

/// Requires `x1, x2, x3` mutually pairwise balanced and 3-qualitatively
/// independent, `h <= min(floor(n/g1g2), floor(n/g1g3))`, and for `h >= 3`
/// that `h` divides `floor(n/g1g2)`.
pub fn extend_3qi_constrained(
    x1: &SymbolVector,
    x2: &SymbolVector,
    x3: &SymbolVector,
    h: u32,
) -> Result<SymbolVector> {
    let g = build_tripartite(x1, x2, x3)?;
    if h == 1 {
        split::check_split_preconditions(&g.rows(), 1)?;
        return Ok(SymbolVector::constant(x1.len(), 1));
    }
    let split = split_tripartite(&g, h as usize)?;
    let partition = matchings_of(&split)?;
    let quotient: Vec<Vec<usize>> = split
        .quotient_edges()
        .into_iter()
        .map(|(q, r)| vec![q, r])
        .collect();
    let partition = equalize_matchings(&quotient, partition)?;
    let symbols = partition.colors().iter().map(|&c| c as u32).collect();
    Ok(SymbolVector::from_raw(symbols, h))
}
