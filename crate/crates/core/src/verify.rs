//! Balance, pairwise balance and qualitative-independence predicates, and
//! full verification of a covering array against its hypergraph.

use crate::error::{Error, Result};
use crate::model::{CoveringArray, Edge, SymbolVector, VertexId, WeightedHypergraph};

fn within_floor_ceil(count: usize, n: usize, cells: usize) -> bool {
    let lo = n / cells;
    let hi = n.div_ceil(cells);
    (lo..=hi).contains(&count)
}

/// Every symbol of `Z_g` occurs `floor(n/g)` or `ceil(n/g)` times.
pub fn is_balanced(x: &SymbolVector) -> bool {
    let n = x.len();
    let g = x.alphabet() as usize;
    x.counts().into_iter().all(|c| within_floor_ceil(c, n, g))
}

/// Occurrence counts of every `(a, b)`, indexed `a * g2 + b`.
pub fn pair_counts(x1: &SymbolVector, x2: &SymbolVector) -> Result<Vec<usize>> {
    if x1.len() != x2.len() {
        return Err(Error::LengthMismatch(x1.len(), x2.len()));
    }
    let g2 = x2.alphabet() as usize;
    let mut counts = vec![0; x1.alphabet() as usize * g2];
    for (&a, &b) in x1.symbols().iter().zip(x2.symbols()) {
        counts[a as usize * g2 + b as usize] += 1;
    }
    Ok(counts)
}

/// Both rows balanced and every pair of `Z_{g1} x Z_{g2}` occurs
/// `floor(n/(g1 g2))` or `ceil(n/(g1 g2))` times.
pub fn are_pairwise_balanced(x1: &SymbolVector, x2: &SymbolVector) -> Result<bool> {
    let counts = pair_counts(x1, x2)?;
    let n = x1.len();
    let cells = counts.len();
    Ok(is_balanced(x1)
        && is_balanced(x2)
        && counts.into_iter().all(|c| within_floor_ceil(c, n, cells)))
}

/// Bitmap of the symbol tuples appearing in the columns of `rows`,
/// indexed in mixed radix with the first row most significant.
fn coverage(rows: &[&SymbolVector]) -> Vec<bool> {
    let cells: usize = rows.iter().map(|r| r.alphabet() as usize).product();
    let mut seen = vec![false; cells];
    for j in 0..rows[0].len() {
        let mut idx = 0usize;
        for r in rows {
            idx = idx * r.alphabet() as usize + r.get(j) as usize;
        }
        seen[idx] = true;
    }
    seen
}

fn decode_tuple(mut idx: usize, radices: &[u32]) -> Vec<u32> {
    let mut out = vec![0; radices.len()];
    for (slot, &r) in out.iter_mut().zip(radices).rev() {
        *slot = (idx % r as usize) as u32;
        idx /= r as usize;
    }
    out
}

/// Every tuple of the alphabet product appears in some column.
pub fn are_t_qualitatively_independent(rows: &[&SymbolVector], t: usize) -> Result<bool> {
    if !(2..=3).contains(&t) {
        return Err(Error::UnsupportedStrength(t));
    }
    if rows.len() != t {
        return Err(Error::Precondition(format!(
            "{t}-qualitative independence needs {t} rows, got {}",
            rows.len()
        )));
    }
    let n = rows[0].len();
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::LengthMismatch(n, r.len()));
    }
    Ok(coverage(rows).into_iter().all(|b| b))
}

/// Maximum over edges of the product of member weights.
pub fn product_weight(h: &WeightedHypergraph) -> Result<u64> {
    h.max_edge_product().ok_or(Error::Edgeless)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The rows of `edge` never show `tuple` (listed in edge vertex order).
    MissingTuple { edge: Edge, tuple: Vec<u32> },
    /// Symbol counts of the row fall outside `floor(n/g)..=ceil(n/g)`.
    UnbalancedRow {
        vertex: VertexId,
        counts: Vec<usize>,
    },
    /// Two rows sharing an edge are not pairwise balanced.
    UnbalancedPair { pair: (VertexId, VertexId) },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn missing_tuples(&self) -> usize {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::MissingTuple { .. }))
            .count()
    }
}

/// Checks coverage of every edge; with `balanced` also checks that every row
/// is balanced and that rows sharing an edge are pairwise balanced.
///
/// Defects are collected rather than returned as errors.
pub fn verify_covering_array(ca: &CoveringArray, balanced: bool) -> VerificationReport {
    let mut violations = Vec::new();
    let h = ca.hypergraph();
    let row = |v: VertexId| ca.row(v).expect("array has a row for every vertex");

    for edge in h.edges() {
        let rows: Vec<&SymbolVector> = edge.vertices().iter().map(|&v| row(v)).collect();
        let radices: Vec<u32> = rows.iter().map(|r| r.alphabet()).collect();
        for (idx, hit) in coverage(&rows).into_iter().enumerate() {
            if !hit {
                violations.push(Violation::MissingTuple {
                    edge: edge.clone(),
                    tuple: decode_tuple(idx, &radices),
                });
            }
        }
    }

    if balanced {
        for (&v, r) in ca.rows() {
            if !is_balanced(r) {
                violations.push(Violation::UnbalancedRow {
                    vertex: v,
                    counts: r.counts(),
                });
            }
        }
        let mut pairs = std::collections::BTreeSet::new();
        for edge in h.edges() {
            let vs = edge.vertices();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    pairs.insert((vs[i], vs[j]));
                }
            }
        }
        for (a, b) in pairs {
            let pb = are_pairwise_balanced(row(a), row(b)).expect("rows share length");
            if !pb {
                violations.push(Violation::UnbalancedPair { pair: (a, b) });
            }
        }
    }

    VerificationReport { violations }
}
