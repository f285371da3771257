//! Domain types: symbol rows, weighted hypergraphs and covering arrays bound to them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = u32;

/// A length-`n` row over the alphabet `Z_g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolVector {
    symbols: Vec<u32>,
    alphabet: u32,
}

impl SymbolVector {
    pub fn new(symbols: Vec<u32>, alphabet: u32) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::Precondition("alphabet size must be positive".into()));
        }
        if symbols.is_empty() {
            return Err(Error::Precondition(
                "symbol vector must be non-empty".into(),
            ));
        }
        if let Some((column, &symbol)) = symbols.iter().enumerate().find(|(_, &s)| s >= alphabet) {
            return Err(Error::SymbolOutOfRange {
                symbol,
                column,
                alphabet,
            });
        }
        Ok(SymbolVector { symbols, alphabet })
    }

    /// The all-zero row, the only row over `Z_1`.
    pub fn constant(n: usize, alphabet: u32) -> Self {
        assert!(n > 0 && alphabet > 0);
        SymbolVector {
            symbols: vec![0; n],
            alphabet,
        }
    }

    /// `(0, 1, .., g-1, 0, 1, ..)` truncated to `n` columns; always balanced.
    pub fn cyclic(n: usize, alphabet: u32) -> Self {
        assert!(n > 0 && alphabet > 0);
        SymbolVector {
            symbols: (0..n).map(|i| (i % alphabet as usize) as u32).collect(),
            alphabet,
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn get(&self, column: usize) -> u32 {
        self.symbols[column]
    }

    /// Occurrence count of every symbol of the alphabet.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet as usize];
        for &s in &self.symbols {
            counts[s as usize] += 1;
        }
        counts
    }

    /// Column indices holding `symbol`, ascending.
    pub fn class(&self, symbol: u32) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == symbol)
            .map(|(i, _)| i)
            .collect()
    }

    /// Reorders columns so that new column `j` is old column `perm[j]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len());
        SymbolVector {
            symbols: perm.iter().map(|&j| self.symbols[j]).collect(),
            alphabet: self.alphabet,
        }
    }

    pub(crate) fn from_raw(symbols: Vec<u32>, alphabet: u32) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < alphabet));
        SymbolVector { symbols, alphabet }
    }
}

/// A hyperedge: a sorted set of two or three vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vec<VertexId>);

impl Edge {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        let len = v.len();
        v.sort_unstable();
        v.dedup();
        if v.len() != len {
            return Err(Error::InvalidHypergraph(format!(
                "edge {v:?} repeats a vertex"
            )));
        }
        if !(2..=3).contains(&v.len()) {
            return Err(Error::InvalidHypergraph(format!(
                "edge {v:?} must have 2 or 3 vertices"
            )));
        }
        Ok(Edge(v))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Edge) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A vertex-weighted hypergraph with edges of size 2 or 3.
///
/// Vertices not covered by any edge are allowed; construction pipelines pass
/// through such intermediates. Duplicate edges are rejected, edges contained
/// in other edges are allowed and reported by [`WeightedHypergraph::subset_edges`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightedHypergraph {
    weights: BTreeMap<VertexId, u32>,
    edges: Vec<Edge>,
}

impl WeightedHypergraph {
    pub fn new(
        vertices: impl IntoIterator<Item = (VertexId, u32)>,
        edges: impl IntoIterator<Item = Vec<VertexId>>,
    ) -> Result<Self> {
        let mut h = WeightedHypergraph::default();
        for (id, w) in vertices {
            h.add_vertex(id, w)?;
        }
        for e in edges {
            h.add_edge(e)?;
        }
        Ok(h)
    }

    pub fn add_vertex(&mut self, id: VertexId, weight: u32) -> Result<()> {
        if weight == 0 {
            return Err(Error::InvalidHypergraph(format!(
                "vertex {id} has weight 0"
            )));
        }
        if self.weights.insert(id, weight).is_some() {
            return Err(Error::InvalidHypergraph(format!(
                "vertex {id} declared twice"
            )));
        }
        Ok(())
    }

    /// Adds an edge and returns its index.
    pub fn add_edge(&mut self, vertices: Vec<VertexId>) -> Result<usize> {
        let edge = Edge::new(vertices)?;
        if let Some(&v) = edge
            .vertices()
            .iter()
            .find(|v| !self.weights.contains_key(v))
        {
            return Err(Error::InvalidHypergraph(format!(
                "edge {edge} names unknown vertex {v}"
            )));
        }
        if self.edges.contains(&edge) {
            return Err(Error::InvalidHypergraph(format!("duplicate edge {edge}")));
        }
        self.edges.push(edge);
        Ok(self.edges.len() - 1)
    }

    /// Removes an edge if present; returns whether it was there.
    pub fn remove_edge(&mut self, edge: &Edge) -> bool {
        match self.edges.iter().position(|e| e == edge) {
            Some(i) => {
                self.edges.remove(i);
                true
            }
            None => false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.weights.iter().map(|(&v, &w)| (v, w))
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.weights.keys().copied()
    }

    pub fn weight(&self, v: VertexId) -> Option<u32> {
        self.weights.get(&v).copied()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.weights.contains_key(&v)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, edge: &Edge) -> bool {
        self.edges.contains(edge)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Product of member weights of one edge.
    pub fn edge_product(&self, edge: &Edge) -> u64 {
        edge.vertices()
            .iter()
            .map(|&v| self.weights[&v] as u64)
            .product()
    }

    /// Maximum edge product, `None` for an edgeless hypergraph.
    pub fn max_edge_product(&self) -> Option<u64> {
        self.edges.iter().map(|e| self.edge_product(e)).max()
    }

    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        let covered: BTreeSet<VertexId> = self
            .edges
            .iter()
            .flat_map(|e| e.vertices().iter().copied())
            .collect();
        self.vertex_ids().filter(|v| !covered.contains(v)).collect()
    }

    /// Pairs `(i, j)` of edge indices with `E_i` a proper subset of `E_j`.
    pub fn subset_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.edges.iter().enumerate() {
            for (j, b) in self.edges.iter().enumerate() {
                if i != j && a.len() < b.len() && a.is_subset_of(b) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// No edge is contained in another.
    pub fn is_simple(&self) -> bool {
        self.subset_edges().is_empty()
    }

    pub fn is_three_uniform(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 3)
    }

    /// True if some edge contains every vertex of `set`.
    pub fn covers(&self, set: &[VertexId]) -> bool {
        self.edges
            .iter()
            .any(|e| set.iter().all(|&v| e.contains(v)))
    }
}

/// A covering-array candidate: one row per vertex of its hypergraph, all of
/// common length `n`, the row of vertex `v` over `Z_{w(v)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringArray {
    hypergraph: WeightedHypergraph,
    size: usize,
    rows: BTreeMap<VertexId, SymbolVector>,
}

impl CoveringArray {
    pub fn new(
        hypergraph: WeightedHypergraph,
        rows: BTreeMap<VertexId, SymbolVector>,
    ) -> Result<Self> {
        let size = match rows.values().next() {
            Some(r) => r.len(),
            None => return Err(Error::InvalidArray("array has no rows".into())),
        };
        for (v, w) in hypergraph.vertices() {
            let row = rows
                .get(&v)
                .ok_or_else(|| Error::InvalidArray(format!("no row for vertex {v}")))?;
            if row.len() != size {
                return Err(Error::LengthMismatch(size, row.len()));
            }
            if row.alphabet() != w {
                return Err(Error::InvalidArray(format!(
                    "row {v} has alphabet {} but vertex weight is {w}",
                    row.alphabet()
                )));
            }
        }
        if let Some(v) = rows.keys().find(|v| !hypergraph.contains_vertex(**v)) {
            return Err(Error::InvalidArray(format!(
                "row {v} has no vertex in the hypergraph"
            )));
        }
        Ok(CoveringArray {
            hypergraph,
            size,
            rows,
        })
    }

    pub fn hypergraph(&self) -> &WeightedHypergraph {
        &self.hypergraph
    }

    /// Number of columns `n`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, v: VertexId) -> Option<&SymbolVector> {
        self.rows.get(&v)
    }

    pub fn rows(&self) -> &BTreeMap<VertexId, SymbolVector> {
        &self.rows
    }

    pub fn into_parts(self) -> (WeightedHypergraph, BTreeMap<VertexId, SymbolVector>) {
        (self.hypergraph, self.rows)
    }

    /// Rebinds the rows of `hypergraph`'s vertices to `hypergraph`, dropping the rest.
    pub fn restrict_to(&self, hypergraph: &WeightedHypergraph) -> Result<CoveringArray> {
        let rows = hypergraph
            .vertex_ids()
            .map(|v| {
                self.rows
                    .get(&v)
                    .cloned()
                    .map(|r| (v, r))
                    .ok_or_else(|| Error::InvalidArray(format!("no row for vertex {v}")))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        CoveringArray::new(hypergraph.clone(), rows)
    }

    /// Applies one column permutation to every row.
    pub fn permute_columns(&self, perm: &[usize]) -> CoveringArray {
        CoveringArray {
            hypergraph: self.hypergraph.clone(),
            size: self.size,
            rows: self
                .rows
                .iter()
                .map(|(&v, r)| (v, r.permuted(perm)))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_vector_rejects_out_of_range() {
        assert!(matches!(
            SymbolVector::new(vec![0, 2], 2),
            Err(Error::SymbolOutOfRange { column: 1, .. })
        ));
        assert!(SymbolVector::new(vec![], 2).is_err());
        assert!(SymbolVector::new(vec![0], 0).is_err());
    }

    #[test]
    fn cyclic_row_counts() {
        let x = SymbolVector::cyclic(7, 3);
        assert_eq!(x.symbols(), &[0, 1, 2, 0, 1, 2, 0]);
        assert_eq!(x.counts(), vec![3, 2, 2]);
    }

    #[test]
    fn duplicate_edges_rejected_subsets_flagged() {
        let mut h = WeightedHypergraph::new([(1, 2), (2, 2), (3, 2)], [vec![1, 2, 3]]).unwrap();
        assert!(h.add_edge(vec![3, 2, 1]).is_err());
        assert!(h.add_edge(vec![1, 9]).is_err());
        h.add_edge(vec![1, 2]).unwrap();
        assert_eq!(h.subset_edges(), vec![(1, 0)]);
        assert!(!h.is_simple());
    }

    #[test]
    fn array_checks_alphabet_against_weight() {
        let h = WeightedHypergraph::new([(1, 2), (2, 3)], [vec![1, 2]]).unwrap();
        let mut rows = BTreeMap::new();
        rows.insert(1, SymbolVector::cyclic(6, 2));
        rows.insert(2, SymbolVector::cyclic(6, 2));
        assert!(CoveringArray::new(h.clone(), rows.clone()).is_err());
        rows.insert(2, SymbolVector::cyclic(6, 3));
        assert!(CoveringArray::new(h, rows).is_ok());
    }
}
