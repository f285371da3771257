use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::model::{VertexId, WeightedHypergraph};

/// A simple undirected graph on vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adjacency: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl SimpleGraph {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: VertexId) -> Option<&BTreeSet<VertexId>> {
        self.adjacency.get(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.adjacency
            .iter()
            .flat_map(|(&u, n)| n.range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    /// All maximal cliques, by Bron–Kerbosch with Tomita pivoting.
    pub fn maximal_cliques(&self) -> Vec<BTreeSet<VertexId>> {
        let mut out = Vec::new();
        let p: BTreeSet<VertexId> = self.adjacency.keys().copied().collect();
        self.bron_kerbosch(BTreeSet::new(), p, BTreeSet::new(), &mut out);
        out
    }

    fn bron_kerbosch(
        &self,
        r: BTreeSet<VertexId>,
        mut p: BTreeSet<VertexId>,
        mut x: BTreeSet<VertexId>,
        out: &mut Vec<BTreeSet<VertexId>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = *p
            .union(&x)
            .max_by_key(|&&u| p.intersection(&self.adjacency[&u]).count())
            .expect("p or x nonempty");
        let candidates: Vec<VertexId> = p.difference(&self.adjacency[&pivot]).copied().collect();
        for v in candidates {
            let nv = &self.adjacency[&v];
            let mut r2 = r.clone();
            r2.insert(v);
            self.bron_kerbosch(
                r2,
                p.intersection(nv).copied().collect(),
                x.intersection(nv).copied().collect(),
                out,
            );
            p.remove(&v);
            x.insert(v);
        }
    }
}

/// The graph joining every two vertices that share an edge of `h`; isolated
/// vertices of `h` are kept.
pub fn two_section(h: &WeightedHypergraph) -> SimpleGraph {
    let mut adjacency: BTreeMap<VertexId, BTreeSet<VertexId>> =
        h.vertex_ids().map(|v| (v, BTreeSet::new())).collect();
    for e in h.edges() {
        for &u in e.vertices() {
            for &v in e.vertices() {
                if u != v {
                    adjacency.get_mut(&u).unwrap().insert(v);
                }
            }
        }
    }
    SimpleGraph { adjacency }
}

pub const MAX_CONFORMAL_VERTICES: usize = 64;

/// Every maximal clique (of two or more vertices) of the 2-section lies in an edge.
pub fn is_conformal(h: &WeightedHypergraph) -> Result<bool> {
    if h.vertex_count() > MAX_CONFORMAL_VERTICES {
        return Err(Error::TooLarge(format!(
            "clique enumeration is limited to {MAX_CONFORMAL_VERTICES} vertices, got {}",
            h.vertex_count()
        )));
    }
    Ok(two_section(h)
        .maximal_cliques()
        .into_iter()
        .filter(|c| c.len() >= 2)
        .all(|c| h.covers(&c.into_iter().collect::<Vec<_>>())))
}
