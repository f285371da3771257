//! Balancedness of hypergraphs at desk scale.
//!
//! A hypergraph is balanced when every odd cycle `(v_1, E_1, .., v_k, E_k, v_1)`
//! has an edge `E_i` holding at least three vertices of the cycle; equivalently
//! every induced subhypergraph is 2-colourable. Both characterisations are
//! implemented as exact exponential searches with explicit size limits.

use crate::error::{Error, Result};
use crate::tripartite::MultiHypergraph;

/// Which characterisation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BalanceCheck {
    /// Search for an odd cycle whose edges each meet the cycle in exactly two
    /// vertices, giving up after `max_nodes` search nodes.
    OddCycles { max_nodes: u64 },
    /// 2-colour every induced subhypergraph; limited to `MAX_COLORING_VERTICES`.
    TwoColoring,
}

impl Default for BalanceCheck {
    fn default() -> Self {
        BalanceCheck::OddCycles {
            max_nodes: 10_000_000,
        }
    }
}

pub const MAX_COLORING_VERTICES: usize = 16;

pub fn is_balanced_hypergraph(h: &MultiHypergraph, check: BalanceCheck) -> Result<bool> {
    match check {
        BalanceCheck::OddCycles { max_nodes } => {
            let mut search = CycleSearch::new(h, max_nodes);
            Ok(!search.find_bad_cycle()?)
        }
        BalanceCheck::TwoColoring => all_induced_two_colorable(h),
    }
}

struct CycleSearch<'a> {
    edges: &'a [Vec<usize>],
    incidence: Vec<Vec<usize>>,
    on_path: Vec<bool>,
    edge_used: Vec<bool>,
    path_edges: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl<'a> CycleSearch<'a> {
    fn new(h: &'a MultiHypergraph, max_nodes: u64) -> Self {
        CycleSearch {
            edges: h.edges(),
            incidence: h.incidence(),
            on_path: vec![false; h.vertex_count()],
            edge_used: vec![false; h.edges().len()],
            path_edges: Vec::new(),
            nodes: 0,
            max_nodes,
        }
    }

    fn find_bad_cycle(&mut self) -> Result<bool> {
        for start in 0..self.on_path.len() {
            self.on_path[start] = true;
            let found = self.extend(start, start, 1)?;
            self.on_path[start] = false;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `tip` is `v_j` with `j = len` path vertices placed; the start vertex
    /// is the smallest vertex of the cycle.
    fn extend(&mut self, start: usize, tip: usize, len: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::TooLarge(format!(
                "odd-cycle search exceeded {} nodes",
                self.max_nodes
            )));
        }
        for ei in 0..self.incidence[tip].len() {
            let e = self.incidence[tip][ei];
            if self.edge_used[e] {
                continue;
            }
            let on_path: Vec<usize> = self.edges[e]
                .iter()
                .copied()
                .filter(|&v| self.on_path[v])
                .collect();
            let closes = len >= 3 && len % 2 == 1 && on_path.len() == 2 && on_path.contains(&start);
            if closes {
                return Ok(true);
            }
            if on_path.len() != 1 {
                continue;
            }
            self.edge_used[e] = true;
            self.path_edges.push(e);
            for vi in 0..self.edges[e].len() {
                let next = self.edges[e][vi];
                if next <= start || self.on_path[next] {
                    continue;
                }
                // an earlier path edge holding `next` would meet the cycle three times
                let earlier = &self.path_edges[..self.path_edges.len() - 1];
                if earlier.iter().any(|&f| self.edges[f].contains(&next)) {
                    continue;
                }
                self.on_path[next] = true;
                let found = self.extend(start, next, len + 1)?;
                self.on_path[next] = false;
                if found {
                    self.path_edges.pop();
                    self.edge_used[e] = false;
                    return Ok(true);
                }
            }
            self.path_edges.pop();
            self.edge_used[e] = false;
        }
        Ok(false)
    }
}

fn all_induced_two_colorable(h: &MultiHypergraph) -> Result<bool> {
    let nv = h.vertex_count();
    if nv > MAX_COLORING_VERTICES {
        return Err(Error::TooLarge(format!(
            "2-colouring check is limited to {MAX_COLORING_VERTICES} vertices, got {nv}"
        )));
    }
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    for subset in 1u32..(1u32 << nv) {
        let mut induced: Vec<u32> = masks
            .iter()
            .map(|m| m & subset)
            .filter(|m| m.count_ones() >= 2)
            .collect();
        induced.sort_unstable();
        induced.dedup();
        if !two_colorable(subset, &induced) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is there a red/blue split of `vertices` leaving no edge monochromatic?
fn two_colorable(vertices: u32, edges: &[u32]) -> bool {
    let order: Vec<u32> = (0..32).filter(|v| vertices & (1 << v) != 0).collect();
    fn go(order: &[u32], k: usize, red: u32, assigned: u32, edges: &[u32]) -> bool {
        for &e in edges {
            if e & assigned == e {
                let r = e & red;
                if r == 0 || r == e {
                    return false;
                }
            }
        }
        if k == order.len() {
            return true;
        }
        let bit = 1 << order[k];
        // the first vertex may be fixed red
        if go(order, k + 1, red | bit, assigned | bit, edges) {
            return true;
        }
        k > 0 && go(order, k + 1, red, assigned | bit, edges)
    }
    go(&order, 0, 0, 0, edges)
}
