//! Exact partition of hyperedges into a fixed number of matchings.

use crate::error::{precondition, Error, Result};
use crate::extension::MatchingPartition;
use crate::tripartite::MultiHypergraph;

pub const DEFAULT_DECOMPOSE_BUDGET: u64 = 5_000_000;

/// Partitions the hyperedges of `h` into `delta` matchings (some possibly
/// empty) by backtracking.
///
/// Hyperedges are coloured in DSATUR order: fewest remaining colours first,
/// then most uncoloured neighbours, then lowest id. Each assignment is
/// forward-checked against the uncoloured neighbours, and a fresh colour is
/// only tried once (colours are interchangeable). The search is complete, so
/// `SearchExhausted` means no partition exists; `BudgetExceeded` means it
/// gave up after `budget` nodes.
pub fn decompose_into_matchings(
    h: &MultiHypergraph,
    delta: usize,
    budget: u64,
) -> Result<MatchingPartition> {
    if delta == 0 {
        return precondition("number of matchings must be positive");
    }
    let found = h.max_degree();
    if found > delta {
        return Err(Error::DegreeBound {
            found,
            bound: delta,
        });
    }
    let m = h.edges().len();
    let incidence = h.incidence();
    let neighbours: Vec<Vec<usize>> = (0..m)
        .map(|e| {
            let mut n: Vec<usize> = h.edges()[e]
                .iter()
                .flat_map(|&v| incidence[v].iter().copied())
                .filter(|&f| f != e)
                .collect();
            n.sort_unstable();
            n.dedup();
            n
        })
        .collect();
    let mut search = Search {
        neighbours: &neighbours,
        delta,
        color: vec![None; m],
        blocked: vec![vec![0; delta]; m],
        free: vec![delta; m],
        nodes: 0,
        budget,
    };
    if search.run(0, 0)? {
        let colors = search.color.into_iter().map(|c| c.unwrap()).collect();
        Ok(MatchingPartition::new(colors, delta))
    } else {
        Err(Error::SearchExhausted(delta))
    }
}

struct Search<'a> {
    neighbours: &'a [Vec<usize>],
    delta: usize,
    color: Vec<Option<usize>>,
    /// `blocked[e][c]`: coloured neighbours of `e` holding colour `c`
    blocked: Vec<Vec<u32>>,
    free: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn pick(&self) -> Option<usize> {
        let uncolored_deg = |e: usize| {
            self.neighbours[e]
                .iter()
                .filter(|&&f| self.color[f].is_none())
                .count()
        };
        (0..self.color.len())
            .filter(|&e| self.color[e].is_none())
            .min_by_key(|&e| (self.free[e], std::cmp::Reverse(uncolored_deg(e)), e))
    }

    fn assign(&mut self, e: usize, c: usize) -> bool {
        self.color[e] = Some(c);
        let mut ok = true;
        for &f in &self.neighbours[e] {
            if self.color[f].is_some() {
                continue;
            }
            self.blocked[f][c] += 1;
            if self.blocked[f][c] == 1 {
                self.free[f] -= 1;
                if self.free[f] == 0 {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, e: usize, c: usize) {
        for &f in &self.neighbours[e] {
            if self.color[f].is_some() {
                continue;
            }
            self.blocked[f][c] -= 1;
            if self.blocked[f][c] == 0 {
                self.free[f] += 1;
            }
        }
        self.color[e] = None;
    }

    /// `used`: colours `0..used` have appeared so far.
    fn run(&mut self, colored: usize, used: usize) -> Result<bool> {
        if colored == self.color.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let e = self.pick().expect("uncoloured edge remains");
        let limit = (used + 1).min(self.delta);
        for c in 0..limit {
            if self.blocked[e][c] > 0 {
                continue;
            }
            let ok = self.assign(e, c);
            if ok && self.run(colored + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.unassign(e, c);
        }
        Ok(false)
    }
}
