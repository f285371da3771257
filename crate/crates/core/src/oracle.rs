//! Exhaustive search for covering arrays on small weighted hypergraphs.
//!
//! A column is a mixed-radix number over the rows that lie in some edge.
//! Any covering array of size at most `n` contains an irredundant cover (each
//! column covers a tuple no other column covers); relabelling the symbols of
//! the leading row and sorting the columns keeps it irredundant. The search
//! therefore only visits nondecreasing column sequences in which every
//! column covers a new tuple and the leading row's symbol counts do not
//! increase, then pads the result to `n` columns.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{CoveringArray, SymbolVector, VertexId, WeightedHypergraph};

pub const DEFAULT_ORACLE_BUDGET: u64 = 100_000_000;
const MAX_COLUMNS: usize = 1 << 20;

/// Result of a completed search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(CoveringArray),
    /// The search space was exhausted: no covering array of this size exists.
    Infeasible,
}

struct Problem {
    /// rows in search order, leading row first
    order: Vec<VertexId>,
    radix: Vec<u64>,
    columns: usize,
    /// `tuple_of[c][e]`: index of the tuple column `c` covers in edge `e`
    tuple_of: Vec<Vec<u32>>,
    tuple_counts: Vec<usize>,
    /// `reach[e][t]`: largest column index covering tuple `t` of edge `e`
    reach: Vec<Vec<usize>>,
    lead_weight: u64,
}

impl Problem {
    fn new(h: &WeightedHypergraph) -> Result<Problem> {
        if h.edges().is_empty() {
            return Err(Error::Edgeless);
        }
        let mut order: Vec<VertexId> = h.vertex_ids().filter(|&v| h.degree(v) > 0).collect();
        let lead = *order
            .iter()
            .max_by_key(|&&v| (h.weight(v).unwrap(), std::cmp::Reverse(v)))
            .unwrap();
        order.retain(|&v| v != lead);
        order.insert(0, lead);
        let radix: Vec<u64> = order.iter().map(|&v| h.weight(v).unwrap() as u64).collect();
        let columns = radix.iter().try_fold(1usize, |acc, &r| {
            acc.checked_mul(r as usize).filter(|&c| c <= MAX_COLUMNS)
        });
        let columns = columns.ok_or_else(|| {
            Error::TooLarge(format!("column space exceeds {MAX_COLUMNS} candidates"))
        })?;
        let pos: BTreeMap<VertexId, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let digits = |c: usize| -> Vec<u64> {
            let mut d = vec![0; radix.len()];
            let mut c = c as u64;
            for i in (0..radix.len()).rev() {
                d[i] = c % radix[i];
                c /= radix[i];
            }
            d
        };
        let edge_pos: Vec<Vec<usize>> = h
            .edges()
            .iter()
            .map(|e| e.vertices().iter().map(|v| pos[v]).collect())
            .collect();
        let tuple_counts: Vec<usize> = edge_pos
            .iter()
            .map(|p| p.iter().map(|&i| radix[i] as usize).product())
            .collect();
        let mut tuple_of = Vec::with_capacity(columns);
        let mut reach: Vec<Vec<usize>> = tuple_counts.iter().map(|&t| vec![0; t]).collect();
        for c in 0..columns {
            let d = digits(c);
            let ts: Vec<u32> = edge_pos
                .iter()
                .map(|p| p.iter().fold(0u64, |acc, &i| acc * radix[i] + d[i]) as u32)
                .collect();
            for (e, &t) in ts.iter().enumerate() {
                reach[e][t as usize] = c;
            }
            tuple_of.push(ts);
        }
        Ok(Problem {
            lead_weight: radix[0],
            order,
            radix,
            columns,
            tuple_of,
            tuple_counts,
            reach,
        })
    }

    fn lead_symbol(&self, c: usize) -> u64 {
        c as u64 / (self.columns as u64 / self.lead_weight)
    }

    fn digits(&self, c: usize) -> Vec<u32> {
        let mut d = vec![0; self.radix.len()];
        let mut c = c as u64;
        for i in (0..self.radix.len()).rev() {
            d[i] = (c % self.radix[i]) as u32;
            c /= self.radix[i];
        }
        d
    }
}

struct Search<'a> {
    p: &'a Problem,
    n: usize,
    covered: Vec<Vec<u16>>,
    uncovered: Vec<usize>,
    chosen: Vec<usize>,
    lead_counts: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn push(&mut self, c: usize) {
        for (e, &t) in self.p.tuple_of[c].iter().enumerate() {
            let slot = &mut self.covered[e][t as usize];
            if *slot == 0 {
                self.uncovered[e] -= 1;
            }
            *slot += 1;
        }
        self.lead_counts[self.p.lead_symbol(c) as usize] += 1;
        self.chosen.push(c);
    }

    fn pop(&mut self) {
        let c = self.chosen.pop().unwrap();
        for (e, &t) in self.p.tuple_of[c].iter().enumerate() {
            let slot = &mut self.covered[e][t as usize];
            *slot -= 1;
            if *slot == 0 {
                self.uncovered[e] += 1;
            }
        }
        self.lead_counts[self.p.lead_symbol(c) as usize] -= 1;
    }

    fn covers_new(&self, c: usize) -> bool {
        self.p.tuple_of[c]
            .iter()
            .enumerate()
            .any(|(e, &t)| self.covered[e][t as usize] == 0)
    }

    /// Every uncovered tuple can still be covered by a column `>= from`, and
    /// no edge needs more tuples than columns remain.
    fn viable(&self, from: usize) -> bool {
        let left = self.n - self.chosen.len();
        if self.uncovered.iter().any(|&u| u > left) {
            return false;
        }
        self.covered.iter().enumerate().all(|(e, cov)| {
            cov.iter()
                .enumerate()
                .all(|(t, &k)| k > 0 || self.p.reach[e][t] >= from)
        })
    }

    fn lead_ok(&self, c: usize) -> bool {
        let s = self.p.lead_symbol(c) as usize;
        let cur = self
            .chosen
            .last()
            .map_or(0, |&l| self.p.lead_symbol(l) as usize);
        if self.chosen.is_empty() {
            return s == 0;
        }
        if s == cur {
            // counts must not increase across symbols
            return s == 0 || self.lead_counts[s] < self.lead_counts[s - 1];
        }
        s == cur + 1
    }

    fn run(&mut self) -> Result<bool> {
        if self.uncovered.iter().all(|&u| u == 0) {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if self.chosen.len() == self.n {
            return Ok(false);
        }
        let from = self.chosen.last().copied().unwrap_or(0);
        if !self.viable(from) {
            return Ok(false);
        }
        for c in from..self.p.columns {
            if !self.lead_ok(c) || !self.covers_new(c) {
                continue;
            }
            self.push(c);
            if self.run()? {
                return Ok(true);
            }
            self.pop();
        }
        Ok(false)
    }
}

fn search(
    h: &WeightedHypergraph,
    p: &Problem,
    n: usize,
    budget: &mut u64,
) -> Result<SearchOutcome> {
    let mut s = Search {
        p,
        n,
        covered: p.tuple_counts.iter().map(|&t| vec![0; t]).collect(),
        uncovered: p.tuple_counts.clone(),
        chosen: Vec::new(),
        lead_counts: vec![0; p.lead_weight as usize],
        nodes: 0,
        budget: *budget,
    };
    let found = s.run();
    *budget = budget.saturating_sub(s.nodes);
    if !found? {
        return Ok(SearchOutcome::Infeasible);
    }
    let mut cols = s.chosen.clone();
    let pad = *cols.last().unwrap_or(&0);
    cols.resize(n, pad);
    let digits: Vec<Vec<u32>> = cols.iter().map(|&c| p.digits(c)).collect();
    let mut rows = BTreeMap::new();
    for (v, w) in h.vertices() {
        let symbols = match p.order.iter().position(|&x| x == v) {
            Some(i) => digits.iter().map(|d| d[i]).collect(),
            None => vec![0; n],
        };
        rows.insert(v, SymbolVector::new(symbols, w)?);
    }
    Ok(SearchOutcome::Found(CoveringArray::new(h.clone(), rows)?))
}

/// Decides whether a covering array with `n` columns exists on `h`, within
/// `budget` search nodes.
pub fn exists_ca_of_size(h: &WeightedHypergraph, n: usize, budget: u64) -> Result<SearchOutcome> {
    if n == 0 {
        return Ok(SearchOutcome::Infeasible);
    }
    let p = Problem::new(h)?;
    let mut budget = budget;
    search(h, &p, n, &mut budget)
}

/// The smallest covering array with `PW(h) <= n <= max_n`, or `None` if there
/// is none up to `max_n`; `budget` bounds the total search nodes over all
/// sizes tried.
pub fn min_array(
    h: &WeightedHypergraph,
    max_n: Option<usize>,
    budget: u64,
) -> Result<Option<CoveringArray>> {
    let p = Problem::new(h)?;
    let pw = h.max_edge_product().ok_or(Error::Edgeless)? as usize;
    let mut left = budget;
    for n in pw.. {
        if max_n.is_some_and(|m| n > m) {
            break;
        }
        match search(h, &p, n, &mut left) {
            Ok(SearchOutcome::Found(ca)) => return Ok(Some(ca)),
            Ok(SearchOutcome::Infeasible) => {}
            Err(Error::BudgetExceeded(_)) => return Err(Error::BudgetExceeded(budget)),
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// The smallest `n >= PW(h)` admitting a covering array.
pub fn min_can(h: &WeightedHypergraph, budget: u64) -> Result<usize> {
    Ok(min_array(h, None, budget)?
        .expect("unbounded search ends in success")
        .size())
}
