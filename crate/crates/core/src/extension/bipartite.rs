//! The column-indexed bipartite multigraph of two rows, its degree-`h`
//! splittings, and Δ-edge-colouring of bipartite multigraphs.

use crate::error::{precondition, Error, Result};
use crate::extension::matching::MatchingPartition;
use crate::model::SymbolVector;

/// Left classes `P_a = {i : x1(i) = a}`, right classes `Q_b = {i : x2(i) = b}`
/// and one edge per column `i` joining `P_{x1(i)}` to `Q_{x2(i)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedBipartiteMultigraph {
    g1: u32,
    g2: u32,
    edges: Vec<(u32, u32)>,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

pub fn build_index_graph(
    x1: &SymbolVector,
    x2: &SymbolVector,
) -> Result<IndexedBipartiteMultigraph> {
    if x1.len() != x2.len() {
        return Err(Error::LengthMismatch(x1.len(), x2.len()));
    }
    let (g1, g2) = (x1.alphabet(), x2.alphabet());
    let mut left = vec![Vec::new(); g1 as usize];
    let mut right = vec![Vec::new(); g2 as usize];
    let mut edges = Vec::with_capacity(x1.len());
    for (i, (&a, &b)) in x1.symbols().iter().zip(x2.symbols()).enumerate() {
        left[a as usize].push(i);
        right[b as usize].push(i);
        edges.push((a, b));
    }
    Ok(IndexedBipartiteMultigraph {
        g1,
        g2,
        edges,
        left,
        right,
    })
}

impl IndexedBipartiteMultigraph {
    pub fn left_classes(&self) -> u32 {
        self.g1
    }

    pub fn right_classes(&self) -> u32 {
        self.g2
    }

    /// Number of edges, i.e. columns.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoint classes `(a, b)` of the edge labelled by column `i`.
    pub fn edge(&self, i: usize) -> (u32, u32) {
        self.edges[i]
    }

    /// Columns in `P_a`, ascending.
    pub fn left_class(&self, a: u32) -> &[usize] {
        &self.left[a as usize]
    }

    /// Columns in `Q_b`, ascending.
    pub fn right_class(&self, b: u32) -> &[usize] {
        &self.right[b as usize]
    }

    /// Columns joining `P_a` and `Q_b`, ascending.
    pub fn columns_between(&self, a: u32, b: u32) -> Vec<usize> {
        self.left[a as usize]
            .iter()
            .copied()
            .filter(|&i| self.edges[i].1 == b)
            .collect()
    }
}

/// One vertex of a split graph: a copy of an original class with a degree cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitCopy {
    pub class: u32,
    pub capacity: usize,
}

/// `h` parallel edges placed between the designated copies `P_{ab}` and `Q_{ba}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub a: u32,
    pub b: u32,
    pub left: usize,
    pub right: usize,
    pub columns: Vec<usize>,
}

/// A bipartite multigraph of maximum degree `h` obtained by splitting every
/// class of an [`IndexedBipartiteMultigraph`] into `floor(d/h)` copies of
/// degree `h` and at most one copy of degree `d mod h`. Edge `i` is still
/// labelled by column `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitGraph {
    h: usize,
    left: Vec<SplitCopy>,
    right: Vec<SplitCopy>,
    edges: Vec<(usize, usize)>,
    blocks: Vec<Block>,
}

fn chunk_copies(class: u32, degree: usize, h: usize) -> Vec<SplitCopy> {
    let mut out = vec![SplitCopy { class, capacity: h }; degree / h];
    if !degree.is_multiple_of(h) {
        out.push(SplitCopy {
            class,
            capacity: degree % h,
        });
    }
    out
}

impl SplitGraph {
    /// Splits each class by filling copies in ascending column order.
    pub fn uniform(g: &IndexedBipartiteMultigraph, h: usize) -> Result<SplitGraph> {
        if h == 0 {
            return precondition("split degree h must be positive");
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut edges = vec![(usize::MAX, usize::MAX); g.edge_count()];
        for a in 0..g.g1 {
            let base = left.len();
            let cols = g.left_class(a);
            left.extend(chunk_copies(a, cols.len(), h));
            for (k, &i) in cols.iter().enumerate() {
                edges[i].0 = base + k / h;
            }
        }
        for b in 0..g.g2 {
            let base = right.len();
            let cols = g.right_class(b);
            right.extend(chunk_copies(b, cols.len(), h));
            for (k, &i) in cols.iter().enumerate() {
                edges[i].1 = base + k / h;
            }
        }
        Ok(SplitGraph {
            h,
            left,
            right,
            edges,
            blocks: Vec::new(),
        })
    }

    /// Splitting with designated copies: copy `b` of `P_a` is `P_{ab}`, copy
    /// `a` of `Q_b` is `Q_{ba}`, and the `h` lowest-indexed columns between
    /// `P_a` and `Q_b` join exactly `P_{ab}` and `Q_{ba}`. The remaining
    /// columns of each class fill its other copies in ascending order.
    ///
    /// Needs at least `h` columns between every pair of classes and at least
    /// `g2` (resp. `g1`) full copies of every left (resp. right) class.
    pub fn with_blocks(g: &IndexedBipartiteMultigraph, h: usize) -> Result<SplitGraph> {
        if h == 0 {
            return precondition("split degree h must be positive");
        }
        let (g1, g2) = (g.g1 as usize, g.g2 as usize);
        let mut left = Vec::new();
        let mut left_base = Vec::with_capacity(g1);
        for a in 0..g.g1 {
            let d = g.left_class(a).len();
            if d / h < g2 {
                return precondition(format!(
                    "class P_{a} of degree {d} has fewer than {g2} copies of degree {h}"
                ));
            }
            left_base.push(left.len());
            left.extend(chunk_copies(a, d, h));
        }
        let mut right = Vec::new();
        let mut right_base = Vec::with_capacity(g2);
        for b in 0..g.g2 {
            let d = g.right_class(b).len();
            if d / h < g1 {
                return precondition(format!(
                    "class Q_{b} of degree {d} has fewer than {g1} copies of degree {h}"
                ));
            }
            right_base.push(right.len());
            right.extend(chunk_copies(b, d, h));
        }

        let mut edges = vec![(usize::MAX, usize::MAX); g.edge_count()];
        let mut in_block = vec![false; g.edge_count()];
        let mut blocks = Vec::with_capacity(g1 * g2);
        for a in 0..g.g1 {
            for b in 0..g.g2 {
                let cols = g.columns_between(a, b);
                if cols.len() < h {
                    return precondition(format!(
                        "only {} columns join P_{a} and Q_{b}, need {h}",
                        cols.len()
                    ));
                }
                let l = left_base[a as usize] + b as usize;
                let r = right_base[b as usize] + a as usize;
                let columns = cols[..h].to_vec();
                for &i in &columns {
                    edges[i] = (l, r);
                    in_block[i] = true;
                }
                blocks.push(Block {
                    a,
                    b,
                    left: l,
                    right: r,
                    columns,
                });
            }
        }
        for a in 0..g.g1 {
            let first = left_base[a as usize] + g2;
            for (k, i) in g
                .left_class(a)
                .iter()
                .copied()
                .filter(|&i| !in_block[i])
                .enumerate()
            {
                edges[i].0 = first + k / h;
            }
        }
        for b in 0..g.g2 {
            let first = right_base[b as usize] + g1;
            for (k, i) in g
                .right_class(b)
                .iter()
                .copied()
                .filter(|&i| !in_block[i])
                .enumerate()
            {
                edges[i].1 = first + k / h;
            }
        }
        Ok(SplitGraph {
            h,
            left,
            right,
            edges,
            blocks,
        })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn left_copies(&self) -> &[SplitCopy] {
        &self.left
    }

    pub fn right_copies(&self) -> &[SplitCopy] {
        &self.right
    }

    /// `(left copy, right copy)` of the edge labelled by column `i`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Designated parallel blocks; empty for a uniform split.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.left.len()];
        for &(l, _) in &self.edges {
            d[l] += 1;
        }
        d
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.right.len()];
        for &(_, r) in &self.edges {
            d[r] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.left_degrees()
            .into_iter()
            .chain(self.right_degrees())
            .max()
            .unwrap_or(0)
    }

    /// Incidence lists with left copies numbered first, then right copies.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let off = self.left.len();
        self.edges.iter().map(|&(l, r)| vec![l, off + r]).collect()
    }
}

/// Colours the edges of a bipartite multigraph of maximum degree at most `h`
/// with `h` colours so that each colour class is a matching.
///
/// Edges are inserted in column order. For edge `uv` take the smallest colour
/// `α` free at `u` and `β` free at `v`; if `α` is also free at `v` use it,
/// otherwise flip the `α/β` alternating path leaving `v` first. In a
/// bipartite graph that path never reaches `u`.
pub fn edge_color_bipartite(split: &SplitGraph, h: usize) -> Result<MatchingPartition> {
    if h == 0 {
        return precondition("colour count must be positive");
    }
    let found = split.max_degree();
    if found > h {
        return Err(Error::DegreeBound { found, bound: h });
    }
    let off = split.left.len();
    let ends: Vec<(usize, usize)> = split.edges.iter().map(|&(l, r)| (l, off + r)).collect();
    Ok(color_bipartite_edges(&ends, off + split.right.len(), h))
}

/// Core of [`edge_color_bipartite`] on raw edge endpoints. The caller
/// guarantees a bipartition and maximum degree at most `h`.
pub(crate) fn color_bipartite_edges(
    ends: &[(usize, usize)],
    nv: usize,
    h: usize,
) -> MatchingPartition {
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; h]; nv];
    let mut color = vec![usize::MAX; ends.len()];

    for (e, &(u, v)) in ends.iter().enumerate() {
        let alpha = (0..h).find(|&c| at[u][c].is_none()).expect("degree bound");
        if at[v][alpha].is_some() {
            let beta = (0..h).find(|&c| at[v][c].is_none()).expect("degree bound");
            let mut path = Vec::new();
            let (mut x, mut c) = (v, alpha);
            while let Some(f) = at[x][c] {
                path.push(f);
                let (p, q) = ends[f];
                x = if p == x { q } else { p };
                c = if c == alpha { beta } else { alpha };
            }
            for &f in &path {
                let (p, q) = ends[f];
                at[p][color[f]] = None;
                at[q][color[f]] = None;
            }
            for &f in &path {
                let (p, q) = ends[f];
                color[f] = if color[f] == alpha { beta } else { alpha };
                at[p][color[f]] = Some(f);
                at[q][color[f]] = Some(f);
            }
        }
        debug_assert!(at[u][alpha].is_none() && at[v][alpha].is_none());
        color[e] = alpha;
        at[u][alpha] = Some(e);
        at[v][alpha] = Some(e);
    }
    MatchingPartition::new(color, h)
}
