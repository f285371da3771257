//! Partitions of an edge set into matchings, and size equalization by
//! swapping colours on components of the union of two matchings.
//!
//! Edges are given as incidence lists (`edges[e]` = vertices of edge `e`), so
//! the same code serves split bipartite graphs and split tripartite
//! hypergraphs.

use crate::error::{Error, Result};

/// An assignment of every edge to one of `count` matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingPartition {
    colors: Vec<usize>,
    count: usize,
}

impl MatchingPartition {
    pub fn new(colors: Vec<usize>, count: usize) -> Self {
        assert!(colors.iter().all(|&c| c < count));
        MatchingPartition { colors, count }
    }

    /// Matching index of edge `e`.
    pub fn color(&self, e: usize) -> usize {
        self.colors[e]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of matchings (some may be empty).
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        sizes
    }

    /// Edge ids of each matching, ascending.
    pub fn matchings(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (e, &c) in self.colors.iter().enumerate() {
            out[c].push(e);
        }
        out
    }

    /// Every edge is coloured and no two edges of one colour share a vertex.
    pub fn is_valid_for(&self, edges: &[Vec<usize>]) -> bool {
        if self.colors.len() != edges.len() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        for (e, vs) in edges.iter().enumerate() {
            for &v in vs {
                if !seen.insert((v, self.colors[e])) {
                    return false;
                }
            }
        }
        true
    }

    /// All matching sizes lie in `{floor(m/k), ceil(m/k)}` for `m` edges.
    pub fn is_equalized(&self) -> bool {
        let sizes = self.sizes();
        let m = self.colors.len();
        let (lo, hi) = (m / self.count, m.div_ceil(self.count));
        sizes.iter().all(|s| (lo..=hi).contains(s))
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Evens out matching sizes until they differ by at most one.
///
/// Each round takes the largest matching `big` and the smallest `small`,
/// splits the edges of `big ∪ small` into connected components (edges are
/// adjacent when they share a vertex) and swaps the two colours inside the
/// component whose surplus of `big` edges is largest while still below the
/// current gap. Swapping a whole component keeps both colour classes
/// matchings, and the per-vertex colour multiset is unchanged, so degree
/// bounds derived from the partition survive.
pub fn equalize_matchings(
    edges: &[Vec<usize>],
    partition: MatchingPartition,
) -> Result<MatchingPartition> {
    let mut colors = partition.colors;
    let count = partition.count;
    if colors.len() != edges.len() {
        return Err(Error::LengthMismatch(edges.len(), colors.len()));
    }
    let num_vertices = edges.iter().flatten().copied().max().map_or(0, |v| v + 1);
    let mut sizes = vec![0usize; count];
    for &c in &colors {
        sizes[c] += 1;
    }

    loop {
        let big = (0..count)
            .max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)))
            .unwrap();
        let small = (0..count).min_by_key(|&c| (sizes[c], c)).unwrap();
        let gap = sizes[big] - sizes[small];
        if gap <= 1 {
            break;
        }

        let mut parent: Vec<usize> = (0..edges.len()).collect();
        let mut owner: Vec<Option<usize>> = vec![None; num_vertices];
        let mut owner2: Vec<Option<usize>> = vec![None; num_vertices];
        for (e, vs) in edges.iter().enumerate() {
            if colors[e] != big && colors[e] != small {
                continue;
            }
            let slot = if colors[e] == big {
                &mut owner
            } else {
                &mut owner2
            };
            for &v in vs {
                slot[v] = Some(e);
            }
        }
        for v in 0..num_vertices {
            if let (Some(a), Some(b)) = (owner[v], owner2[v]) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let mut excess: std::collections::BTreeMap<usize, isize> = Default::default();
        for (e, &c) in colors.iter().enumerate() {
            if c == big || c == small {
                let r = find(&mut parent, e);
                *excess.entry(r).or_default() += if c == big { 1 } else { -1 };
            }
        }
        let chosen = excess
            .iter()
            .filter(|(_, &x)| x > 0 && (x as usize) < gap)
            .max_by_key(|(&r, &x)| (x, std::cmp::Reverse(r)))
            .map(|(&r, &x)| (r, x as usize));
        let Some((root, x)) = chosen else {
            return Err(Error::Precondition(format!(
                "no component of matchings {big} and {small} can shrink the size gap {gap}"
            )));
        };
        for (e, c) in colors.iter_mut().enumerate() {
            if (*c == big || *c == small) && find(&mut parent, e) == root {
                *c = if *c == big { small } else { big };
            }
        }
        sizes[big] -= x;
        sizes[small] += x;
    }
    Ok(MatchingPartition { colors, count })
}
