use std::collections::BTreeMap;

use crate::error::{precondition, Result};
use crate::model::SymbolVector;
use crate::tripartite::MultiHypergraph;
use crate::verify::{are_pairwise_balanced, are_t_qualitatively_independent};

/// The three parts of a tripartite hypergraph; `P`, `Q`, `R` index the
/// classes of the first, second and third input row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    P,
    Q,
    R,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::P, Part::Q, Part::R];

    fn index(self) -> usize {
        self as usize
    }
}

/// Tripartite 3-uniform multi-hypergraph of three rows: class `P_a` holds the
/// columns where `x1 = a` (likewise `Q_b`, `R_c`), and column `i` is the
/// hyperedge `{P_x1(i), Q_x2(i), R_x3(i)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedTripartiteHypergraph {
    alphabets: [u32; 3],
    columns: Vec<[u32; 3]>,
    classes: [Vec<Vec<usize>>; 3],
}

pub fn build_tripartite(
    x1: &SymbolVector,
    x2: &SymbolVector,
    x3: &SymbolVector,
) -> Result<IndexedTripartiteHypergraph> {
    let rows = [x1, x2, x3];
    for x in &rows[1..] {
        if x.len() != x1.len() {
            return Err(crate::error::Error::LengthMismatch(x1.len(), x.len()));
        }
    }
    let alphabets = [x1.alphabet(), x2.alphabet(), x3.alphabet()];
    let mut classes: [Vec<Vec<usize>>; 3] =
        std::array::from_fn(|p| vec![Vec::new(); alphabets[p] as usize]);
    let mut columns = Vec::with_capacity(x1.len());
    for i in 0..x1.len() {
        let col = [x1.get(i), x2.get(i), x3.get(i)];
        for p in 0..3 {
            classes[p][col[p] as usize].push(i);
        }
        columns.push(col);
    }
    Ok(IndexedTripartiteHypergraph {
        alphabets,
        columns,
        classes,
    })
}

impl IndexedTripartiteHypergraph {
    pub fn alphabets(&self) -> [u32; 3] {
        self.alphabets
    }

    /// Number of hyperedges, i.e. columns.
    pub fn edge_count(&self) -> usize {
        self.columns.len()
    }

    /// Class symbols `(a, b, c)` of hyperedge `i`.
    pub fn edge(&self, i: usize) -> [u32; 3] {
        self.columns[i]
    }

    /// Columns of one class, ascending.
    pub fn class(&self, part: Part, symbol: u32) -> &[usize] {
        &self.classes[part.index()][symbol as usize]
    }

    pub fn degree(&self, part: Part, symbol: u32) -> usize {
        self.class(part, symbol).len()
    }

    /// `P_a ∩ Q_b`, ascending.
    pub fn pair_columns(&self, a: u32, b: u32) -> Vec<usize> {
        self.class(Part::P, a)
            .iter()
            .copied()
            .filter(|&i| self.columns[i][1] == b)
            .collect()
    }

    /// The rows this hypergraph was built from.
    pub fn rows(&self) -> [SymbolVector; 3] {
        std::array::from_fn(|p| {
            SymbolVector::from_raw(
                self.columns.iter().map(|c| c[p]).collect(),
                self.alphabets[p],
            )
        })
    }
}

/// What a split vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CopyRole {
    /// `P^l_{ab}` in part P, `Q^l_{ba}` in part Q: the `l`-th block of `h`
    /// parallel hyperedges through `P_a` and `Q_b`.
    Block { a: u32, b: u32, l: usize },
    /// `𝓔^l_a` in part P, `𝓕^l_b` in part Q.
    Surplus { l: usize },
    /// `R^l_{ca}`: the copy of `R_c` containing `𝓔^l_a`.
    Host { a: u32, l: usize },
    /// `𝓖^l_c`: the remaining copies of `R_c`.
    Filler { l: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitVertex {
    pub part: Part,
    /// Class symbol of the original vertex this is a copy of.
    pub class: u32,
    pub role: CopyRole,
    /// Hyperedges (columns) at this copy, ascending.
    pub columns: Vec<usize>,
}

/// The maximum-degree-`h` hypergraph obtained by splitting every class of an
/// [`IndexedTripartiteHypergraph`]. Hyperedge `i` is still column `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripartiteSplit {
    h: usize,
    vertices: Vec<SplitVertex>,
    edges: Vec<[usize; 3]>,
    special: BTreeMap<(u32, u32), usize>,
    surplus_symbol: Vec<Option<u32>>,
}

/// `(a, b, l)`: the `l`-th block of the pair `(P_a, Q_b)`.
pub type BlockKey = (u32, u32, usize);

impl TripartiteSplit {
    pub fn h(&self) -> usize {
        self.h
    }

    pub fn vertices(&self) -> &[SplitVertex] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Split vertex ids `[p, q, r]` of hyperedge `i`.
    pub fn edge(&self, i: usize) -> [usize; 3] {
        self.edges[i]
    }

    /// The surplus column picked for `(a, b)` when `|P_a ∩ Q_b| ≡ 1 mod h`.
    pub fn special_column(&self, a: u32, b: u32) -> Option<usize> {
        self.special.get(&(a, b)).copied()
    }

    /// The symbol `c` chosen for `P_a`, if `P_a` has surplus columns.
    pub fn surplus_symbol(&self, a: u32) -> Option<u32> {
        self.surplus_symbol[a as usize]
    }

    pub fn max_degree(&self) -> usize {
        self.vertices
            .iter()
            .map(|v| v.columns.len())
            .max()
            .unwrap_or(0)
    }

    /// Columns of every P-side block, keyed `(a, b, l)`.
    pub fn blocks(&self) -> Vec<(BlockKey, &[usize])> {
        self.vertices
            .iter()
            .filter(|v| v.part == Part::P)
            .filter_map(|v| match v.role {
                CopyRole::Block { a, b, l } => Some(((a, b, l), v.columns.as_slice())),
                _ => None,
            })
            .collect()
    }

    pub fn hypergraph(&self) -> MultiHypergraph {
        MultiHypergraph::new(
            self.vertices.len(),
            self.edges.iter().map(|e| e.to_vec()).collect(),
        )
    }

    /// Hyperedges as `(q, r)` pairs. Two hyperedges meet in the split
    /// hypergraph exactly when these pairs share an end: a block's P copy has
    /// the same hyperedges as its Q copy, and a surplus P copy lies inside one
    /// R copy. The pairs form a bipartite multigraph.
    pub(crate) fn quotient_edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e[1], e[2])).collect()
    }
}

fn chunks(columns: &[usize], h: usize) -> Vec<Vec<usize>> {
    columns.chunks(h).map(<[usize]>::to_vec).collect()
}

/// R-copy capacities of a class of degree `d`: full copies, then the partial one.
fn bin_capacities(d: usize, h: usize) -> Vec<usize> {
    let mut bins = vec![h; d / h];
    if !d.is_multiple_of(h) {
        bins.push(d % h);
    }
    bins
}

/// Dedicated bins for chunks of the given sizes: largest chunk into the
/// largest bin. Returns `None` if some chunk does not fit.
fn place_chunks(sizes: &[usize], bins: &[usize]) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..sizes.len()).collect();
    order.sort_by_key(|&k| (std::cmp::Reverse(sizes[k]), k));
    let mut out = vec![0; sizes.len()];
    for (slot, &k) in order.iter().enumerate() {
        if slot >= bins.len() || bins[slot] < sizes[k] {
            return None;
        }
        out[k] = slot;
    }
    Some(out)
}

/// Checks the h-conditions and the row preconditions of the split.
pub(crate) fn check_split_preconditions(rows: &[SymbolVector; 3], h: usize) -> Result<()> {
    if h == 0 {
        return precondition("target alphabet size h must be positive");
    }
    let n = rows[0].len();
    let [g1, g2, g3] = [0, 1, 2].map(|p| rows[p].alphabet() as usize);
    let f12 = n / (g1 * g2);
    let f13 = n / (g1 * g3);
    if h > f12.min(f13) {
        return precondition(format!(
            "h = {h} exceeds min(floor(n/g1g2), floor(n/g1g3)) = {}",
            f12.min(f13)
        ));
    }
    if h >= 3 && !f12.is_multiple_of(h) {
        return precondition(format!(
            "floor(n/g1g2) = {f12} is not a multiple of h = {h}"
        ));
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if !are_pairwise_balanced(&rows[i], &rows[j])? {
            return precondition(format!(
                "rows {} and {} are not pairwise balanced",
                i + 1,
                j + 1
            ));
        }
    }
    if !are_t_qualitatively_independent(&[&rows[0], &rows[1], &rows[2]], 3)? {
        return precondition("input rows are not 3-qualitatively independent");
    }
    Ok(())
}

/// Splits `g` into a tripartite hypergraph of maximum degree `h` in which
/// every pair `(P_a, Q_b)` owns `floor(|P_a ∩ Q_b| / h)` blocks of `h`
/// parallel hyperedges.
///
/// A pair with one column left over contributes a surplus column `i` with
/// `x3(i) = c_a`; the surplus columns of `P_a` are chunked into copies
/// `𝓔^l_a` of at most `h` columns, and each chunk is placed whole inside its
/// own copy of `R_{c_a}`. The symbols `c_a` are chosen lexicographically
/// smallest such that these placements exist.
pub fn split_tripartite(g: &IndexedTripartiteHypergraph, h: usize) -> Result<TripartiteSplit> {
    check_split_preconditions(&g.rows(), h)?;
    let [g1, g2, g3] = g.alphabets();
    let n = g.edge_count();

    // pair columns, blocks first-choice candidates for surplus
    let mut pair: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    let mut needs_surplus: Vec<Vec<u32>> = vec![Vec::new(); g1 as usize];
    for a in 0..g1 {
        for b in 0..g2 {
            let cols = g.pair_columns(a, b);
            match cols.len() % h {
                0 => {}
                1 => needs_surplus[a as usize].push(b),
                r => {
                    return precondition(format!(
                        "|P_{a} ∩ Q_{b}| = {} leaves remainder {r} mod h = {h}",
                        cols.len()
                    ))
                }
            }
            pair.insert((a, b), cols);
        }
    }

    let chunk_sizes: Vec<Vec<usize>> = needs_surplus
        .iter()
        .map(|bs| chunks(&vec![0; bs.len()], h).iter().map(Vec::len).collect())
        .collect();
    let r_bins: Vec<Vec<usize>> = (0..g3)
        .map(|c| bin_capacities(g.degree(Part::R, c), h))
        .collect();
    let can_use = |a: u32, c: u32| {
        needs_surplus[a as usize]
            .iter()
            .all(|&b| pair[&(a, b)].iter().any(|&i| g.edge(i)[2] == c))
    };

    // choose c_a by backtracking over a
    let mut choice: Vec<Option<u32>> = vec![None; g1 as usize];
    fn assign(
        a: usize,
        choice: &mut Vec<Option<u32>>,
        chunk_sizes: &[Vec<usize>],
        r_bins: &[Vec<usize>],
        can_use: &dyn Fn(u32, u32) -> bool,
    ) -> bool {
        if a == choice.len() {
            return true;
        }
        if chunk_sizes[a].is_empty() {
            return assign(a + 1, choice, chunk_sizes, r_bins, can_use);
        }
        for c in 0..r_bins.len() as u32 {
            if !can_use(a as u32, c) {
                continue;
            }
            choice[a] = Some(c);
            let sizes: Vec<usize> = (0..=a)
                .filter(|&x| choice[x] == Some(c))
                .flat_map(|x| chunk_sizes[x].iter().copied())
                .collect();
            if place_chunks(&sizes, &r_bins[c as usize]).is_some()
                && assign(a + 1, choice, chunk_sizes, r_bins, can_use)
            {
                return true;
            }
            choice[a] = None;
        }
        false
    }
    if !assign(0, &mut choice, &chunk_sizes, &r_bins, &can_use) {
        return precondition("no choice of surplus symbols lets every surplus chunk fit an R copy");
    }

    let mut vertices: Vec<SplitVertex> = Vec::new();
    let mut edges = vec![[usize::MAX; 3]; n];
    let mut special = BTreeMap::new();
    let mut push = |vertices: &mut Vec<SplitVertex>, v: SplitVertex, slot: usize| {
        let id = vertices.len();
        for &i in &v.columns {
            edges[i][slot] = id;
        }
        vertices.push(v);
        id
    };

    // P side: blocks then surplus chunks; Q blocks mirror P blocks
    let mut block_cols: BTreeMap<(u32, u32), Vec<Vec<usize>>> = BTreeMap::new();
    let mut surplus_of_p: Vec<Vec<Vec<usize>>> = vec![Vec::new(); g1 as usize];
    for a in 0..g1 {
        let mut surplus = Vec::new();
        for b in 0..g2 {
            let mut cols = pair[&(a, b)].clone();
            if needs_surplus[a as usize].contains(&b) {
                let c = choice[a as usize].expect("chosen");
                let pos = cols
                    .iter()
                    .position(|&i| g.edge(i)[2] == c)
                    .expect("3-QI provides a surplus column");
                let i = cols.remove(pos);
                special.insert((a, b), i);
                surplus.push(i);
            }
            block_cols.insert((a, b), chunks(&cols, h));
        }
        surplus_of_p[a as usize] = chunks(&surplus, h);
    }
    for a in 0..g1 {
        for b in 0..g2 {
            for (l, cols) in block_cols[&(a, b)].iter().enumerate() {
                let role = CopyRole::Block { a, b, l };
                push(
                    &mut vertices,
                    SplitVertex {
                        part: Part::P,
                        class: a,
                        role,
                        columns: cols.clone(),
                    },
                    0,
                );
            }
        }
        for (l, cols) in surplus_of_p[a as usize].iter().enumerate() {
            let role = CopyRole::Surplus { l };
            push(
                &mut vertices,
                SplitVertex {
                    part: Part::P,
                    class: a,
                    role,
                    columns: cols.clone(),
                },
                0,
            );
        }
    }
    for b in 0..g2 {
        let mut rest: Vec<usize> = g.class(Part::Q, b).to_vec();
        for a in 0..g1 {
            for (l, cols) in block_cols[&(a, b)].iter().enumerate() {
                rest.retain(|i| !cols.contains(i));
                let role = CopyRole::Block { a, b, l };
                push(
                    &mut vertices,
                    SplitVertex {
                        part: Part::Q,
                        class: b,
                        role,
                        columns: cols.clone(),
                    },
                    1,
                );
            }
        }
        for (l, cols) in chunks(&rest, h).into_iter().enumerate() {
            let role = CopyRole::Surplus { l };
            push(
                &mut vertices,
                SplitVertex {
                    part: Part::Q,
                    class: b,
                    role,
                    columns: cols,
                },
                1,
            );
        }
    }

    // R side: hosts (one per surplus chunk) then fillers
    for c in 0..g3 {
        let hosted: Vec<(u32, usize, &Vec<usize>)> = (0..g1)
            .filter(|&a| choice[a as usize] == Some(c))
            .flat_map(|a| {
                surplus_of_p[a as usize]
                    .iter()
                    .enumerate()
                    .map(move |(l, cols)| (a, l, cols))
            })
            .collect();
        let bins = &r_bins[c as usize];
        let sizes: Vec<usize> = hosted.iter().map(|x| x.2.len()).collect();
        let slots = place_chunks(&sizes, bins).expect("placement checked");
        let mut rest: Vec<usize> = g
            .class(Part::R, c)
            .iter()
            .copied()
            .filter(|i| !hosted.iter().any(|x| x.2.contains(i)))
            .collect();
        let mut capacity = bins.clone();
        let mut hosts = Vec::new();
        for (k, &(a, l, cols)) in hosted.iter().enumerate() {
            let take = capacity[slots[k]] - cols.len();
            capacity[slots[k]] = 0;
            let mut columns = cols.clone();
            columns.extend(rest.drain(..take));
            columns.sort_unstable();
            hosts.push(SplitVertex {
                part: Part::R,
                class: c,
                role: CopyRole::Host { a, l },
                columns,
            });
        }
        for v in hosts {
            push(&mut vertices, v, 2);
        }
        for (l, cap) in capacity.into_iter().filter(|&cap| cap > 0).enumerate() {
            let columns: Vec<usize> = rest.drain(..cap).collect();
            let role = CopyRole::Filler { l };
            push(
                &mut vertices,
                SplitVertex {
                    part: Part::R,
                    class: c,
                    role,
                    columns,
                },
                2,
            );
        }
        debug_assert!(rest.is_empty());
    }
    debug_assert!(edges.iter().flatten().all(|&v| v != usize::MAX));

    let surplus_symbol = (0..g1 as usize)
        .map(|a| {
            if surplus_of_p[a].is_empty() {
                None
            } else {
                choice[a]
            }
        })
        .collect();
    let split = TripartiteSplit {
        h,
        vertices,
        edges,
        special,
        surplus_symbol,
    };
    #[cfg(debug_assertions)]
    certify_in_debug(&split);
    Ok(split)
}

/// Test and debug builds check balancedness of every split small enough for
/// the odd-cycle search.
#[cfg(debug_assertions)]
fn certify_in_debug(split: &TripartiteSplit) {
    use crate::tripartite::{is_balanced_hypergraph, BalanceCheck};
    if split.edge_count() > 36 {
        return;
    }
    let check = BalanceCheck::OddCycles { max_nodes: 100_000 };
    if let Ok(balanced) = is_balanced_hypergraph(&split.hypergraph(), check) {
        assert!(balanced, "split hypergraph is not balanced: {split:?}");
    }
}
