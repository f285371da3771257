#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use hyperca::model::{CoveringArray, SymbolVector, VertexId, WeightedHypergraph};
use hyperca::ops::{HookStep, NewVertex};
use hyperca::tripartite::{
    build_tripartite, decompose_into_matchings, split_tripartite, TripartiteSplit,
    DEFAULT_DECOMPOSE_BUDGET,
};
use rand::seq::SliceRandom;
use rand::Rng;

/// Columns of `reps` copies of the full factorial over `g`, plus (if `extra`)
/// one column per `(a, b)` with third symbol `(a + b + shift) mod g3`. Every
/// pair of rows stays balanced and the three rows are 3-QI when `reps >= 1`.
pub fn design(g: [u32; 3], reps: usize, extra: bool, shift: u32) -> Vec<[u32; 3]> {
    let mut cols = Vec::new();
    for _ in 0..reps {
        for a in 0..g[0] {
            for b in 0..g[1] {
                for c in 0..g[2] {
                    cols.push([a, b, c]);
                }
            }
        }
    }
    if extra {
        for a in 0..g[0] {
            for b in 0..g[1] {
                cols.push([a, b, (a + b + shift) % g[2]]);
            }
        }
    }
    cols
}

/// Applies a column order and per-row symbol relabelings.
pub fn rows(
    g: [u32; 3],
    cols: &[[u32; 3]],
    order: &[usize],
    relabel: &[Vec<u32>; 3],
) -> [SymbolVector; 3] {
    std::array::from_fn(|p| {
        let s = order
            .iter()
            .map(|&i| relabel[p][cols[i][p] as usize])
            .collect();
        SymbolVector::new(s, g[p]).unwrap()
    })
}

/// All `(g, reps, extra)` with alphabet sizes in `1..=3` and `n <= max_n`.
pub fn shapes(max_n: usize) -> Vec<([u32; 3], usize, bool)> {
    let mut out = Vec::new();
    for g1 in 1..=3u32 {
        for g2 in 1..=3u32 {
            for g3 in 1..=3u32 {
                let g = [g1, g2, g3];
                let full = (g1 * g2 * g3) as usize;
                for reps in 1..=max_n / full {
                    for extra in [false, true] {
                        let n = reps * full + if extra { (g1 * g2) as usize } else { 0 };
                        if n <= max_n {
                            out.push((g, reps, extra));
                        }
                    }
                }
            }
        }
    }
    out
}

fn near(count: usize, n: usize, cells: usize) -> bool {
    count * cells >= n - n % cells && count * cells <= n + (cells - n % cells) % cells
}

/// Every symbol of `Z_g` occurs `floor(n/g)` or `ceil(n/g)` times.
pub fn bf_balanced(x: &SymbolVector) -> bool {
    let n = x.len();
    let g = x.alphabet() as usize;
    (0..g as u32).all(|s| near(x.symbols().iter().filter(|&&y| y == s).count(), n, g))
}

/// Both balanced, and every pair of symbols occurs `floor(n/(g1 g2))` or
/// `ceil(n/(g1 g2))` times.
pub fn bf_pairwise_balanced(x: &SymbolVector, y: &SymbolVector) -> bool {
    let n = x.len();
    let cells = (x.alphabet() * y.alphabet()) as usize;
    let mut seen: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for i in 0..n {
        *seen.entry((x.get(i), y.get(i))).or_default() += 1;
    }
    let pairs = (0..x.alphabet()).flat_map(|a| (0..y.alphabet()).map(move |b| (a, b)));
    bf_balanced(x)
        && bf_balanced(y)
        && pairs
            .into_iter()
            .all(|p| near(seen.get(&p).copied().unwrap_or(0), n, cells))
}

/// Every symbol triple occurs in some column.
pub fn bf_3qi(x: &SymbolVector, y: &SymbolVector, z: &SymbolVector) -> bool {
    let seen: HashSet<(u32, u32, u32)> = (0..x.len())
        .map(|i| (x.get(i), y.get(i), z.get(i)))
        .collect();
    seen.len() == (x.alphabet() * y.alphabet() * z.alphabet()) as usize
}

/// Direct check that every edge sees every tuple of its alphabets, and
/// optionally that every row is balanced and the rows of each edge are
/// pairwise balanced.
pub fn bf_covering(ca: &CoveringArray, balanced: bool) -> bool {
    let h = ca.hypergraph();
    let n = ca.size();
    let covered = h.edges().iter().all(|e| {
        let rows: Vec<&SymbolVector> = e.vertices().iter().map(|&v| ca.row(v).unwrap()).collect();
        let need: usize = rows.iter().map(|r| r.alphabet() as usize).product();
        let seen: HashSet<Vec<u32>> = (0..n)
            .map(|i| rows.iter().map(|r| r.get(i)).collect())
            .collect();
        seen.len() == need
    });
    let bal = !balanced
        || (ca.rows().values().all(bf_balanced)
            && h.edges().iter().all(|e| {
                let v = e.vertices();
                (0..v.len()).all(|i| {
                    (i + 1..v.len())
                        .all(|j| bf_pairwise_balanced(ca.row(v[i]).unwrap(), ca.row(v[j]).unwrap()))
                })
            }));
    covered
        && bal
        && h.vertex_ids()
            .all(|v| ca.row(v).is_some_and(|r| r.len() == n))
}

pub fn hypergraph(weights: &[(VertexId, u32)], edges: &[Vec<VertexId>]) -> WeightedHypergraph {
    WeightedHypergraph::new(weights.iter().copied(), edges.iter().cloned()).unwrap()
}

/// A random α-acyclic 3-uniform hypergraph on at most `max_k` vertices: each
/// new hyperedge meets one earlier hyperedge in one or two vertices and
/// brings fresh vertices for the rest. With `components`, a hyperedge may
/// also start a new component.
pub fn random_acyclic(
    rng: &mut impl Rng,
    max_k: usize,
    max_w: u32,
    components: bool,
) -> WeightedHypergraph {
    let target = rng.gen_range(3..=max_k);
    let mut next: VertexId = 1;
    let fresh = |next: &mut VertexId| {
        *next += 1;
        *next - 1
    };
    let mut edges: Vec<Vec<VertexId>> = vec![(0..3).map(|_| fresh(&mut next)).collect()];
    while (next as usize - 1) < target {
        let room = target - (next as usize - 1);
        let share = if components && room >= 3 && rng.gen_bool(0.15) {
            0
        } else if room >= 2 && rng.gen_bool(0.5) {
            1
        } else {
            2
        };
        let host = edges.choose(rng).unwrap().clone();
        let mut e: Vec<VertexId> = host.choose_multiple(rng, share).copied().collect();
        while e.len() < 3 {
            e.push(fresh(&mut next));
        }
        edges.push(e);
    }
    let weights: Vec<(VertexId, u32)> = (1..next).map(|v| (v, rng.gen_range(1..=max_w))).collect();
    hypergraph(&weights, &edges)
}

/// The 3-uniform interval hypergraph of windows starting at `starts` over
/// positions relabelled by `labels`.
pub fn interval_hypergraph(
    labels: &[VertexId],
    starts: &BTreeSet<usize>,
    weights: &[u32],
) -> WeightedHypergraph {
    let edges: Vec<Vec<VertexId>> = starts.iter().map(|&s| labels[s..s + 3].to_vec()).collect();
    let ws: Vec<(VertexId, u32)> = labels.iter().zip(weights).map(|(&v, &w)| (v, w)).collect();
    hypergraph(&ws, &edges)
}

/// Loose cycle `E_i = {i, k + i, i % k + 1}`; `weights[v - 1]` is vertex `v`'s weight.
pub fn loose_cycle(k: usize, weights: &[u32]) -> WeightedHypergraph {
    let k = k as VertexId;
    let edges: Vec<Vec<VertexId>> = (1..=k).map(|i| vec![i, k + i, i % k + 1]).collect();
    let ws: Vec<(VertexId, u32)> = (1..=2 * k).map(|v| (v, weights[v as usize - 1])).collect();
    hypergraph(&ws, &edges)
}

/// Three hyperedges `{v0,v1,v2}, {v1,v2,v3}, {v3,v4,v0}` on ids `0..5`.
pub fn five_vertex_cycle(g: [u32; 5]) -> WeightedHypergraph {
    let ws: Vec<(VertexId, u32)> = (0..5).map(|v| (v, g[v as usize])).collect();
    hypergraph(&ws, &[vec![0, 1, 2], vec![1, 2, 3], vec![3, 4, 0]])
}

/// A random extension instance: three rows from a shuffled and relabelled
/// design of length at most `max_n`, and a target alphabet in `1..=3`.
pub fn random_rows(rng: &mut impl Rng, max_n: usize) -> ([SymbolVector; 3], u32) {
    let all = shapes(max_n);
    let (g, reps, extra) = *all.choose(rng).unwrap();
    let cols = design(g, reps, extra, rng.gen_range(0..3));
    let mut order: Vec<usize> = (0..cols.len()).collect();
    order.shuffle(rng);
    let relabel = [0, 1, 2].map(|p| {
        let mut r: Vec<u32> = (0..g[p]).collect();
        r.shuffle(rng);
        r
    });
    (rows(g, &cols, &order, &relabel), rng.gen_range(1..=3))
}

/// A random hook step on `ca` with fresh ids above every existing vertex
/// and weights in `1..=max_w`. `kind` picks the operation (mod 5); `None`
/// if the hypergraph offers no anchors for it.
pub fn random_hook(
    rng: &mut impl Rng,
    ca: &CoveringArray,
    kind: usize,
    max_w: u32,
) -> Option<HookStep> {
    let h = ca.hypergraph();
    let ids: Vec<VertexId> = h.vertex_ids().collect();
    let top = ids.iter().max().copied().unwrap_or(0);
    let u = NewVertex::new(top + 1, rng.gen_range(1..=max_w));
    let triples: Vec<&[VertexId]> = h
        .edges()
        .iter()
        .map(|e| e.vertices())
        .filter(|e| e.len() == 3)
        .collect();
    let any = |rng: &mut _| *ids.choose(rng).unwrap();
    Some(match kind % 5 {
        0 => HookStep::EdgeI { u, v: any(rng) },
        1 => {
            let pick: Vec<VertexId> = ids.choose_multiple(rng, 2).copied().collect();
            if pick.len() < 2 {
                return None;
            }
            HookStep::EdgeII {
                u,
                v: pick[0],
                w: pick[1],
            }
        }
        2 => HookStep::TwoVertexHyperedge {
            u,
            v: NewVertex::new(top + 2, rng.gen_range(1..=max_w)),
            w: any(rng),
        },
        3 => {
            let pairs: Vec<Vec<VertexId>> = h
                .edges()
                .iter()
                .flat_map(|e| {
                    let v = e.vertices();
                    match v.len() {
                        2 => vec![v.to_vec()],
                        _ => vec![vec![v[0], v[1]], vec![v[0], v[2]], vec![v[1], v[2]]],
                    }
                })
                .collect();
            let p = pairs.choose(rng)?;
            HookStep::HyperedgeI {
                u,
                v: p[0],
                w: p[1],
            }
        }
        _ => {
            let mut t = triples.choose(rng)?.to_vec();
            t.shuffle(rng);
            HookStep::HyperedgeII {
                u,
                v: t[0],
                w: t[1],
                z: t[2],
            }
        }
    })
}

fn edge_set(h: &WeightedHypergraph) -> BTreeSet<Vec<VertexId>> {
    h.edges().iter().map(|e| e.vertices().to_vec()).collect()
}

/// Applies `step`; on success checks the grown array, then strips the new
/// rows and hooked edges and checks that the original array comes back and
/// verifies on the original hypergraph. `None` if the hook was refused.
pub fn hook_round_trip(
    before: &CoveringArray,
    step: &HookStep,
) -> Option<Result<CoveringArray, String>> {
    let after = hyperca::ops::apply_step(before, step).ok()?;
    Some((|| {
        if !bf_covering(&after, true) || after.size() != before.size() {
            return Err(format!("{step}: grown array fails"));
        }
        let restored_h = step.undo(after.hypergraph()).map_err(|e| e.to_string())?;
        if edge_set(&restored_h) != edge_set(before.hypergraph()) {
            return Err(format!("{step}: undo does not restore the edge set"));
        }
        let fresh: Vec<VertexId> = step.new_vertices().iter().map(|v| v.id).collect();
        let mut rows = after.rows().clone();
        rows.retain(|v, _| !fresh.contains(v));
        let restored = CoveringArray::new(restored_h, rows).map_err(|e| e.to_string())?;
        if !bf_covering(&restored, true) || restored.rows() != before.rows() {
            return Err(format!("{step}: restored array differs or fails"));
        }
        Ok(after)
    })())
}

/// A split of a random extension instance with at most `max_edges` hyperedges
/// and `2 <= h <= 3`, if the instance meets the split preconditions.
pub fn random_split(rng: &mut impl Rng, max_edges: usize) -> Option<TripartiteSplit> {
    let (x, _) = random_rows(rng, max_edges);
    let h = rng.gen_range(2..=3);
    let g = build_tripartite(&x[0], &x[1], &x[2]).ok()?;
    split_tripartite(&g, h).ok()
}

/// Decomposes the split into `Δ` matchings and checks the result directly:
/// every colour below `Δ`, and no two hyperedges of one colour meet.
pub fn check_decomposition(split: &TripartiteSplit) -> Result<(), String> {
    let hg = split.hypergraph();
    let delta = hg.max_degree();
    if delta > split.h() {
        return Err(format!("degree {delta} exceeds h = {}", split.h()));
    }
    let part = decompose_into_matchings(&hg, delta, DEFAULT_DECOMPOSE_BUDGET)
        .map_err(|e| e.to_string())?;
    let colors = part.colors();
    if colors.len() != hg.edges().len() || colors.iter().any(|&c| c >= delta) {
        return Err("colouring out of range".into());
    }
    for (i, a) in hg.edges().iter().enumerate() {
        for (j, b) in hg.edges().iter().enumerate().skip(i + 1) {
            if colors[i] == colors[j] && a.iter().any(|v| b.contains(v)) {
                return Err(format!(
                    "hyperedges {i} and {j} share colour {} and a vertex",
                    colors[i]
                ));
            }
        }
    }
    Ok(())
}

/// Constructor-supported instances with `PW <= 12` on at most five vertices.
pub fn oracle_corpus() -> Vec<(&'static str, WeightedHypergraph)> {
    let tri = |w: [u32; 3]| hypergraph(&[(1, w[0]), (2, w[1]), (3, w[2])], &[vec![1, 2, 3]]);
    let ws = |w: &[u32]| -> Vec<(VertexId, u32)> {
        w.iter()
            .enumerate()
            .map(|(i, &w)| (i as VertexId + 1, w))
            .collect()
    };
    vec![
        ("edge 2,2,2", tri([2, 2, 2])),
        ("edge 2,2,3", tri([2, 2, 3])),
        ("edge 1,3,4", tri([1, 3, 4])),
        ("edge 3,3,1", tri([3, 3, 1])),
        (
            "pair sharing two",
            hypergraph(&ws(&[2, 2, 2, 2]), &[vec![1, 2, 3], vec![1, 2, 4]]),
        ),
        (
            "pair sharing two mixed",
            hypergraph(&ws(&[2, 3, 2, 1]), &[vec![1, 2, 3], vec![1, 2, 4]]),
        ),
        (
            "pair sharing one",
            hypergraph(&ws(&[2, 2, 2, 2, 2]), &[vec![1, 2, 3], vec![3, 4, 5]]),
        ),
        (
            "star of three",
            hypergraph(
                &ws(&[2, 2, 2, 2, 2]),
                &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5]],
            ),
        ),
        (
            "path of three",
            hypergraph(
                &ws(&[1, 2, 3, 2, 1]),
                &[vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]],
            ),
        ),
        (
            "five-vertex cycle 2,2,2,2,2",
            five_vertex_cycle([2, 2, 2, 2, 2]),
        ),
        (
            "five-vertex cycle 2,2,3,2,1",
            five_vertex_cycle([2, 2, 3, 2, 1]),
        ),
        (
            "pair sharing one mixed",
            hypergraph(&ws(&[3, 2, 2, 1, 3]), &[vec![1, 2, 3], vec![3, 4, 5]]),
        ),
    ]
}
