//! End-to-end builders of balanced covering arrays of size exactly `PW(H)`.
//!
//! Every builder accepts an optional seed; with a seed the columns of the
//! finished array are shuffled by a ChaCha stream, otherwise the output is
//! the deterministic construction order.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{CoveringArray, VertexId, WeightedHypergraph};
use crate::ops::{
    add_seed_vertex, hook_edge_i, hook_edge_ii, hook_hyperedge_i, hook_hyperedge_ii,
    hook_two_vertex_hyperedge, seed_array, NewVertex,
};
use crate::structure::{gyo_reduce, recognize_five_vertex_cycle, recognize_loose_cycle};

fn unsupported<T>(reason: impl Into<String>) -> Result<T> {
    Err(Error::Unsupported(vec![reason.into()]))
}

fn target_size(h: &WeightedHypergraph) -> Result<usize> {
    h.max_edge_product()
        .map(|pw| pw as usize)
        .ok_or(Error::Edgeless)
}

fn new_vertex(h: &WeightedHypergraph, v: VertexId) -> NewVertex {
    NewVertex::new(v, h.weight(v).expect("vertex of h"))
}

/// Rebinds the rows to `h` (edge order may differ after replacements) and
/// applies the optional column shuffle.
fn finish(h: &WeightedHypergraph, ca: CoveringArray, seed: Option<u64>) -> Result<CoveringArray> {
    let mut ca = ca;
    for v in h.isolated_vertices() {
        if ca.row(v).is_none() {
            ca = add_seed_vertex(&ca, new_vertex(h, v))?;
        }
    }
    let (built, rows) = ca.into_parts();
    let mut want: Vec<_> = h.edges().to_vec();
    let mut got: Vec<_> = built.edges().to_vec();
    want.sort();
    got.sort();
    assert_eq!(want, got, "construction must rebuild the input edges");
    let ca = CoveringArray::new(h.clone(), rows)?;
    Ok(match seed {
        Some(s) => {
            let mut perm: Vec<usize> = (0..ca.size()).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(s));
            ca.permute_columns(&perm)
        }
        None => ca,
    })
}

/// Two new vertices in increasing weight order (ties by id).
fn by_weight(h: &WeightedHypergraph, a: VertexId, b: VertexId) -> (NewVertex, NewVertex) {
    let (x, y) = (new_vertex(h, a), new_vertex(h, b));
    if (x.weight, x.id) <= (y.weight, y.id) {
        (x, y)
    } else {
        (y, x)
    }
}

/// Replays the hyperedges of an α-acyclic 3-uniform hypergraph in reverse
/// GYO deletion order. A hyperedge meeting the built part in two vertices is
/// attached by hyperedge hooking I, in one vertex by the two-vertex hook;
/// a hyperedge meeting nothing starts a new component from a cyclic row.
pub fn construct_acyclic(h: &WeightedHypergraph, seed: Option<u64>) -> Result<CoveringArray> {
    if !h.is_three_uniform() {
        return unsupported("every edge must have three vertices");
    }
    let n = target_size(h)?;
    let trace = gyo_reduce(h);
    if !trace.is_empty_residual() {
        return unsupported("hypergraph is not alpha-acyclic");
    }
    let mut ca: Option<CoveringArray> = None;
    for &e in trace.deletion_order().iter().rev() {
        let verts = h.edges()[e].vertices();
        let (old, new): (Vec<VertexId>, Vec<VertexId>) = verts
            .iter()
            .partition(|&&v| ca.as_ref().is_some_and(|c| c.row(v).is_some()));
        let next = match (old.as_slice(), new.as_slice()) {
            ([], [s, a, b]) => {
                let start = new_vertex(h, *s);
                let base = match &ca {
                    None => seed_array(start, n)?,
                    Some(c) => add_seed_vertex(c, start)?,
                };
                let (u, v) = by_weight(h, *a, *b);
                hook_two_vertex_hyperedge(&base, u, v, *s)?
            }
            ([w], [a, b]) => {
                let (u, v) = by_weight(h, *a, *b);
                hook_two_vertex_hyperedge(ca.as_ref().unwrap(), u, v, *w)?
            }
            ([v, w], [u]) => hook_hyperedge_i(ca.as_ref().unwrap(), new_vertex(h, *u), *v, *w)?,
            _ => {
                return Err(Error::Precondition(format!(
                    "hyperedge {} repeats an existing one",
                    h.edges()[e]
                )))
            }
        };
        ca = Some(next);
    }
    finish(h, ca.expect("at least one edge"), seed)
}

/// Hypertrees reach the array through α-acyclicity; this is
/// [`construct_acyclic`] under its own name.
pub fn construct_hypertree(h: &WeightedHypergraph, seed: Option<u64>) -> Result<CoveringArray> {
    construct_acyclic(h, seed)
}

/// Loose cycle `E_i = {v_i, u_i, v_{i+1}}`: seed a PW-attaining hyperedge
/// (lowest edge id on ties) as `E_1`, grow the path `v_3 .. v_{k-1}` by edge
/// hooking I, close it with edge hooking II at `v_k`, then upgrade every
/// remaining edge `{v_i, v_{i+1}}` to `E_i` by hyperedge hooking I.
pub fn construct_loose_cycle(h: &WeightedHypergraph, seed: Option<u64>) -> Result<CoveringArray> {
    let Some(c) = recognize_loose_cycle(h) else {
        return unsupported("not a loose 3-uniform cycle");
    };
    let n = target_size(h)?;
    let start = (0..c.len())
        .filter(|&i| h.edge_product(&h.edges()[c.edges[i]]) as usize == n)
        .min_by_key(|&i| c.edges[i])
        .expect("some edge attains PW");
    let k = c.len();
    let v: Vec<VertexId> = (0..k).map(|i| c.shared[(start + i) % k]).collect();
    let u: Vec<VertexId> = (0..k).map(|i| c.private[(start + i) % k]).collect();

    let mut ca = seed_array(new_vertex(h, v[0]), n)?;
    let (a, b) = by_weight(h, u[0], v[1]);
    ca = hook_two_vertex_hyperedge(&ca, a, b, v[0])?;
    for i in 1..k - 2 {
        ca = hook_edge_i(&ca, new_vertex(h, v[i + 1]), v[i])?;
    }
    ca = hook_edge_ii(&ca, new_vertex(h, v[k - 1]), v[k - 2], v[0])?;
    for i in 1..k {
        ca = hook_hyperedge_i(&ca, new_vertex(h, u[i]), v[i], v[(i + 1) % k])?;
    }
    finish(h, ca, seed)
}

/// Five vertices, `E_1 = {v0, v1, v2}`, `E_2 = {v1, v2, v3}`,
/// `E_3 = {v3, v4, v0}`: seed `E_1`, add `v3` by hyperedge hooking II
/// (hyperedge `E_2` plus edge `{v0, v3}`), then upgrade `{v0, v3}` to `E_3`.
/// Needs `g0 g1 g2 = PW`, `g3 | g0` and `g3 <= min{g0, max{g1, g2}}`.
pub fn construct_cycle3(h: &WeightedHypergraph, seed: Option<u64>) -> Result<CoveringArray> {
    let Some(s) = recognize_five_vertex_cycle(h) else {
        return unsupported("not a five-vertex cycle of three hyperedges");
    };
    let mut failed = Vec::new();
    if !s.conditions.seed_attains_pw {
        failed.push("g0*g1*g2 must equal PW(H)".to_string());
    }
    if !s.conditions.divisible {
        failed.push("g3 must divide g0".to_string());
    }
    if !s.conditions.bounded {
        failed.push("g3 must be at most min{g0, max{g1, g2}}".to_string());
    }
    if !failed.is_empty() {
        return Err(Error::Unsupported(failed));
    }
    let n = target_size(h)?;
    let [v0, v1, v2, v3, v4] = s.v;
    let mut ca = seed_array(new_vertex(h, v0), n)?;
    let (a, b) = by_weight(h, v1, v2);
    ca = hook_two_vertex_hyperedge(&ca, a, b, v0)?;
    ca = hook_hyperedge_ii(&ca, new_vertex(h, v3), v1, v2, v0)?;
    ca = hook_hyperedge_i(&ca, new_vertex(h, v4), v0, v3)?;
    finish(h, ca, seed)
}

/// The common signature of the builders.
pub type Builder = fn(&WeightedHypergraph, Option<u64>) -> Result<CoveringArray>;

/// Tries the α-acyclic, loose-cycle and five-vertex-cycle builders in turn.
/// If all reject, the error lists each rejection.
pub fn construct_auto(h: &WeightedHypergraph, seed: Option<u64>) -> Result<CoveringArray> {
    let builders: [(&str, Builder); 3] = [
        ("acyclic", construct_acyclic),
        ("loose-cycle", construct_loose_cycle),
        ("cycle3", construct_cycle3),
    ];
    let mut reasons = Vec::new();
    for (name, build) in builders {
        match build(h, seed) {
            Err(Error::Unsupported(why)) => {
                reasons.extend(why.into_iter().map(|w| format!("{name}: {w}")))
            }
            other => return other,
        }
    }
    Err(Error::Unsupported(reasons))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_covering_array;

    fn weighted(weights: &[(VertexId, u32)], edges: &[&[VertexId]]) -> WeightedHypergraph {
        WeightedHypergraph::new(weights.iter().copied(), edges.iter().map(|e| e.to_vec())).unwrap()
    }

    fn uniform(edges: &[&[VertexId]], w: u32) -> WeightedHypergraph {
        let mut ids: Vec<VertexId> = edges.iter().flat_map(|e| e.iter().copied()).collect();
        ids.sort_unstable();
        ids.dedup();
        let weights: Vec<(VertexId, u32)> = ids.into_iter().map(|v| (v, w)).collect();
        weighted(&weights, edges)
    }

    fn certify(ca: &CoveringArray) {
        let pw = ca.hypergraph().max_edge_product().unwrap() as usize;
        assert_eq!(ca.size(), pw);
        let report = verify_covering_array(ca, true);
        assert!(report.ok(), "{report:?}");
    }

    #[test]
    fn acyclic_examples() {
        let h1 = uniform(&[&[1, 2, 3], &[1, 3, 4], &[1, 2, 6], &[2, 3, 5]], 2);
        let ca = construct_acyclic(&h1, None).unwrap();
        assert_eq!((ca.row_count(), ca.size()), (6, 8));
        certify(&ca);
        let single = weighted(&[(1, 2), (2, 3), (3, 4)], &[&[1, 2, 3]]);
        let ca = construct_acyclic(&single, None).unwrap();
        assert_eq!(ca.size(), 24);
        certify(&ca);
        // loose path, PW = 12
        let path = weighted(
            &[(1, 2), (2, 3), (3, 2), (4, 1), (5, 3), (6, 2), (7, 2)],
            &[&[1, 2, 3], &[3, 4, 5], &[5, 6, 7]],
        );
        let ca = construct_acyclic(&path, None).unwrap();
        assert_eq!((ca.row_count(), ca.size()), (7, 12));
        certify(&ca);
    }

    #[test]
    fn acyclic_forest_and_isolated() {
        let h = weighted(
            &[(1, 2), (2, 2), (3, 2), (4, 3), (5, 1), (6, 2), (7, 3)],
            &[&[1, 2, 3], &[4, 5, 6]],
        );
        certify(&construct_acyclic(&h, None).unwrap());
    }

    #[test]
    fn acyclic_rejects_cyclic() {
        let h2 = uniform(&[&[1, 2, 3], &[1, 3, 4], &[2, 4, 5], &[4, 5, 6]], 2);
        assert!(matches!(
            construct_acyclic(&h2, None),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            construct_hypertree(&h2, None),
            Err(Error::Unsupported(_))
        ));
    }

    fn loose_cycle(weights: &[u32]) -> WeightedHypergraph {
        let k = (weights.len() / 2) as VertexId;
        let edges: Vec<Vec<VertexId>> = (0..k)
            .map(|i| vec![i + 1, k + i + 1, (i + 1) % k + 1])
            .collect();
        WeightedHypergraph::new((1..=2 * k).zip(weights.iter().copied()), edges).unwrap()
    }

    #[test]
    fn loose_cycles() {
        certify(&construct_loose_cycle(&loose_cycle(&[2; 6]), None).unwrap());
        let mut w = vec![2; 12];
        w[7] = 3; // private vertex of E_2
        let ca = construct_loose_cycle(&loose_cycle(&w), None).unwrap();
        assert_eq!(ca.size(), 12);
        certify(&ca);
        certify(&construct_loose_cycle(&loose_cycle(&[2, 3, 2, 1, 1, 3]), None).unwrap());
    }

    fn fig4(w: [u32; 5]) -> WeightedHypergraph {
        WeightedHypergraph::new(
            (0..5).map(|i| (i, w[i as usize])),
            vec![vec![0, 1, 2], vec![1, 2, 3], vec![3, 4, 0]],
        )
        .unwrap()
    }

    #[test]
    fn five_vertex_cycles() {
        let ca = construct_cycle3(&fig4([2, 2, 2, 2, 2]), None).unwrap();
        assert_eq!((ca.row_count(), ca.size()), (5, 8));
        certify(&ca);
        assert!(matches!(
            construct_cycle3(&fig4([4, 3, 2, 5, 1]), None),
            Err(Error::Unsupported(r)) if r.len() == 2
        ));
    }

    #[test]
    fn auto_dispatch() {
        let h1 = uniform(&[&[1, 2, 3], &[1, 3, 4], &[1, 2, 6], &[2, 3, 5]], 2);
        certify(&construct_auto(&h1, None).unwrap());
        certify(&construct_auto(&fig4([2, 2, 2, 2, 2]), None).unwrap());
        let h2 = uniform(&[&[1, 2, 3], &[1, 3, 4], &[2, 4, 5], &[4, 5, 6]], 2);
        match construct_auto(&h2, None) {
            Err(Error::Unsupported(r)) => assert_eq!(r.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn seeded_shuffle_is_reproducible() {
        let h1 = uniform(&[&[1, 2, 3], &[1, 3, 4], &[1, 2, 6], &[2, 3, 5]], 2);
        let a = construct_acyclic(&h1, Some(7)).unwrap();
        let b = construct_acyclic(&h1, Some(7)).unwrap();
        assert_eq!(a, b);
        certify(&a);
    }
}
