use std::collections::BTreeMap;

use crate::model::{VertexId, WeightedHypergraph};

/// A loose cycle `(v_1, E_1, .., v_k, E_k, v_1)` with
/// `E_i = {v_i, u_i, v_{i+1}}` (indices mod `k`) and every `u_i` of degree one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LooseCycle {
    /// `v_1 .. v_k`
    pub shared: Vec<VertexId>,
    /// `u_1 .. u_k`
    pub private: Vec<VertexId>,
    /// Edge ids of `E_1 .. E_k` in the hypergraph.
    pub edges: Vec<usize>,
}

impl LooseCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

fn degrees(h: &WeightedHypergraph) -> BTreeMap<VertexId, usize> {
    let mut d: BTreeMap<VertexId, usize> = h.vertex_ids().map(|v| (v, 0)).collect();
    for e in h.edges() {
        for v in e.vertices() {
            *d.get_mut(v).unwrap() += 1;
        }
    }
    d
}

/// Recognizes a 3-uniform loose cycle of length `k >= 3` on exactly `2k`
/// vertices. The walk starts at edge 0 from its smaller shared vertex.
pub fn recognize_loose_cycle(h: &WeightedHypergraph) -> Option<LooseCycle> {
    let k = h.edges().len();
    if k < 3 || !h.is_three_uniform() || h.vertex_count() != 2 * k {
        return None;
    }
    let deg = degrees(h);
    let mut shared_of = Vec::with_capacity(k);
    let mut private_of = Vec::with_capacity(k);
    for e in h.edges() {
        let (two, one): (Vec<VertexId>, Vec<VertexId>) =
            e.vertices().iter().partition(|v| deg[v] == 2);
        if two.len() != 2 || one.len() != 1 || deg[&one[0]] != 1 {
            return None;
        }
        shared_of.push(two);
        private_of.push(one[0]);
    }
    let mut shared = Vec::with_capacity(k);
    let mut private = Vec::with_capacity(k);
    let mut edges = Vec::with_capacity(k);
    let (mut e, mut v) = (0usize, shared_of[0][0]);
    for _ in 0..k {
        edges.push(e);
        shared.push(v);
        private.push(private_of[e]);
        let next_v = if shared_of[e][0] == v {
            shared_of[e][1]
        } else {
            shared_of[e][0]
        };
        let next_e = (0..k).find(|&f| f != e && shared_of[f].contains(&next_v))?;
        e = next_e;
        v = next_v;
    }
    if e != 0 || v != shared[0] {
        return None;
    }
    let mut seen = edges.clone();
    seen.sort_unstable();
    seen.dedup();
    (seen.len() == k).then_some(LooseCycle {
        shared,
        private,
        edges,
    })
}

/// Weight conditions of the five-vertex cycle construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiveVertexCycleConditions {
    /// `g0 g1 g2 = PW(H)`
    pub seed_attains_pw: bool,
    /// `g0 ≡ 0 mod g3`
    pub divisible: bool,
    /// `g3 <= min{g0, max{g1, g2}}`
    pub bounded: bool,
}

impl FiveVertexCycleConditions {
    pub fn all(&self) -> bool {
        self.seed_attains_pw && self.divisible && self.bounded
    }
}

/// The labeling `E_1 = {v0, v1, v2}`, `E_2 = {v1, v2, v3}`, `E_3 = {v3, v4, v0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveVertexCycle {
    pub v: [VertexId; 5],
    /// Edge ids of `E_1, E_2, E_3`.
    pub edges: [usize; 3],
    pub conditions: FiveVertexCycleConditions,
}

impl FiveVertexCycle {
    fn new(h: &WeightedHypergraph, v: [VertexId; 5], edges: [usize; 3]) -> Self {
        let g = v.map(|x| h.weight(x).unwrap() as u64);
        let pw = h.max_edge_product().unwrap_or(0);
        let conditions = FiveVertexCycleConditions {
            seed_attains_pw: g[0] * g[1] * g[2] == pw,
            divisible: g[0] % g[3] == 0,
            bounded: g[3] <= g[0].min(g[1].max(g[2])),
        };
        FiveVertexCycle {
            v,
            edges,
            conditions,
        }
    }
}

/// Recognizes three hyperedges on five vertices where two edges share a pair
/// and the third edge meets each of them in one further vertex. Of the two
/// orientations, one meeting all weight conditions is preferred, then one
/// whose first edge attains PW.
pub fn recognize_five_vertex_cycle(h: &WeightedHypergraph) -> Option<FiveVertexCycle> {
    if h.edges().len() != 3 || h.vertex_count() != 5 || !h.is_three_uniform() {
        return None;
    }
    let e = h.edges();
    let inter = |i: usize, j: usize| -> Vec<VertexId> {
        e[i].vertices()
            .iter()
            .copied()
            .filter(|&v| e[j].contains(v))
            .collect()
    };
    let mut candidates = Vec::new();
    for (a, b, c) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let pair = inter(a, b);
        let (ca, cb) = (inter(c, a), inter(c, b));
        if pair.len() != 2 || ca.len() != 1 || cb.len() != 1 || ca == cb {
            continue;
        }
        if pair.contains(&ca[0]) || pair.contains(&cb[0]) {
            continue;
        }
        let v4 = *e[c]
            .vertices()
            .iter()
            .find(|&&v| v != ca[0] && v != cb[0])
            .unwrap();
        for (e1, e2, v0, v3) in [(a, b, ca[0], cb[0]), (b, a, cb[0], ca[0])] {
            candidates.push(FiveVertexCycle::new(
                h,
                [v0, pair[0], pair[1], v3, v4],
                [e1, e2, c],
            ));
        }
    }
    candidates
        .iter()
        .find(|s| s.conditions.all())
        .or_else(|| candidates.iter().find(|s| s.conditions.seed_attains_pw))
        .or(candidates.first())
        .cloned()
}
