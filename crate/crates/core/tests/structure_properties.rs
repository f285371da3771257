mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{
    bf_covering, five_vertex_cycle, hypergraph, interval_hypergraph, loose_cycle, random_acyclic,
};
use hyperca::constructors::{
    construct_acyclic, construct_auto, construct_cycle3, construct_loose_cycle,
};
use hyperca::model::{CoveringArray, SymbolVector, VertexId, WeightedHypergraph};
use hyperca::structure::{gyo_reduce, gyo_reduce_by, is_alpha_acyclic, is_conformal, replay_gyo};
use hyperca::verify::verify_covering_array;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_hypergraph() -> impl Strategy<Value = WeightedHypergraph> {
    let edge = proptest::sample::subsequence((1..=7).collect::<Vec<VertexId>>(), 2..=3);
    (
        proptest::collection::vec(edge, 1..7),
        proptest::collection::vec(1u32..=3, 7),
    )
        .prop_map(|(edges, weights)| {
            let edges: BTreeSet<Vec<VertexId>> = edges.into_iter().collect();
            let edges: Vec<Vec<VertexId>> = edges.into_iter().collect();
            let ws: Vec<(VertexId, u32)> = (1..=7).map(|v| (v, weights[v as usize - 1])).collect();
            hypergraph(&ws, &edges)
        })
}

/// Maximal cliques of the 2-section by subset enumeration.
fn brute_conformal(h: &WeightedHypergraph) -> bool {
    let ids: Vec<VertexId> = h.vertex_ids().collect();
    let adjacent =
        |a: VertexId, b: VertexId| h.edges().iter().any(|e| e.contains(a) && e.contains(b));
    let is_clique = |s: &[VertexId]| {
        s.iter()
            .enumerate()
            .all(|(i, &a)| s[i + 1..].iter().all(|&b| adjacent(a, b)))
    };
    let mut cliques = Vec::new();
    for mask in 1u32..(1 << ids.len()) {
        let s: Vec<VertexId> = (0..ids.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| ids[i])
            .collect();
        if s.len() >= 2 && is_clique(&s) {
            cliques.push(s);
        }
    }
    let maximal = cliques.iter().filter(|c| {
        !cliques
            .iter()
            .any(|d| d.len() > c.len() && c.iter().all(|v| d.contains(v)))
    });
    maximal
        .into_iter()
        .all(|c| h.edges().iter().any(|e| e.vertices() == c.as_slice()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gyo_emptiness_ignores_rule_order(h in small_hypergraph(), picks in proptest::collection::vec(any::<usize>(), 64)) {
        let canonical = gyo_reduce(&h);
        let mut i = 0;
        let other = gyo_reduce_by(&h, |options| {
            i += 1;
            picks[i % picks.len()] % options.len()
        });
        prop_assert_eq!(canonical.is_empty_residual(), other.is_empty_residual());
        prop_assert_eq!(replay_gyo(&h, other.steps()), Some(other.residual().to_vec()));
        prop_assert_eq!(replay_gyo(&h, canonical.steps()), Some(canonical.residual().to_vec()));
    }

    #[test]
    fn conformality_matches_clique_enumeration(h in small_hypergraph()) {
        prop_assert_eq!(is_conformal(&h).unwrap(), brute_conformal(&h));
    }

    #[test]
    fn interval_hypergraphs_are_acyclic(
        labels in Just((1..=10).collect::<Vec<VertexId>>()).prop_shuffle(),
        starts in proptest::collection::btree_set(0usize..8, 1..8),
        weights in proptest::collection::vec(1u32..=4, 10),
    ) {
        prop_assert!(is_alpha_acyclic(&interval_hypergraph(&labels, &starts, &weights)));
    }

    #[test]
    fn verifier_agrees_with_direct_check(
        h in small_hypergraph(),
        n in 1usize..20,
        seed in any::<u64>(),
        balanced in any::<bool>(),
    ) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: BTreeMap<VertexId, SymbolVector> = h
            .vertices()
            .map(|(v, w)| (v, SymbolVector::new((0..n).map(|_| rng.gen_range(0..w)).collect(), w).unwrap()))
            .collect();
        let ca = CoveringArray::new(h, rows).unwrap();
        prop_assert_eq!(verify_covering_array(&ca, balanced).ok(), bf_covering(&ca, balanced));
    }

    #[test]
    fn acyclic_constructions_are_optimal(seed in any::<u64>(), components in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_acyclic(&mut rng, 12, 4, components);
        prop_assert!(is_alpha_acyclic(&h));
        let ca = construct_acyclic(&h, None).unwrap();
        prop_assert_eq!(ca.size() as u64, h.max_edge_product().unwrap());
        prop_assert!(bf_covering(&ca, true));
    }

    #[test]
    fn seeded_columns_are_a_permutation(seed in any::<u64>(), shuffle in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_acyclic(&mut rng, 8, 3, false);
        let plain = construct_auto(&h, None).unwrap();
        let shuffled = construct_auto(&h, Some(shuffle)).unwrap();
        prop_assert!(bf_covering(&shuffled, true));
        let columns = |ca: &CoveringArray| {
            let mut cols: Vec<Vec<u32>> = (0..ca.size()).map(|i| ca.rows().values().map(|r| r.get(i)).collect()).collect();
            cols.sort();
            cols
        };
        prop_assert_eq!(columns(&plain), columns(&shuffled));
    }

    #[test]
    fn loose_cycles_are_optimal(k in 3usize..=6, weights in proptest::collection::vec(1u32..=3, 12)) {
        let h = loose_cycle(k, &weights);
        let ca = construct_loose_cycle(&h, None).unwrap();
        prop_assert_eq!(ca.size() as u64, h.max_edge_product().unwrap());
        prop_assert!(bf_covering(&ca, true));
    }

    #[test]
    fn five_vertex_cycles_are_optimal_when_conditions_hold(g in proptest::array::uniform5(1u32..=6)) {
        let h = five_vertex_cycle(g);
        let conditions = g[0] * g[1] * g[2] == h.max_edge_product().unwrap() as u32
            && g[0] % g[3] == 0
            && g[3] <= g[0].min(g[1].max(g[2]));
        match construct_cycle3(&h, None) {
            Ok(ca) => {
                prop_assert_eq!(ca.size() as u64, h.max_edge_product().unwrap());
                prop_assert!(bf_covering(&ca, true));
            }
            Err(e) => prop_assert!(!conditions, "{e}"),
        }
    }
}
