mod common;

use common::{bf_covering, hypergraph, oracle_corpus};
use hyperca::constructors::construct_auto;
use hyperca::model::{VertexId, WeightedHypergraph};
use hyperca::oracle::{exists_ca_of_size, min_can, SearchOutcome, DEFAULT_ORACLE_BUDGET};
use hyperca::structure::complete_uniform;
use proptest::prelude::*;

#[test]
fn oracle_matches_product_weight_on_supported_instances() {
    for (name, h) in oracle_corpus() {
        let pw = h.max_edge_product().unwrap() as usize;
        assert!(pw <= 12 && h.vertex_count() <= 5, "{name}");
        let built = construct_auto(&h, None).unwrap();
        assert_eq!(built.size(), pw, "{name}");
        assert_eq!(min_can(&h, DEFAULT_ORACLE_BUDGET).unwrap(), pw, "{name}");
    }
}

#[test]
fn complete_four_has_no_array_below_eight() {
    let k4 = complete_uniform(4, 3, &[2; 4]).unwrap();
    let n = min_can(&k4, DEFAULT_ORACLE_BUDGET).unwrap();
    assert!(n >= 8);
    assert_eq!(
        exists_ca_of_size(&k4, n - 1, DEFAULT_ORACLE_BUDGET).unwrap(),
        SearchOutcome::Infeasible
    );
}

fn tiny() -> impl Strategy<Value = WeightedHypergraph> {
    let edge = proptest::sample::subsequence((1..=4).collect::<Vec<VertexId>>(), 2..=3);
    (
        proptest::collection::btree_set(edge, 1..4),
        proptest::collection::vec(1u32..=2, 4),
    )
        .prop_map(|(edges, w)| {
            let edges: Vec<Vec<VertexId>> = edges.into_iter().collect();
            let ws: Vec<(VertexId, u32)> = (1..=4).map(|v| (v, w[v as usize - 1])).collect();
            hypergraph(&ws, &edges)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn search_is_sound_and_monotone(h in tiny()) {
        let pw = h.max_edge_product().unwrap() as usize;
        let n = min_can(&h, DEFAULT_ORACLE_BUDGET).unwrap();
        prop_assert!(n >= pw);
        for m in [n, n + 1, n + 3] {
            match exists_ca_of_size(&h, m, DEFAULT_ORACLE_BUDGET).unwrap() {
                SearchOutcome::Found(ca) => {
                    prop_assert_eq!(ca.size(), m);
                    prop_assert!(bf_covering(&ca, false));
                }
                SearchOutcome::Infeasible => prop_assert!(false, "no array at {m} >= {n}"),
            }
        }
        if n > 1 {
            prop_assert_eq!(exists_ca_of_size(&h, n - 1, DEFAULT_ORACLE_BUDGET).unwrap(), SearchOutcome::Infeasible);
        }
    }
}
