mod common;

use common::{check_decomposition, random_split};
use hyperca::tripartite::{is_balanced_hypergraph, BalanceCheck, MAX_COLORING_VERTICES};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn splits_decompose_into_delta_matchings(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(split) = random_split(&mut rng, 30) {
            prop_assert!(split.edge_count() <= 30);
            check_decomposition(&split).map_err(TestCaseError::fail)?;
        }
    }

    #[test]
    fn splits_are_balanced(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(split) = random_split(&mut rng, 24) {
            let hg = split.hypergraph();
            let check = if hg.vertex_count() <= MAX_COLORING_VERTICES {
                BalanceCheck::TwoColoring
            } else {
                BalanceCheck::default()
            };
            prop_assert!(is_balanced_hypergraph(&hg, check).unwrap());
        }
    }
}

#[test]
fn larger_splits_decompose() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 20 {
        if let Some(split) = random_split(&mut rng, 72) {
            check_decomposition(&split).unwrap();
            done += 1;
        }
    }
}
