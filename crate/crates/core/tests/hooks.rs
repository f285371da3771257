mod common;

use common::{bf_covering, hook_round_trip, random_acyclic, random_hook};
use hyperca::constructors::construct_acyclic;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hooks_are_undone_by_deleting_rows_and_edges(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_acyclic(&mut rng, 8, 4, false);
        let mut ca = construct_acyclic(&h, None).unwrap();
        prop_assert!(bf_covering(&ca, true));
        let mut applied = 0;
        for attempt in 0..40 {
            let Some(step) = random_hook(&mut rng, &ca, attempt, 4) else { continue };
            if let Some(outcome) = hook_round_trip(&ca, &step) {
                ca = outcome.map_err(TestCaseError::fail)?;
                applied += 1;
            }
        }
        prop_assert!(applied > 0);
    }
}

#[test]
fn every_kind_applies_somewhere() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut hits = [0; 5];
    for _ in 0..20 {
        let h = random_acyclic(&mut rng, 6, 3, false);
        let ca = construct_acyclic(&h, None).unwrap();
        for (kind, hit) in hits.iter_mut().enumerate() {
            for _ in 0..10 {
                let Some(step) = random_hook(&mut rng, &ca, kind, 3) else {
                    continue;
                };
                if let Some(outcome) = hook_round_trip(&ca, &step) {
                    outcome.unwrap();
                    *hit += 1;
                }
            }
        }
    }
    assert!(hits.iter().all(|&c| c > 0), "{hits:?}");
}
