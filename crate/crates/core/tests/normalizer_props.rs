use proptest::prelude::*;
use spel_core::kb_model::{first_violation, size, Vocabulary};
use spel_core::normalizer::{fresh_names, normalize_with_stats};
use spel_testkit::gen::{random_kb, GenConfig};

fn disjoint(a: &Vocabulary, b: &Vocabulary) -> bool {
    a.concepts.is_disjoint(&b.concepts)
        && a.roles.is_disjoint(&b.roles)
        && a.individuals.is_disjoint(&b.individuals)
        && a.standpoints.is_disjoint(&b.standpoints)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn output_is_normal_and_linear(seed in any::<u64>(), statements in 1usize..12, depth in 1usize..5) {
        let cfg = GenConfig { statements, max_depth: depth, ..GenConfig::default() };
        let kb = random_kb(seed, &cfg);
        let (out, stats) = normalize_with_stats(&kb);
        prop_assert!(first_violation(&out).is_none(), "{:?}", first_violation(&out));
        prop_assert!(size(&out) <= 30 * size(&kb) + 50);
        prop_assert!(stats.total() <= 50 * size(&kb));
        let new = fresh_names(&kb, &out);
        prop_assert!(disjoint(&new, kb.vocabulary()));
        prop_assert!(new.concepts.iter().all(|n| n.is_reserved()));
        prop_assert!(new.roles.iter().all(|n| n.is_reserved()));
        prop_assert!(new.standpoints.iter().all(|n| n.is_reserved()));
    }

    #[test]
    fn normalization_is_idempotent(seed in any::<u64>()) {
        let kb = random_kb(seed, &GenConfig::default());
        let once = normalize_with_stats(&kb).0;
        let (twice, stats) = normalize_with_stats(&once);
        prop_assert_eq!(stats.total(), 0);
        prop_assert_eq!(twice, once);
    }
}
