use std::collections::BTreeSet;

use spel_core::datalog::{export, parse_program, Constants, PREDICATES};
use spel_core::preprocessor::prep;
use spel_core::saturation::{is_refuted, saturate, SaturationConfig};
use spel_testkit::corpus::corpus;
use spel_testkit::datalog::evaluate;

/// Larger fixpoints are skipped to keep the reference evaluator's runtime modest.
const MAX_FACTS: usize = 60_000;

#[test]
fn exported_program_has_the_native_fixpoint() {
    for (name, kb) in corpus() {
        let seeds = prep(&kb);
        let store = saturate(seeds.clone(), &SaturationConfig::exhaustive()).unwrap();
        if store.len() > MAX_FACTS {
            continue;
        }
        let program = parse_program(&export(&seeds).program_text()).unwrap();
        let db = evaluate(&program);
        let k = Constants::new(store.universe());
        let native: BTreeSet<(String, Vec<String>)> =
            store.facts().iter().map(|f| { let (p, a) = k.fact(f); (p.to_string(), a) }).collect();
        let mut datalog = BTreeSet::new();
        for (pred, _) in &PREDICATES[..10] {
            for t in db.relation(pred) {
                datalog.insert((pred.to_string(), t));
            }
        }
        let missing: Vec<_> = native.difference(&datalog).take(3).collect();
        let extra: Vec<_> = datalog.difference(&native).take(3).collect();
        assert!(missing.is_empty() && extra.is_empty(), "{name}: missing {missing:?}, extra {extra:?}");
        assert_eq!(
            db.contains("gci_nested", &["STAR", "TOP", "STAR", "TOP", "BOT"]),
            is_refuted(&store),
            "{name}"
        );
    }
}

#[test]
fn merged_example_refuted_in_datalog() {
    let kb = spel_testkit::fixtures::example1();
    let merged = spel_core::parser::parse_kb(spel_testkit::fixtures::MERGED_EXAMPLE1).unwrap();
    for (kb, refuted) in [(kb, false), (merged, true)] {
        let db = evaluate(&parse_program(&export(&prep(&kb)).program_text()).unwrap());
        assert_eq!(db.contains("gci_nested", &["STAR", "TOP", "STAR", "TOP", "BOT"]), refuted);
    }
}
