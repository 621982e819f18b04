//! The shared test corpus: the fixtures plus seeded random knowledge bases.

use spel_core::kb_model::KnowledgeBase;
use spel_core::parser::parse_kb;

use crate::fixtures;
use crate::gen::{random_kb, GenConfig};

/// Number of generated members of each configuration.
pub const GENERATED_PER_CONFIG: u64 = 40;

/// Mid-sized generated KBs: every feature enabled, vocabularies small enough for exhaustive saturation.
pub fn small() -> GenConfig {
    GenConfig { concepts: 3, roles: 2, individuals: 2, standpoints: 2, statements: 4, max_depth: 2, ..GenConfig::default() }
}

/// Named corpus members in a fixed order.
pub fn corpus() -> Vec<(String, KnowledgeBase)> {
    let mut out = vec![
        ("example1".to_string(), parse_kb(fixtures::EXAMPLE1).expect("fixture parses")),
        ("merged_example1".to_string(), parse_kb(fixtures::MERGED_EXAMPLE1).expect("fixture parses")),
    ];
    for (tag, cfg) in [("small", small()), ("tiny", GenConfig::tiny())] {
        for seed in 0..GENERATED_PER_CONFIG {
            out.push((format!("{tag}-{seed}"), random_kb(seed, &cfg)));
        }
    }
    out
}
