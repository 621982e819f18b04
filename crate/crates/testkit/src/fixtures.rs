//! Fixture sources stored under the workspace `fixtures/` directory.

pub const EXAMPLE1: &str = include_str!("../../../fixtures/example1.spel");
pub const MERGED_EXAMPLE1: &str = include_str!("../../../fixtures/merged_example1.spel");
pub const EXAMPLE2_QUERIES: &str = include_str!("../../../fixtures/example2_queries.spel");

/// Absolute path of a file in the fixtures directory.
pub fn path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn example1() -> spel_core::kb_model::KnowledgeBase {
    spel_core::parser::parse_kb(EXAMPLE1).expect("example fixture parses")
}
