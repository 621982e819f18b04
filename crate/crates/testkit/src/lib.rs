//! Shared helpers for the spel test suites: fixture texts, seeded random knowledge bases
//! and a reference Datalog evaluator.

pub mod corpus;
pub mod datalog;
pub mod fixtures;
pub mod gen;
