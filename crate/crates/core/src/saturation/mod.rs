//! Closure of a fact store under the calculus rules.

mod apply;
mod bound;
mod engine;
mod rules;
pub mod trace;

use std::collections::BTreeMap;

pub use apply::{apply_rule, ApplyError};
pub use bound::polynomial_bound;
pub use rules::{RuleId, S3_SHAPES};

use crate::preprocessor::FactStore;

/// Order in which queued facts are processed. The fixpoint does not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WorklistOrder {
    #[default]
    Fifo,
    Lifo,
}

#[derive(Clone, Debug)]
pub struct SaturationConfig {
    pub early_exit_on_refutation: bool,
    pub fact_limit: usize,
    pub order: WorklistOrder,
}

impl Default for SaturationConfig {
    fn default() -> Self {
        SaturationConfig { early_exit_on_refutation: true, fact_limit: usize::MAX, order: WorklistOrder::Fifo }
    }
}

impl SaturationConfig {
    /// Runs to the full fixpoint, even after a refutation.
    pub fn exhaustive() -> SaturationConfig {
        SaturationConfig { early_exit_on_refutation: false, ..SaturationConfig::default() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SaturationStats {
    pub seed_facts: usize,
    pub processed: usize,
    pub total_facts: usize,
    /// New facts contributed by each rule.
    pub by_rule: BTreeMap<RuleId, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SaturationError {
    #[error("fact limit of {limit} exceeded")]
    FactLimit { limit: usize },
    #[error("{facts} facts exceed the polynomial bound {bound}")]
    BoundExceeded { facts: usize, bound: u128 },
}

pub fn saturate(store: FactStore, config: &SaturationConfig) -> Result<FactStore, SaturationError> {
    saturate_with_stats(store, config).map(|(s, _)| s)
}

pub fn saturate_with_stats(
    store: FactStore,
    config: &SaturationConfig,
) -> Result<(FactStore, SaturationStats), SaturationError> {
    let bound = polynomial_bound(store.universe());
    let (store, stats) = engine::Engine::new(store, config).run()?;
    if store.len() as u128 > bound {
        return Err(SaturationError::BoundExceeded { facts: store.len(), bound });
    }
    Ok((store, stats))
}

/// True iff `□_*[⊤ ⊑ □_*[⊤ ⇒ ⊥]]` is in the store.
pub fn is_refuted(store: &FactStore) -> bool {
    store.is_refuted()
}
