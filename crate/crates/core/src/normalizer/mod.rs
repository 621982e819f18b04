//! Rewriting of arbitrary knowledge bases into normal form.
//!
//! Two phases run one after the other, each a FIFO worklist where every statement is
//! tested against the rules of its phase in ascending order. Products of a rewrite are
//! queued at the back.

mod fresh;
mod rules;

use std::collections::{BTreeMap, VecDeque};

pub use fresh::FreshNameFactory;
pub use rules::NormRule;

use crate::kb_model::{KnowledgeBase, Statement, Vocabulary};

/// Counts of rule applications during a normalization run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalizeStats {
    pub applications: BTreeMap<NormRule, usize>,
}

impl NormalizeStats {
    pub fn total(&self) -> usize {
        self.applications.values().sum()
    }

    pub fn count(&self, rule: NormRule) -> usize {
        self.applications.get(&rule).copied().unwrap_or(0)
    }

    fn record(&mut self, rule: NormRule) {
        *self.applications.entry(rule).or_default() += 1;
    }
}

type Step = fn(&Statement, &mut FreshNameFactory) -> Option<(NormRule, Vec<Statement>)>;

fn run(kb: &KnowledgeBase, fresh: &mut FreshNameFactory, stats: &mut NormalizeStats, step: Step) -> KnowledgeBase {
    let mut queue: VecDeque<Statement> = kb.statements().iter().cloned().collect();
    let mut done = Vec::new();
    while let Some(stmt) = queue.pop_front() {
        match step(&stmt, fresh) {
            Some((rule, products)) => {
                stats.record(rule);
                queue.extend(products);
            }
            None => done.push(stmt),
        }
    }
    KnowledgeBase::new(kb.vocabulary().clone(), done)
}

/// Eliminates diamonds, negations and multi-literal monomials.
pub fn normalize_phase1(kb: &KnowledgeBase, fresh: &mut FreshNameFactory) -> KnowledgeBase {
    run(kb, fresh, &mut NormalizeStats::default(), rules::phase1)
}

/// Decomposes the single-axiom output of phase one into normal form.
pub fn normalize_phase2(kb: &KnowledgeBase, fresh: &mut FreshNameFactory) -> KnowledgeBase {
    run(kb, fresh, &mut NormalizeStats::default(), rules::phase2)
}

pub fn normalize(kb: &KnowledgeBase) -> KnowledgeBase {
    normalize_with_stats(kb).0
}

pub fn normalize_with_stats(kb: &KnowledgeBase) -> (KnowledgeBase, NormalizeStats) {
    let mut fresh = FreshNameFactory::new(kb.vocabulary());
    let mut stats = NormalizeStats::default();
    let mid = run(kb, &mut fresh, &mut stats, rules::phase1);
    let out = run(&mid, &mut fresh, &mut stats, rules::phase2);
    (out, stats)
}

/// Names introduced by normalization: the vocabulary of `normalized` minus that of `original`.
pub fn fresh_names(original: &KnowledgeBase, normalized: &KnowledgeBase) -> Vocabulary {
    let (a, b) = (original.vocabulary(), normalized.vocabulary());
    Vocabulary {
        concepts: b.concepts.difference(&a.concepts).cloned().collect(),
        roles: b.roles.difference(&a.roles).cloned().collect(),
        individuals: b.individuals.difference(&a.individuals).cloned().collect(),
        standpoints: b.standpoints.difference(&a.standpoints).cloned().collect(),
    }
}

#[cfg(test)]
mod tests;
