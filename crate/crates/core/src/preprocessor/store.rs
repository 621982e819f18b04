use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::fact::{Fact, REFUTATION};
use super::universe::Universe;
use crate::saturation::RuleId;

/// Position of a fact in its store.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactId(pub u32);

impl FactId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Where a fact came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Translated from a statement of the normalized knowledge base.
    Input,
    /// One of the witness axioms added for a diamond target and an individual.
    Witness,
    /// Concluded by a calculus rule from earlier facts.
    Derived { rule: RuleId, premises: SmallVec<[FactId; 4]> },
}

/// An append-only set of facts over a fixed [`Universe`], with one origin per fact.
#[derive(Clone, Debug)]
pub struct FactStore {
    universe: Universe,
    facts: Vec<Fact>,
    origins: Vec<Origin>,
    ids: FxHashMap<Fact, FactId>,
    complete: bool,
}

impl FactStore {
    pub fn new(universe: Universe) -> FactStore {
        FactStore { universe, facts: Vec::new(), origins: Vec::new(), ids: FxHashMap::default(), complete: true }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub(crate) fn universe_mut(&mut self) -> &mut Universe {
        &mut self.universe
    }

    /// Adds a fact unless present. Returns its id and whether it was new.
    pub fn insert(&mut self, fact: Fact, origin: Origin) -> (FactId, bool) {
        if let Some(&id) = self.ids.get(&fact) {
            return (id, false);
        }
        let id = FactId(self.facts.len() as u32);
        self.facts.push(fact);
        self.origins.push(origin);
        self.ids.insert(fact, id);
        (id, true)
    }

    pub fn contains(&self, fact: &Fact) -> bool {
        self.ids.contains_key(fact)
    }

    pub fn id_of(&self, fact: &Fact) -> Option<FactId> {
        self.ids.get(fact).copied()
    }

    pub fn fact(&self, id: FactId) -> Fact {
        self.facts[id.index()]
    }

    pub fn origin(&self, id: FactId) -> &Origin {
        &self.origins[id.index()]
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn facts(&self) -> &[Fact] {
        &self.facts
    }

    pub fn iter(&self) -> impl Iterator<Item = (FactId, &Fact, &Origin)> {
        self.facts.iter().zip(&self.origins).enumerate().map(|(i, (f, o))| (FactId(i as u32), f, o))
    }

    /// Facts not produced by a calculus rule.
    pub fn seed_facts(&self) -> impl Iterator<Item = &Fact> {
        self.iter().filter(|(_, _, o)| !matches!(o, Origin::Derived { .. })).map(|(_, f, _)| f)
    }

    /// False when saturation stopped before reaching the fixpoint.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub(crate) fn set_complete(&mut self, complete: bool) {
        self.complete = complete;
    }

    pub fn is_refuted(&self) -> bool {
        self.contains(&REFUTATION)
    }
}
