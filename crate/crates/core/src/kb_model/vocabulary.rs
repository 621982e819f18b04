use std::collections::BTreeSet;

use super::names::{ConceptName, IndividualName, RoleName, StandpointName};

/// The four name sets of a knowledge base. `*` is always a standpoint; `0` never is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vocabulary {
    pub concepts: BTreeSet<ConceptName>,
    pub roles: BTreeSet<RoleName>,
    pub individuals: BTreeSet<IndividualName>,
    pub standpoints: BTreeSet<StandpointName>,
}

impl Default for Vocabulary {
    fn default() -> Self {
        Vocabulary::new()
    }
}

impl Vocabulary {
    pub fn new() -> Vocabulary {
        Vocabulary {
            concepts: BTreeSet::new(),
            roles: BTreeSet::new(),
            individuals: BTreeSet::new(),
            standpoints: BTreeSet::from([StandpointName::star()]),
        }
    }

    pub fn union_with(&mut self, other: &Vocabulary) {
        self.concepts.extend(other.concepts.iter().cloned());
        self.roles.extend(other.roles.iter().cloned());
        self.individuals.extend(other.individuals.iter().cloned());
        self.standpoints.extend(other.standpoints.iter().cloned());
    }

    /// True if `text` is used as a name of any kind.
    pub fn contains_text(&self, text: &str) -> bool {
        self.concepts.contains(&ConceptName::new(text))
            || self.roles.contains(&RoleName::new(text))
            || self.individuals.contains(&IndividualName::new(text))
            || self.standpoints.contains(&StandpointName::new(text))
    }

    /// Names that occur in more than one of the four sets.
    pub fn kind_conflicts(&self) -> Vec<String> {
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut clashes = BTreeSet::new();
        let all = self
            .concepts
            .iter()
            .map(|n| n.as_str())
            .chain(self.roles.iter().map(|n| n.as_str()))
            .chain(self.individuals.iter().map(|n| n.as_str()))
            .chain(self.standpoints.iter().map(|n| n.as_str()));
        for text in all {
            if !seen.insert(text) {
                clashes.insert(text.to_string());
            }
        }
        clashes.into_iter().collect()
    }

    pub fn len(&self) -> usize {
        self.concepts.len() + self.roles.len() + self.individuals.len() + self.standpoints.len()
    }

    /// Only `*` is present.
    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty() && self.roles.is_empty() && self.individuals.is_empty() && self.standpoints.len() <= 1
    }
}
