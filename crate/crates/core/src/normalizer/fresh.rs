use std::collections::HashSet;

use crate::kb_model::{ConceptName, RoleName, StandpointName, Vocabulary, RESERVED_PREFIX};

/// Deterministic generator of names that cannot clash with user names or each other.
///
/// Names look like `_g19_0003`: reserved prefix, the tag of the producing rule, a shared counter.
#[derive(Clone, Debug)]
pub struct FreshNameFactory {
    counter: usize,
    prefix: String,
    taken: HashSet<String>,
}

impl FreshNameFactory {
    pub fn new(vocab: &Vocabulary) -> FreshNameFactory {
        FreshNameFactory::with_prefix(vocab, &format!("{RESERVED_PREFIX}g"))
    }

    pub fn with_prefix(vocab: &Vocabulary, prefix: &str) -> FreshNameFactory {
        let mut taken = HashSet::new();
        taken.extend(vocab.concepts.iter().map(|n| n.to_string()));
        taken.extend(vocab.roles.iter().map(|n| n.to_string()));
        taken.extend(vocab.individuals.iter().map(|n| n.to_string()));
        taken.extend(vocab.standpoints.iter().map(|n| n.to_string()));
        FreshNameFactory { counter: 0, prefix: prefix.to_string(), taken }
    }

    /// Number of names handed out so far.
    pub fn issued(&self) -> usize {
        self.counter
    }

    fn next(&mut self, tag: &str) -> String {
        loop {
            self.counter += 1;
            let name = format!("{}{}_{:04}", self.prefix, tag, self.counter);
            if self.taken.insert(name.clone()) {
                return name;
            }
        }
    }

    pub fn concept(&mut self, tag: &str) -> ConceptName {
        ConceptName::new(&self.next(tag))
    }

    pub fn role(&mut self, tag: &str) -> RoleName {
        RoleName::new(&self.next(tag))
    }

    pub fn standpoint(&mut self, tag: &str) -> StandpointName {
        StandpointName::new(&self.next(tag))
    }
}
