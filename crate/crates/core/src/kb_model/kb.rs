use std::collections::{BTreeSet, HashSet};

use super::syntax::Statement;
use super::vocabulary::Vocabulary;

/// A finite set of statements over a vocabulary.
///
/// Statement order is kept for presentation; equality ignores it.
#[derive(Clone, Debug, Default)]
pub struct KnowledgeBase {
    vocabulary: Vocabulary,
    statements: Vec<Statement>,
}

impl KnowledgeBase {
    /// Builds a KB, dropping duplicate statements and adding every occurring name to the vocabulary.
    pub fn new(mut vocabulary: Vocabulary, statements: impl IntoIterator<Item = Statement>) -> KnowledgeBase {
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for stmt in statements {
            let stmt = stmt.canonical();
            if seen.insert(stmt.clone()) {
                stmt.collect_names(&mut vocabulary);
                kept.push(stmt);
            }
        }
        KnowledgeBase { vocabulary, statements: kept }
    }

    pub fn from_statements(statements: impl IntoIterator<Item = Statement>) -> KnowledgeBase {
        KnowledgeBase::new(Vocabulary::new(), statements)
    }

    pub fn empty() -> KnowledgeBase {
        KnowledgeBase::default()
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocabulary
    }

    pub fn statements(&self) -> &[Statement] {
        &self.statements
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    /// The KB extended by `extra` statements (vocabulary grows as needed).
    pub fn with_statements(&self, extra: impl IntoIterator<Item = Statement>) -> KnowledgeBase {
        KnowledgeBase::new(
            self.vocabulary.clone(),
            self.statements.iter().cloned().chain(extra),
        )
    }

    pub fn with_vocabulary(&self, extra: &Vocabulary) -> KnowledgeBase {
        let mut vocab = self.vocabulary.clone();
        vocab.union_with(extra);
        KnowledgeBase { vocabulary: vocab, statements: self.statements.clone() }
    }

    /// Statements in sorted order, for order-insensitive comparison.
    pub fn canonical_statements(&self) -> BTreeSet<&Statement> {
        self.statements.iter().collect()
    }
}

impl PartialEq for KnowledgeBase {
    fn eq(&self, other: &Self) -> bool {
        self.vocabulary == other.vocabulary && self.canonical_statements() == other.canonical_statements()
    }
}

impl Eq for KnowledgeBase {}

/// Names declared in the KB together with all names occurring in its statements.
pub fn vocabulary_of(kb: &KnowledgeBase) -> Vocabulary {
    let mut vocab = kb.vocabulary.clone();
    for stmt in &kb.statements {
        stmt.collect_names(&mut vocab);
    }
    vocab
}
