//! The symbol-count size measure on concepts, axioms, statements and KBs.

use super::kb::KnowledgeBase;
use super::syntax::{Axiom, Concept, Literal, Statement};

pub fn concept_size(c: &Concept) -> usize {
    match c {
        Concept::Top | Concept::Bottom | Concept::Name(_) | Concept::SelfLoop(_) | Concept::Nominal(_) => 1,
        Concept::And(l, r) => 1 + concept_size(l) + concept_size(r),
        Concept::Exists(_, f) => 1 + concept_size(f),
        Concept::Modal(_, _, inner) => 1 + concept_size(inner),
    }
}

pub fn axiom_size(ax: &Axiom) -> usize {
    match ax {
        Axiom::Gci(l, r) => 1 + concept_size(l) + concept_size(r),
        Axiom::Ria(chain, _) => chain.len() + 1,
        Axiom::ConceptAssertion(c, _) => 1 + concept_size(c),
        Axiom::RoleAssertion(..) => 3,
    }
}

pub fn literal_size(lit: &Literal) -> usize {
    axiom_size(&lit.axiom) + usize::from(lit.negated)
}

pub fn statement_size(stmt: &Statement) -> usize {
    match stmt {
        Statement::Formula { monomial, .. } => 1 + monomial.iter().map(literal_size).sum::<usize>(),
        Statement::Sharpening { negated, lhs, .. } => lhs.len() + 1 + usize::from(*negated),
    }
}

pub fn size(kb: &KnowledgeBase) -> usize {
    kb.statements().iter().map(statement_size).sum()
}
