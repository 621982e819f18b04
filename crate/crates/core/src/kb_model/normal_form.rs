use super::kb::KnowledgeBase;
use super::syntax::{Axiom, Concept, Literal, Modality, SharpRhs, Statement};

pub fn is_normal_form(kb: &KnowledgeBase) -> bool {
    kb.statements().iter().all(is_normal_statement)
}

/// The first statement outside normal form, with its position in the KB.
pub fn first_violation(kb: &KnowledgeBase) -> Option<(usize, &Statement)> {
    kb.statements().iter().enumerate().find(|(_, s)| !is_normal_statement(s))
}

pub fn is_normal_statement(stmt: &Statement) -> bool {
    match stmt {
        Statement::Sharpening { negated: false, lhs, rhs: SharpRhs::Standpoint(_) } => {
            lhs.len() == 1 || lhs.len() == 2
        }
        Statement::Sharpening { .. } => false,
        Statement::Formula { modality: Modality::Box, monomial, .. } => match monomial.as_slice() {
            [Literal { negated: false, axiom }] => is_normal_axiom(axiom),
            _ => false,
        },
        Statement::Formula { modality: Modality::Diamond, .. } => false,
    }
}

pub fn is_normal_axiom(ax: &Axiom) -> bool {
    match ax {
        Axiom::Gci(l, r) => is_normal_gci(l, r),
        Axiom::Ria(chain, _) => chain.len() == 1 || chain.len() == 2,
        Axiom::ConceptAssertion(c, _) => matches!(c, Concept::Name(_)),
        Axiom::RoleAssertion(..) => true,
    }
}

fn is_normal_lhs(c: &Concept) -> bool {
    match c {
        Concept::Exists(_, f) => f.is_lhs_basic(),
        Concept::And(a, b) => a.is_lhs_basic() && b.is_lhs_basic(),
        other => other.is_lhs_basic(),
    }
}

fn is_normal_rhs(c: &Concept) -> bool {
    match c {
        Concept::Exists(_, f) | Concept::Modal(_, _, f) => f.is_rhs_basic(),
        other => other.is_rhs_basic(),
    }
}

fn is_normal_gci(l: &Concept, r: &Concept) -> bool {
    is_normal_lhs(l) && is_normal_rhs(r) && (l.is_atomic() || r.is_atomic())
}
