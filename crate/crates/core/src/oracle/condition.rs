use crate::kb_model::{
    Axiom, Concept, KnowledgeBase, Modality, Query, SharpRhs, StandpointName, Statement, Vocabulary,
};
use crate::preprocessor::{Cn, ExtConcept, Fact, FactStore, Universe};

/// A requirement on a standpoint structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// The statement is satisfied.
    Holds(Statement),
    /// The statement is violated.
    Fails(Statement),
    /// `□_t[C ⊑ □_s[D ⇒ E]]`.
    Nested { outer: StandpointName, lhs: Concept, inner: StandpointName, guard: Concept, rhs: Concept },
}

impl Condition {
    pub fn collect_names(&self, vocab: &mut Vocabulary) {
        match self {
            Condition::Holds(s) | Condition::Fails(s) => s.collect_names(vocab),
            Condition::Nested { outer, lhs, inner, guard, rhs } => {
                vocab.standpoints.insert(outer.clone());
                vocab.standpoints.insert(inner.clone());
                for c in [lhs, guard, rhs] {
                    c.collect_names(vocab);
                }
            }
        }
    }
}

pub fn kb_conditions(kb: &KnowledgeBase) -> Vec<Condition> {
    kb.statements().iter().cloned().map(Condition::Holds).collect()
}

/// The condition stating that `query` is false.
pub fn query_countercondition(query: &Query) -> Condition {
    match query {
        Query::Statement(s) => Condition::Fails(s.clone()),
        Query::NotFormula { modality, standpoint, monomial } => {
            Condition::Holds(Statement::formula(*modality, standpoint.clone(), monomial.clone()))
        }
    }
}

/// The concept term denoted by an interned concept.
pub fn ext_concept_term(u: &Universe, c: Cn) -> Concept {
    match u.concept(c) {
        ExtConcept::Top => Concept::Top,
        ExtConcept::Bottom => Concept::Bottom,
        ExtConcept::Name(n) => Concept::Name(n.clone()),
        ExtConcept::Nominal(a) => Concept::Nominal(a.clone()),
        ExtConcept::SelfConcept(r) => Concept::SelfLoop(r.clone()),
    }
}

/// The statement a fact stands for.
pub fn fact_condition(u: &Universe, fact: &Fact) -> Condition {
    let sp = |s| u.standpoint(s).clone();
    let cn = |c| ext_concept_term(u, c);
    let rl = |r| u.role(r).clone();
    let boxed = |s, ax| Condition::Holds(Statement::boxed(sp(s), ax));
    match *fact {
        Fact::Sharper(a, b) => Condition::Holds(Statement::sharper(sp(a), sp(b))),
        Fact::SharperIntersection(a, b, c) => {
            Condition::Holds(Statement::sharpening(false, vec![sp(a), sp(b)], SharpRhs::Standpoint(sp(c))))
        }
        Fact::Ria2(s, r, r1) => boxed(s, Axiom::Ria(vec![rl(r)], rl(r1))),
        Fact::Ria3(s, r1, r2, r) => boxed(s, Axiom::Ria(vec![rl(r1), rl(r2)], rl(r))),
        Fact::GciNested(t, c, s, d, e) => {
            Condition::Nested { outer: sp(t), lhs: cn(c), inner: sp(s), guard: cn(d), rhs: cn(e) }
        }
        Fact::GciDiaRight(t, c, s, d) => boxed(t, Axiom::Gci(cn(c), Concept::modal(Modality::Diamond, sp(s), cn(d)))),
        Fact::GciExRight(s, c, r, d) => boxed(s, Axiom::Gci(cn(c), Concept::exists(rl(r), cn(d)))),
        Fact::GciExLeft(s, r, c, d) => boxed(s, Axiom::Gci(Concept::exists(rl(r), cn(c)), cn(d))),
        Fact::GciConLeft(s, a, b, d) => boxed(s, Axiom::Gci(Concept::and(cn(a), cn(b)), cn(d))),
        Fact::RoleAssertion(s, r, a, b) => boxed(s, Axiom::RoleAssertion(rl(r), u.individual(a).clone(), u.individual(b).clone())),
    }
}

/// Conditions for the seed facts of a preprocessed store.
pub fn seed_conditions(store: &FactStore) -> Vec<Condition> {
    store.seed_facts().map(|f| fact_condition(store.universe(), f)).collect()
}
