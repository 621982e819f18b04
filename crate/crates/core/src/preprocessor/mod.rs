//! Translation of normal-form knowledge bases into the interned facts of the calculus.
//!
//! Both-sided GCIs, boxes on the right and concept assertions are all expressed as
//! [`Fact::GciNested`], with assertions using nominal concepts. For every diamond target
//! `◇_s B` and individual `a`, a witness standpoint `s[a/B]` and a concept `P[s/a/B]` are
//! added together with three witness facts.

mod fact;
mod store;
mod universe;

use std::collections::BTreeSet;

pub use fact::{Fact, FactDisplay, Shape, REFUTATION};
pub use store::{FactId, FactStore, Origin};
pub use universe::{Cn, ExtConcept, Ind, Provenance, Rl, Sp, Universe, BOT, STAR, TOP};

use crate::kb_model::{
    is_normal_statement, Axiom, Concept, ConceptName, KnowledgeBase, Literal, Modality, SharpRhs, StandpointName,
    Statement,
};
use crate::normalizer::normalize;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PrepError {
    #[error("statement {index} is not in normal form: {statement}")]
    NotNormal { index: usize, statement: String },
}

fn not_normal(index: usize, stmt: &Statement) -> PrepError {
    PrepError::NotNormal { index, statement: format!("{stmt:?}") }
}

/// Universe of a knowledge base: its vocabulary in sorted order.
pub fn universe_of(kb: &KnowledgeBase) -> Universe {
    let v = kb.vocabulary();
    Universe::new(&v.standpoints, &v.concepts, &v.roles, &v.individuals)
}

fn concept_id(u: &Universe, c: &Concept) -> Option<Cn> {
    match c {
        Concept::Top => Some(TOP),
        Concept::Bottom => Some(BOT),
        Concept::Name(n) => u.cn(&ExtConcept::Name(n.clone())),
        Concept::SelfLoop(r) => u.rl(r).map(|r| u.self_concept(r)),
        Concept::Nominal(a) => u.ind(a).map(|a| u.nominal(a)),
        _ => None,
    }
}

/// Maps one normal statement to its fact.
pub fn statement_fact(u: &Universe, stmt: &Statement) -> Option<Fact> {
    if !is_normal_statement(stmt) {
        return None;
    }
    match stmt {
        Statement::Sharpening { lhs, rhs: SharpRhs::Standpoint(s), .. } => {
            let s = u.sp(s)?;
            match lhs.as_slice() {
                [a] => Some(Fact::Sharper(u.sp(a)?, s)),
                [a, b] => Some(Fact::SharperIntersection(u.sp(a)?, u.sp(b)?, s)),
                _ => None,
            }
        }
        Statement::Formula { standpoint, monomial, .. } => {
            let s = u.sp(standpoint)?;
            let [Literal { axiom, .. }] = monomial.as_slice() else { return None };
            axiom_fact(u, s, axiom)
        }
        _ => None,
    }
}

fn axiom_fact(u: &Universe, s: Sp, axiom: &Axiom) -> Option<Fact> {
    match axiom {
        Axiom::Ria(chain, sup) => {
            let sup = u.rl(sup)?;
            match chain.as_slice() {
                [r] => Some(Fact::Ria2(s, u.rl(r)?, sup)),
                [r1, r2] => Some(Fact::Ria3(s, u.rl(r1)?, u.rl(r2)?, sup)),
                _ => None,
            }
        }
        Axiom::RoleAssertion(r, a, b) => Some(Fact::RoleAssertion(s, u.rl(r)?, u.ind(a)?, u.ind(b)?)),
        Axiom::ConceptAssertion(c, a) => Some(Fact::GciNested(STAR, u.nominal(u.ind(a)?), s, TOP, concept_id(u, c)?)),
        Axiom::Gci(l, r) => {
            if let (Some(l), Some(r)) = (concept_id(u, l), concept_id(u, r)) {
                return Some(Fact::GciNested(STAR, TOP, s, l, r));
            }
            match (l, r) {
                (Concept::Exists(role, c), d) => Some(Fact::GciExLeft(s, u.rl(role)?, concept_id(u, c)?, concept_id(u, d)?)),
                (Concept::And(c1, c2), d) => {
                    Some(Fact::GciConLeft(s, concept_id(u, c1)?, concept_id(u, c2)?, concept_id(u, d)?))
                }
                (c, Concept::Exists(role, d)) => {
                    Some(Fact::GciExRight(s, concept_id(u, c)?, u.rl(role)?, concept_id(u, d)?))
                }
                (c, Concept::Modal(Modality::Box, v, d)) => {
                    Some(Fact::GciNested(s, concept_id(u, c)?, u.sp(v)?, TOP, concept_id(u, d)?))
                }
                (c, Concept::Modal(Modality::Diamond, v, d)) => {
                    Some(Fact::GciDiaRight(s, concept_id(u, c)?, u.sp(v)?, concept_id(u, d)?))
                }
                _ => None,
            }
        }
    }
}

/// One seed fact per statement of a normal-form knowledge base.
pub fn to_extended_facts(kb: &KnowledgeBase) -> Result<FactStore, PrepError> {
    let mut store = FactStore::new(universe_of(kb));
    for (i, stmt) in kb.statements().iter().enumerate() {
        let fact = statement_fact(store.universe(), stmt).ok_or_else(|| not_normal(i, stmt))?;
        store.insert(fact, Origin::Input);
    }
    Ok(store)
}

/// Name of the witness standpoint for target `◇_s B` and individual `a`.
pub fn witness_standpoint_name(s: &str, a: &str, b: &str) -> String {
    format!("{s}[{a}/{b}]")
}

/// Name of the witness concept for target `◇_s B` and individual `a`.
pub fn witness_concept_name(s: &str, a: &str, b: &str) -> String {
    format!("P[{s}/{a}/{b}]")
}

/// Diamond targets `(s, B)` of the seed facts, sorted.
pub fn diamond_targets(store: &FactStore) -> BTreeSet<(Sp, Cn)> {
    store
        .facts()
        .iter()
        .filter_map(|f| match *f {
            Fact::GciDiaRight(_, _, s, b) => Some((s, b)),
            _ => None,
        })
        .collect()
}

/// Adds `s[a/B] ⪯ s`, `□_*[{a} ⊑ □_s[B ⇒ P]]` and `□_*[P ⊑ □_{s[a/B]}[⊤ ⇒ B]]` for every
/// diamond target and individual.
pub fn add_witness_axioms(mut store: FactStore) -> FactStore {
    let targets = diamond_targets(&store);
    let individuals: Vec<Ind> = store.universe().individual_ids().collect();
    for (s, b) in targets {
        for &a in &individuals {
            let u = store.universe();
            let (sn, an, bn) = (u.standpoint(s).to_string(), u.individual(a).to_string(), u.concept(b).to_string());
            let nominal = u.nominal(a);
            let um = store.universe_mut();
            let w = um.add_standpoint(StandpointName::new(&witness_standpoint_name(&sn, &an, &bn)), Provenance::Witness);
            let p = um.add_concept(
                ExtConcept::Name(ConceptName::new(&witness_concept_name(&sn, &an, &bn))),
                Provenance::Witness,
            );
            store.insert(Fact::Sharper(w, s), Origin::Witness);
            store.insert(Fact::GciNested(STAR, nominal, s, b, p), Origin::Witness);
            store.insert(Fact::GciNested(STAR, p, w, TOP, b), Origin::Witness);
        }
    }
    store
}

/// Normalization, translation and witness axioms in one step.
pub fn prep(kb: &KnowledgeBase) -> FactStore {
    prep_normalized(&normalize(kb)).expect("normalizer output is in normal form")
}

/// Translation and witness axioms for an already normalized knowledge base.
pub fn prep_normalized(kb: &KnowledgeBase) -> Result<FactStore, PrepError> {
    Ok(add_witness_axioms(to_extended_facts(kb)?))
}
