//! Vocabularies, concept terms, axioms, statements and knowledge bases.

mod kb;
mod names;
mod normal_form;
mod size;
mod syntax;
mod vocabulary;

pub use kb::{vocabulary_of, KnowledgeBase};
pub use names::{ConceptName, IndividualName, RoleName, StandpointName, RESERVED_PREFIX};
pub use normal_form::{first_violation, is_normal_axiom, is_normal_form, is_normal_statement};
pub use size::{axiom_size, concept_size, literal_size, size, statement_size};
pub use syntax::{Axiom, Concept, Literal, Modality, Query, SharpRhs, Statement};
pub use vocabulary::Vocabulary;

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> StandpointName {
        StandpointName::new(s)
    }

    #[test]
    fn size_of_disjointness_axiom() {
        let stmt = Statement::boxed(
            sp("SN"),
            Axiom::Gci(Concept::and(Concept::name("Tissue"), Concept::name("Process")), Concept::Bottom),
        );
        assert_eq!(statement_size(&stmt), 6);
        assert_eq!(size(&KnowledgeBase::from_statements([stmt])), 6);
    }

    #[test]
    fn size_of_empty_kb_and_sharpening() {
        assert_eq!(size(&KnowledgeBase::empty()), 0);
        assert_eq!(statement_size(&Statement::sharper(sp("H"), sp("SN"))), 2);
        let neg = Statement::sharpening(true, vec![sp("H"), sp("L")], SharpRhs::Empty);
        assert_eq!(statement_size(&neg), 4);
    }

    #[test]
    fn size_counts_negation_and_modal_wrapper() {
        let r = RoleName::new("R");
        let lit = Literal::neg(Axiom::RoleAssertion(r.clone(), "a".into(), "b".into()));
        let ria = Literal::pos(Axiom::Ria(vec![r.clone(), r.clone(), r.clone()], r));
        let stmt = Statement::formula(Modality::Diamond, sp("s"), vec![lit, ria]);
        assert_eq!(statement_size(&stmt), 1 + 4 + 4);
    }

    #[test]
    fn normal_form_examples() {
        let r = RoleName::new("R");
        let good = Statement::boxed(sp("s"), Axiom::Gci(Concept::name("A"), Concept::exists(r.clone(), Concept::name("B"))));
        assert!(is_normal_form(&KnowledgeBase::from_statements([good])));
        let deep = Statement::boxed(
            sp("s"),
            Axiom::Gci(
                Concept::exists(r.clone(), Concept::exists(RoleName::new("Q"), Concept::name("A"))),
                Concept::name("B"),
            ),
        );
        assert!(!is_normal_form(&KnowledgeBase::from_statements([deep])));
        assert!(is_normal_form(&KnowledgeBase::empty()));
    }

    #[test]
    fn normal_form_requires_an_atomic_side_and_basic_arguments() {
        let r = RoleName::new("R");
        let both_complex = Axiom::Gci(
            Concept::exists(r.clone(), Concept::name("A")),
            Concept::exists(r.clone(), Concept::name("B")),
        );
        assert!(!is_normal_axiom(&both_complex));
        assert!(is_normal_axiom(&Axiom::Gci(Concept::Top, Concept::exists(r.clone(), Concept::Bottom))));
        assert!(!is_normal_axiom(&Axiom::Gci(Concept::name("A"), Concept::exists(r.clone(), Concept::Top))));
        assert!(!is_normal_axiom(&Axiom::Gci(Concept::name("A"), Concept::Top)));
        assert!(!is_normal_axiom(&Axiom::Gci(Concept::Bottom, Concept::name("A"))));
        assert!(is_normal_axiom(&Axiom::Gci(
            Concept::and(Concept::SelfLoop(r.clone()), Concept::Top),
            Concept::name("A")
        )));
        assert!(is_normal_axiom(&Axiom::Gci(
            Concept::name("A"),
            Concept::modal(Modality::Diamond, sp("t"), Concept::Bottom)
        )));
        assert!(!is_normal_axiom(&Axiom::ConceptAssertion(Concept::Top, "a".into())));
        assert!(!is_normal_statement(&Statement::sharpening(false, vec![sp("a"), sp("b"), sp("c")], SharpRhs::Standpoint(sp("d")))));
        assert!(!is_normal_statement(&Statement::sharpening(false, vec![sp("a")], SharpRhs::Empty)));
    }

    #[test]
    fn vocabulary_of_collects_occurring_names() {
        let stmt = Statement::boxed(sp("s"), Axiom::ConceptAssertion(Concept::name("A"), "a".into()));
        let v = vocabulary_of(&KnowledgeBase::from_statements([stmt]));
        assert_eq!(v.concepts.len(), 1);
        assert_eq!(v.individuals.len(), 1);
        assert_eq!(v.standpoints, [sp("*"), sp("s")].into_iter().collect());
        assert_eq!(vocabulary_of(&KnowledgeBase::empty()).standpoints, [sp("*")].into_iter().collect());
    }

    #[test]
    fn kb_equality_ignores_order_and_duplicates() {
        let a = Statement::sharper(sp("a"), sp("b"));
        let b = Statement::sharper(sp("b"), sp("c"));
        let k1 = KnowledgeBase::from_statements([a.clone(), b.clone(), a.clone()]);
        let k2 = KnowledgeBase::from_statements([b, a]);
        assert_eq!(k1.len(), 2);
        assert_eq!(k1, k2);
    }

    #[test]
    fn kind_conflicts_are_detected() {
        let mut v = Vocabulary::new();
        v.concepts.insert("X".into());
        v.roles.insert("X".into());
        assert_eq!(v.kind_conflicts(), vec!["X".to_string()]);
    }
}
