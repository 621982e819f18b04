use super::*;
use crate::kb_model::{is_normal_form, size, Axiom, Concept, Modality, SharpRhs, StandpointName, Statement};
use crate::parser::parse_kb;

fn sp(s: &str) -> StandpointName {
    StandpointName::new(s)
}

fn c(s: &str) -> Concept {
    Concept::name(s)
}

fn phase1_of(text: &str) -> KnowledgeBase {
    let kb = parse_kb(text).unwrap();
    let mut fresh = FreshNameFactory::new(kb.vocabulary());
    normalize_phase1(&kb, &mut fresh)
}

fn phase2_of(text: &str) -> KnowledgeBase {
    let kb = parse_kb(text).unwrap();
    let mut fresh = FreshNameFactory::new(kb.vocabulary());
    normalize_phase2(&kb, &mut fresh)
}

#[test]
fn diamond_formula_gets_fresh_standpoint() {
    let out = phase1_of("dia L { Tumour(b); }");
    let v = sp("_g17_0001");
    assert_eq!(
        out.statements(),
        &[
            Statement::sharper(v.clone(), sp("L")),
            Statement::boxed(v, Axiom::ConceptAssertion(c("Tumour"), "b".into())),
        ]
    );
}

#[test]
fn negated_gci_compiles_to_three_axioms() {
    let out = phase1_of("box s { not C sub D; }");
    let a = c("_g19_0001");
    let r = crate::kb_model::RoleName::new("_g19_0002");
    assert_eq!(
        out.statements(),
        &[
            Statement::boxed(sp("s"), Axiom::Gci(a.clone(), c("C"))),
            Statement::boxed(sp("s"), Axiom::Gci(Concept::and(a.clone(), c("D")), Concept::Bottom)),
            Statement::boxed(sp("s"), Axiom::Gci(Concept::Top, Concept::exists(r, a))),
        ]
    );
}

#[test]
fn split_kb_is_unchanged() {
    let kb = parse_kb("box s { A sub B; }").unwrap();
    assert_eq!(normalize(&kb), kb);
    assert_eq!(phase1_of("box s { A sub B; }"), kb);
}

#[test]
fn phase1_output_has_only_boxed_single_positive_literals() {
    let out = phase1_of(
        "dia s { not A sub B; not R(a, b); not (ex R.A)(a); not R o S sub T; }\n\
         not (s & t <= u); not (s <= 0);",
    );
    for stmt in out.statements() {
        match stmt {
            Statement::Formula { modality, monomial, .. } => {
                assert_eq!(*modality, Modality::Box);
                assert_eq!(monomial.len(), 1);
                assert!(!monomial[0].negated);
            }
            Statement::Sharpening { negated, .. } => assert!(!negated),
        }
    }
}

#[test]
fn conjunction_on_the_right_is_split() {
    let out = phase2_of("box H { X sub C and D; }");
    let a = c("_g31_0001");
    assert_eq!(
        out.statements(),
        &[
            Statement::boxed(sp("H"), Axiom::Gci(c("X"), a.clone())),
            Statement::boxed(sp("H"), Axiom::Gci(a.clone(), c("C"))),
            Statement::boxed(sp("H"), Axiom::Gci(a, c("D"))),
        ]
    );
}

#[test]
fn box_on_the_left_introduces_two_standpoints() {
    let kb = parse_kb("box s { box u C sub D; }").unwrap();
    let (out, stats) = normalize_with_stats(&kb);
    assert_eq!(stats.count(NormRule::R36), 1);
    let (v0, v1, a) = (sp("_g36_0001"), sp("_g36_0002"), c("_g36_0003"));
    let stmts = out.statements();
    assert!(stmts.contains(&Statement::sharper(v0, sp("u"))));
    assert!(stmts.contains(&Statement::sharper(v1, sp("u"))));
    assert!(stmts.contains(&Statement::boxed(sp("u"), Axiom::Gci(c("C"), a))));
    assert!(stats.count(NormRule::R34) >= 1);
    assert!(stats.count(NormRule::R35) == 2);
    assert!(is_normal_form(&out));
}

#[test]
fn tautologies_are_removed() {
    assert!(phase2_of("box s { ex R.C sub Top; }").is_empty());
    assert!(phase2_of("box s { Bot sub C and D; }").is_empty());
}

#[test]
fn right_complex_conjunct_keeps_order() {
    let out = phase2_of("box s { A and ex R.B sub D; }");
    let a = c("_g34_0001");
    assert_eq!(
        out.statements(),
        &[
            Statement::boxed(sp("s"), Axiom::Gci(Concept::exists("R".into(), c("B")), a.clone())),
            Statement::boxed(sp("s"), Axiom::Gci(Concept::and(c("A"), a), c("D"))),
        ]
    );
}

#[test]
fn negated_sharpening_chains_into_disjointness() {
    let kb = parse_kb("not (H <= L);").unwrap();
    let out = normalize(&kb);
    let (v, a0, a1) = (sp("_g23_0001"), c("_g25_0002"), c("_g25_0003"));
    assert_eq!(
        out.statements(),
        &[
            Statement::sharper(v.clone(), sp("H")),
            Statement::boxed(v, Axiom::Gci(Concept::Top, a0.clone())),
            Statement::boxed(sp("L"), Axiom::Gci(Concept::Top, a1.clone())),
            Statement::boxed(sp("*"), Axiom::Gci(Concept::and(a0, a1), Concept::Bottom)),
        ]
    );
}

#[test]
fn long_sharpenings_and_chains_are_binarized() {
    let out = normalize(&parse_kb("a & b & c & d <= e; box s { R o S o T o U sub V; }").unwrap());
    assert!(is_normal_form(&out));
    let sharpenings = out.statements().iter().filter(|s| matches!(s, Statement::Sharpening { .. })).count();
    assert_eq!(sharpenings, 3);
    let chains = out.statements().iter().filter(|s| matches!(s, Statement::Formula { .. })).count();
    assert_eq!(chains, 3);
}

#[test]
fn empty_rhs_with_three_members_normalizes() {
    let out = normalize(&parse_kb("a & b & c <= 0;").unwrap());
    assert!(is_normal_form(&out), "{out:?}");
    assert!(out
        .statements()
        .iter()
        .all(|s| !matches!(s, Statement::Sharpening { rhs: SharpRhs::Empty, .. })));
}

#[test]
fn example_one_normalizes_linearly() {
    let kb = parse_kb(include_str!("../../../../fixtures/example1.spel")).unwrap();
    let (out, stats) = normalize_with_stats(&kb);
    assert!(is_normal_form(&out), "{:?}", crate::kb_model::first_violation(&out));
    assert!(size(&out) <= 30 * size(&kb) + 50);
    assert!(stats.total() <= 50 * size(&kb));
    let new = fresh_names(&kb, &out);
    assert!(new.concepts.iter().all(|n| n.is_reserved()));
    assert!(new.standpoints.iter().all(|n| n.is_reserved()));
}

#[test]
fn fresh_names_skip_taken_ones() {
    let kb = parse_kb("dia s { A(a); }").unwrap();
    let mut vocab = kb.vocabulary().clone();
    vocab.standpoints.insert(sp("_g17_0001"));
    let mut fresh = FreshNameFactory::new(&vocab);
    assert_eq!(fresh.standpoint("17"), sp("_g17_0002"));
    assert_eq!(fresh.issued(), 2);
}

#[test]
fn normalization_is_deterministic() {
    let text = "dia s { not ex R.(A and B) sub box t C; }\nnot (s & t <= u);";
    let kb = parse_kb(text).unwrap();
    assert_eq!(normalize(&kb), normalize(&kb));
}
