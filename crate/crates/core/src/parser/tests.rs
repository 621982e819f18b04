use super::*;
use crate::kb_model::{Axiom, Concept, Literal, Modality, Query, RoleName, SharpRhs, StandpointName, Statement};

fn sp(s: &str) -> StandpointName {
    StandpointName::new(s)
}

fn only_statement(text: &str) -> Statement {
    let kb = parse_kb(text).unwrap_or_else(|e| panic!("parse failed: {e:?}"));
    assert_eq!(kb.len(), 1, "{kb:?}");
    kb.statements()[0].clone()
}

#[test]
fn parses_boxed_gci() {
    let stmt = only_statement("box H { Tumour sub Process; }");
    assert_eq!(
        stmt,
        Statement::boxed(sp("H"), Axiom::Gci(Concept::name("Tumour"), Concept::name("Process")))
    );
}

#[test]
fn parses_negated_sharpening() {
    let stmt = only_statement("not (H & L <= SN);");
    assert_eq!(stmt, Statement::sharpening(true, vec![sp("H"), sp("L")], SharpRhs::Standpoint(sp("SN"))));
    assert_eq!(only_statement("not H & L <= SN;"), stmt);
}

#[test]
fn wraps_bare_axioms_in_universal_box() {
    let stmt = only_statement("Tumour sub Process;");
    assert_eq!(
        stmt,
        Statement::boxed(sp("*"), Axiom::Gci(Concept::name("Tumour"), Concept::name("Process")))
    );
}

#[test]
fn bare_negated_axiom_is_boxed_negative_literal() {
    let stmt = only_statement("not box H Process sub box L Process;");
    let gci = Axiom::Gci(
        Concept::modal(Modality::Box, sp("H"), Concept::name("Process")),
        Concept::modal(Modality::Box, sp("L"), Concept::name("Process")),
    );
    assert_eq!(stmt, Statement::formula(Modality::Box, sp("*"), vec![Literal::neg(gci)]));
}

#[test]
fn conjunction_is_left_nested_and_prefixes_bind_tightest() {
    let stmt = only_statement("box s { A and ex R.B and C sub D; }");
    let lhs = Concept::and(
        Concept::and(Concept::name("A"), Concept::exists(RoleName::new("R"), Concept::name("B"))),
        Concept::name("C"),
    );
    assert_eq!(stmt, Statement::boxed(sp("s"), Axiom::Gci(lhs, Concept::name("D"))));
}

#[test]
fn infers_role_inclusions_transitively() {
    let kb = parse_kb("X sub Y; Y sub Z; ex Z.A sub B;").unwrap();
    let rias = kb
        .statements()
        .iter()
        .filter(|s| matches!(s, Statement::Formula { monomial, .. } if matches!(monomial[0].axiom, Axiom::Ria(..))))
        .count();
    assert_eq!(rias, 2);
    assert!(kb.vocabulary().roles.contains(&RoleName::new("X")));
}

#[test]
fn arity_decides_assertion_kind() {
    let kb = parse_kb("box s { P(a); R(a, b); (ex R.P)(b); }").unwrap();
    let Statement::Formula { monomial, .. } = &kb.statements()[0] else { panic!() };
    assert!(matches!(monomial[0].axiom, Axiom::ConceptAssertion(Concept::Name(_), _)));
    assert!(matches!(monomial[1].axiom, Axiom::RoleAssertion(..)));
    assert!(matches!(monomial[2].axiom, Axiom::ConceptAssertion(Concept::Exists(..), _)));
}

#[test]
fn reports_kind_conflicts_with_positions() {
    let errs = parse_kb("role R;\nbox s { R sub ex R.A; }").unwrap_err();
    assert_eq!(errs.len(), 1);
    assert_eq!((errs[0].line, errs[0].column), (2, 9));
}

#[test]
fn rejects_nominals() {
    let errs = parse_kb("{a} sub A;").unwrap_err();
    assert_eq!(errs[0].kind, ParseErrorKind::NominalInInput);
}

#[test]
fn rejects_reserved_names_by_default() {
    let errs = parse_kb("_g1 sub A;").unwrap_err();
    assert_eq!(errs[0].kind, ParseErrorKind::ReservedPrefix);
    let opts = ParseOptions { allow_reserved: true, ..Default::default() };
    assert!(parse_kb_with("_g1 sub A;", &opts).is_ok());
}

#[test]
fn recovers_after_errors() {
    let errs = parse_kb("box H { A sub ; }\nB sub C;\nD sub;\n").unwrap_err();
    assert_eq!(errs.len(), 2);
    assert_eq!(errs[0].line, 1);
    assert_eq!(errs[1].line, 3);
    for e in &errs {
        assert!(e.line >= 1 && e.column >= 1);
    }
}

#[test]
fn undeclared_names_rejected_when_required() {
    let opts = ParseOptions { require_declarations: true, ..Default::default() };
    let errs = parse_kb_with("concept A;\nA sub B;", &opts).unwrap_err();
    assert_eq!(errs[0].kind, ParseErrorKind::UndeclaredName);
    assert_eq!((errs[0].line, errs[0].column), (2, 7));
}

#[test]
fn negated_formula_only_in_queries() {
    assert!(parse_kb("not box H { A(a); };").is_err());
    let qs = parse_queries("not box H { A(a); };", &ParseOptions::default()).unwrap();
    assert!(matches!(qs[0], Query::NotFormula { modality: Modality::Box, .. }));
}

#[test]
fn query_kinds_follow_base_vocabulary() {
    let kb = parse_kb("HasPart o HasProcess sub HasProcess;").unwrap();
    let opts = ParseOptions { base: Some(kb.vocabulary().clone()), ..Default::default() };
    let qs = parse_queries("box H { HasPart sub HasProcess; };", &opts).unwrap();
    let Query::Statement(Statement::Formula { monomial, .. }) = &qs[0] else { panic!() };
    assert!(matches!(monomial[0].axiom, Axiom::Ria(..)));
}

#[test]
fn sharpening_to_empty_and_star() {
    assert_eq!(
        only_statement("H & L <= 0;"),
        Statement::sharpening(false, vec![sp("H"), sp("L")], SharpRhs::Empty)
    );
    assert_eq!(only_statement("* <= H;"), Statement::sharper(sp("*"), sp("H")));
}

#[test]
fn renders_examples() {
    let kb = parse_kb("box H { Tumour sub Process; }").unwrap();
    assert!(render_kb(&kb).unwrap().contains("box H { Tumour sub Process; }"));
    let kb = parse_kb("dia L { Tumour(b); }").unwrap();
    assert!(render_kb(&kb).unwrap().contains("dia L { Tumour(b); }"));
    assert_eq!(render_kb(&crate::kb_model::KnowledgeBase::empty()).unwrap(), "");
}

#[test]
fn round_trips_tricky_terms() {
    let text = "box s { (A and B) and (C and D) sub ex R.(E and F); }\n\
                dia * { not ex R.Self sub box t dia u Top; (ex R.ex S.Self)(a); not R(a, b); R o S o T sub U; }\n\
                not (s & t <= 0);\n\
                R sub S;\n";
    let kb = parse_kb(text).unwrap();
    let again = parse_kb(&render_kb(&kb).unwrap()).unwrap();
    assert_eq!(kb, again);
}

#[test]
fn parse_is_deterministic() {
    let text = "box H { Tumour sub Process; }\nA sub ;";
    assert_eq!(parse_kb(text).unwrap_err(), parse_kb(text).unwrap_err());
}

#[test]
fn duplicate_statements_collapse() {
    let kb = parse_kb("A sub B; A sub B; s & s <= t;").unwrap();
    assert_eq!(kb.len(), 2);
    assert_eq!(kb.statements()[1], Statement::sharper(sp("s"), sp("t")));
}
