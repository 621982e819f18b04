use super::*;
use crate::parser::{parse_kb, parse_queries, ParseOptions};
use crate::saturation::trace::{check_trace, parse_trace};

const EXAMPLE1: &str = include_str!("../../../../fixtures/example1.spel");
const MERGED: &str = include_str!("../../../../fixtures/merged_example1.spel");
const QUERIES: &str = include_str!("../../../../fixtures/example2_queries.spel");

fn kb(text: &str) -> KnowledgeBase {
    parse_kb(text).unwrap()
}

fn queries(base: &KnowledgeBase, text: &str) -> Vec<Query> {
    let opts = ParseOptions { base: Some(base.vocabulary().clone()), ..ParseOptions::default() };
    parse_queries(text, &opts).unwrap()
}

fn verdict(k: &str, q: &str) -> EntailVerdict {
    let base = kb(k);
    let q = queries(&base, q).remove(0);
    entails(&base, &q).unwrap().verdict
}

#[test]
fn example_one_sat_and_merge_unsat() {
    assert_eq!(check_sat(&kb(EXAMPLE1)).unwrap().verdict, Verdict::Sat);
    let config = ReasonerConfig { trace: true, ..ReasonerConfig::default() };
    let merged = kb(MERGED);
    let res = check_sat_with(&merged, &config).unwrap();
    assert_eq!(res.verdict, Verdict::Unsat);
    let trace = res.refutation_trace.expect("trace");
    let seeds = prep(&merged);
    let lines = parse_trace(seeds.universe(), &trace).unwrap();
    check_trace(&lines, &seeds).unwrap();
}

#[test]
fn top_in_bottom_is_unsat() {
    assert_eq!(check_sat(&kb("box * { Top sub Bot; }")).unwrap().verdict, Verdict::Unsat);
    assert!(check_sat(&kb("box * { Top sub Bot; }")).unwrap().refutation_trace.is_none());
}

#[test]
fn example_two_chain() {
    let base = kb(EXAMPLE1);
    let qs = queries(&base, QUERIES);
    assert_eq!(qs.len(), 5);
    let results = intermediate_entailments(&base, &qs, &ReasonerConfig::default()).unwrap();
    for (q, r) in &results {
        assert_eq!(r.verdict, EntailVerdict::Entailed, "{}", describe_query(q));
    }
    assert!(intermediate_entailments(&base, &[], &ReasonerConfig::default()).unwrap().is_empty());
}

#[test]
fn hospital_and_lab_are_incompatible() {
    assert_eq!(verdict(EXAMPLE1, "H & L <= 0;"), EntailVerdict::Entailed);
    assert_eq!(verdict(EXAMPLE1, "H <= L;"), EntailVerdict::NotEntailed);
    assert_eq!(verdict(EXAMPLE1, "not H & L <= 0;"), EntailVerdict::NotEntailed);
}

#[test]
fn lab_does_not_call_p1_high_risk() {
    assert_eq!(verdict(EXAMPLE1, "box L { HighRisk(p1); }"), EntailVerdict::NotEntailed);
}

#[test]
fn literal_cases() {
    assert_eq!(verdict("box s { A(a); }", "box s { B(a); }"), EntailVerdict::NotEntailed);
    assert_eq!(verdict("box s { A(a); } box s { A sub B; }", "box s { B(a); }"), EntailVerdict::Entailed);
    assert_eq!(verdict("box s { A(a); }", "dia s { A(a); }"), EntailVerdict::Entailed);
    assert_eq!(verdict("dia s { A(a); }", "box s { A(a); }"), EntailVerdict::NotEntailed);
    assert_eq!(verdict("box s { A(a); B(a); }", "box s { B(a); A(a); }"), EntailVerdict::Entailed);
}

#[test]
fn diamond_monomials() {
    let base = kb("dia s { A(a); B(a); }");
    let q = queries(&base, "dia s { A(a); B(a); }").remove(0);
    let r = entails(&base, &q).unwrap();
    assert_eq!(r.verdict, EntailVerdict::Entailed);
    let u = r.witness_standpoint.clone().expect("witness");
    let normal = normalize(&base);
    let mut run = Run { config: &ReasonerConfig::default(), subchecks: Vec::new() };
    let Query::Statement(Statement::Formula { monomial, .. }) = &q else { unreachable!() };
    assert!(run.boxed(&normal, &u, monomial).unwrap());

    assert_eq!(verdict("dia s { A(a); B(a); }", "dia s { A(a); }"), EntailVerdict::Entailed);
    assert_eq!(verdict("dia s { A(a); } dia s { B(a); }", "dia s { A(a); B(a); }"), EntailVerdict::NotEntailed);
    assert_eq!(verdict("t <= s; box t { A(a); B(a); }", "dia s { A(a); B(a); }"), EntailVerdict::Entailed);
}

#[test]
fn negated_formula_queries() {
    assert_eq!(verdict("box s { not A(a); }", "not dia s { A(a); };"), EntailVerdict::Entailed);
    assert_eq!(verdict("box s { B(a); }", "not box s { A(a); };"), EntailVerdict::NotEntailed);
}

#[test]
fn unsat_entails_everything() {
    for q in ["box s { Z(a); }", "H <= L;", "dia s { A(a); B(b); }", "not box * { Top sub Top; };"] {
        assert_eq!(verdict("Top sub Bot;", q), EntailVerdict::Entailed, "{q}");
    }
}

#[test]
fn fresh_query_names_are_not_entailed() {
    assert_eq!(verdict("box s { A(a); }", "box s { Fresh(a); }"), EntailVerdict::NotEntailed);
    assert_eq!(verdict("box s { A(a); }", "box s { A(z); }"), EntailVerdict::NotEntailed);
}
