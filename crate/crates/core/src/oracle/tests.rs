use std::collections::BTreeMap;

use super::*;
use crate::kb_model::{Concept, Modality, StandpointName, Statement};
use crate::parser::parse_kb;
use crate::preprocessor::prep;
use crate::saturation::{saturate, SaturationConfig};

fn kb(text: &str) -> KnowledgeBase {
    parse_kb(text).unwrap()
}

fn model(text: &str, d: usize, p: usize) -> StandpointStructure {
    match find_model(&kb(text), d, p).unwrap() {
        Outcome::Model(m) => m,
        other => panic!("expected a model, got {other:?}"),
    }
}

fn single(sigma: &[(&str, u64)], concepts: &[(&str, Vec<u64>)], d: usize, p: usize) -> StandpointStructure {
    StandpointStructure {
        domain_size: d,
        precisifications: p,
        sigma: sigma.iter().map(|(s, m)| (StandpointName::new(s), *m)).collect(),
        concepts: concepts.iter().map(|(c, v)| ((*c).into(), v.clone())).collect(),
        roles: BTreeMap::new(),
        individuals: BTreeMap::new(),
    }
}

#[test]
fn minimal_assertion_model() {
    let m = model("box s { A(a); }", 1, 1);
    assert_eq!(m.domain_size, 1);
    assert_eq!(m.precisifications, 1);
    assert_eq!(m.sigma[&StandpointName::new("s")], 1);
    assert_eq!(m.concepts[&"A".into()], vec![1]);
    assert_eq!(m.individuals[&"a".into()], 0);
}

#[test]
fn top_below_bottom_has_no_model() {
    assert_eq!(find_model(&kb("box * { Top sub Bot; }"), 3, 3).unwrap(), Outcome::NoneWithinBounds);
}

#[test]
fn diamond_pair_needs_two_precisifications() {
    let text = "dia s { A(a); } dia s { not A(a); }";
    assert_eq!(find_model(&kb(text), 1, 1).unwrap(), Outcome::NoneWithinBounds);
    let m = model(text, 1, 2);
    assert_eq!(m.precisifications, 2);
    assert_eq!(m.sigma[&StandpointName::new("s")], 0b11);
    let mut ext = m.concepts[&"A".into()].clone();
    ext.sort();
    assert_eq!(ext, vec![0, 1]);
}

#[test]
fn zero_bounds_are_rejected() {
    assert!(matches!(find_model(&kb("A sub B;"), 0, 1), Err(OracleError::Bounds { .. })));
    assert!(matches!(find_model(&kb("A sub B;"), 1, 0), Err(OracleError::Bounds { .. })));
}

#[test]
fn tiny_budget_is_inconclusive() {
    let out = find_model_conditions(
        &kb_conditions(&kb("box s { A sub ex r.B; }")),
        &Vocabulary::new(),
        Bounds::new(3, 3).with_budget(5),
    )
    .unwrap();
    assert!(matches!(out, Outcome::Inconclusive { .. }));
}

#[test]
fn modal_extensions() {
    let m = single(&[("s", 0b11)], &[("A", vec![0b1, 0b0])], 1, 2);
    let a = Concept::name("A");
    let dia = Concept::modal(Modality::Diamond, "s".into(), a.clone());
    let boxed = Concept::modal(Modality::Box, "s".into(), a);
    for pi in 0..2 {
        assert_eq!(m.eval_concept(pi, &dia).unwrap(), 1);
        assert_eq!(m.eval_concept(pi, &boxed).unwrap(), 0);
        assert_eq!(m.eval_concept(pi, &Concept::Top).unwrap(), 1);
    }
    let one = single(&[("s", 1)], &[("A", vec![1])], 1, 1);
    let boxed = Concept::modal(Modality::Box, "s".into(), Concept::name("A"));
    assert_eq!(one.eval_concept(0, &boxed).unwrap(), 1);
}

#[test]
fn statement_evaluation() {
    let m = single(&[("H", 0b01), ("SN", 0b11)], &[], 1, 2);
    assert!(m.eval_statement(&Statement::sharper("H".into(), "SN".into())).unwrap());
    assert!(!m.eval_statement(&Statement::sharper("SN".into(), "H".into())).unwrap());
    let taut = kb("box * { Top sub Top; }");
    assert!(m.eval_statement(&taut.statements()[0]).unwrap());

    let mut looped = single(&[("s", 1)], &[], 1, 1);
    looped.roles.insert("R".into(), vec![vec![1]]);
    looped.individuals.insert("a".into(), 0);
    let self_assert = kb("box s { (ex R.Self)(a); }");
    assert!(looped.eval_statement(&self_assert.statements()[0]).unwrap());
}

#[test]
fn undeclared_names_are_errors() {
    let m = single(&[], &[], 1, 1);
    assert!(matches!(m.eval_concept(0, &Concept::name("Z")), Err(EvalError::Undeclared { .. })));
}

#[test]
fn countermodel_for_unrelated_assertion() {
    let query = crate::kb_model::Query::Statement(kb("box s { B(a); }").statements()[0].clone());
    let out = find_countermodel(&kb("box s { A(a); }"), &query, Bounds::new(1, 1)).unwrap();
    let m = out.model().expect("countermodel");
    assert_eq!(m.concepts[&"B".into()], vec![0]);
}

#[test]
fn chains_compose_and_roles_propagate() {
    let m = model("box * { r o r sub r; } r(a, b); r(b, c); box * { ex r.C sub D; } C(c);", 3, 1);
    let q = kb("D(a); r(a, c);");
    for s in q.statements() {
        assert!(m.eval_statement(s).unwrap(), "{s:?}");
    }
}

#[test]
fn saturated_facts_hold_in_seed_models() {
    let texts = [
        "box s { A sub ex r.B; } box * { ex r.B sub C; } A(a);",
        "s <= t; box t { A sub B; } dia s { A(a); }",
        "box s { A sub dia t B; } box t { B sub C; } box s { A(a); }",
        "box s { r o r sub r; } box s { r(a, b); r(b, a); }",
        "box s { not A sub B; } dia s { not r(a, a); }",
    ];
    for text in texts {
        let store = saturate(prep(&kb(text)), &SaturationConfig::exhaustive()).unwrap();
        let conds = seed_conditions(&store);
        let Outcome::Model(m) = find_model_conditions(&conds, &Vocabulary::new(), Bounds::new(3, 3)).unwrap() else {
            panic!("no seed model for {text}");
        };
        for f in store.facts() {
            let c = fact_condition(store.universe(), f);
            assert!(m.eval_condition(&c).unwrap(), "{text}: {}", f.display(store.universe()));
        }
    }
}

#[test]
fn dump_is_stable() {
    let m = model("box s { A(a); }", 1, 1);
    let expected = "domain: {d0}\nprecisifications: {p0}\nsigma(*) = {p0}\nsigma(s) = {p0}\nindividual a = d0\np0:\n  A = {d0}\n";
    assert_eq!(m.dump(), expected);
    assert_eq!(m.dump(), model("box s { A(a); }", 1, 1).dump());
}
