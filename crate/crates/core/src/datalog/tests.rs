use super::*;
use crate::parser::parse_kb;
use crate::preprocessor::prep;

const EXAMPLE1: &str = include_str!("../../../../fixtures/example1.spel");

fn exported(text: &str) -> DatalogExport {
    export(&prep(&parse_kb(text).unwrap()))
}

#[test]
fn seed_sharpening_atom() {
    let out = exported("H <= SN;");
    assert!(out.facts_text.lines().any(|l| l == "sharper(\"H\",\"SN\")."));
}

#[test]
fn transitivity_rule_text() {
    assert!(rules_text().lines().any(|l| l == "sharper(s1,s3) :- sharper(s1,s2), sharper(s2,s3)."));
}

#[test]
fn one_clause_per_rule() {
    let prog = parse_program(&rules_text()).unwrap();
    assert_eq!(prog.rules.len(), RuleId::all().len());
    assert_eq!(prog.decls.len(), PREDICATES.len());
    assert!(prog.facts.is_empty());
}

#[test]
fn empty_store_has_only_helpers() {
    let out = exported("");
    assert_eq!(out.rules_text, rules_text());
    let lines: Vec<&str> = out.facts_text.lines().collect();
    assert_eq!(lines, ["is_sn(\"STAR\").", "is_cn(\"TOP\").", "is_cn(\"BOT\")."]);
}

#[test]
fn example_program_checks_and_is_stable() {
    let a = exported(EXAMPLE1);
    let b = exported(EXAMPLE1);
    assert_eq!(a, b);
    let prog = parse_program(&a.program_text()).unwrap();
    assert!(prog.facts.iter().any(|f| f.pred == "is_nom" && f.args == [Term::Const("{p1}".into())]));
    assert!(prog.facts.iter().any(|f| f.pred == "role_assertion"));
}

#[test]
fn reserved_names_do_not_collide() {
    let out = exported("box STAR { TOP sub BOT; }");
    assert!(out.facts_text.contains("is_sn(\"'STAR\")."));
    assert!(out.facts_text.contains("is_cn(\"'TOP\")."));
    assert!(out.facts_text.contains("is_cn(\"TOP\")."));
}

#[test]
fn escapes_strings() {
    assert_eq!(escape("a\"b\\c"), "\"a\\\"b\\\\c\"");
    let prog = parse_program(".decl p(x: symbol)\np(\"a\\\"b\").").unwrap();
    assert_eq!(prog.facts[0].args, [Term::Const("a\"b".into())]);
}

#[test]
fn grammar_rejections() {
    let bad = [
        ("p(\"a\").", "undeclared"),
        (".decl p(x: symbol)\np(x).", "not ground"),
        (".decl p(x: symbol)\np(x) :- p(y).", "does not occur"),
        (".decl p(x: symbol)\np(_) :- p(y).", "wildcard"),
        (".decl p(x: symbol)\np(\"a\",\"b\").", "arity"),
        (".decl p(x: symbol)\np(x) :- !p(x).", "unexpected character"),
        (".decl p(x: number)", "unsupported type"),
        (".output p", "unsupported directive"),
        (".decl p(x: symbol)\np(\"a\")", "end of input"),
    ];
    for (text, needle) in bad {
        let e = parse_program(text).unwrap_err();
        assert!(e.message.contains(needle), "{text}: {e}");
    }
}
