use std::process::{Command, Output};

use serde_json::Value;
use spel_testkit::fixtures;

fn spel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spel")).args(args).output().unwrap()
}

fn spel_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spel")).args(args).env(key, value).output().unwrap()
}

fn fx(name: &str) -> String {
    fixtures::path(name).display().to_string()
}

fn text(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn assert_schema(v: &Value, command: &str) {
    let obj = v.as_object().unwrap();
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "details", "elapsed_ms", "fact_count", "input", "verdict"]);
    assert_eq!(v["command"], command);
    assert!(v["input"].is_string());
    assert!(v["elapsed_ms"].as_f64().unwrap() >= 0.0);
    assert!(v["fact_count"].is_null() || v["fact_count"].is_u64());
    assert!(v["verdict"].is_null() || v["verdict"].is_string());
    assert!(v["details"].is_object());
}

#[test]
fn check_verdicts_and_exit_codes() {
    let o = spel(&["check", &fx("example1.spel")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(text(&o), "SAT\n");
    let o = spel(&["check", &fx("merged_example1.spel")]);
    assert_eq!((o.status.code(), text(&o)), (Some(0), "UNSAT\n".to_string()));

    let o = spel(&["check", "/nonexistent/file.spel"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("usage"));
    assert_eq!(spel(&["check"]).status.code(), Some(1));
    assert_eq!(spel(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(spel(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_list_positions() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.spel");
    std::fs::write(&bad, "box s { A sub ; }\nbox s { _x sub B; }\n").unwrap();
    let o = spel(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bad.spel:1:15:"), "{err}");
}

#[test]
fn fact_limit_is_an_internal_failure() {
    let o = spel_env(&["check", &fx("example1.spel")], "SPEL_FACT_LIMIT", "10");
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("fact limit"));
    assert_eq!(spel_env(&["check", &fx("example1.spel")], "SPEL_FACT_LIMIT", "lots").status.code(), Some(1));
    assert_eq!(spel_env(&["check", &fx("example1.spel")], "SPEL_FACT_LIMIT", "100000000").status.code(), Some(0));
}

#[test]
fn json_and_text_verdicts_agree() {
    for f in ["example1.spel", "merged_example1.spel"] {
        let t = text(&spel(&["check", &fx(f)]));
        let j = json(&spel(&["check", &fx(f), "--format", "json"]));
        assert_schema(&j, "check");
        assert_eq!(j["verdict"], t.trim());
    }
    let j = json(&spel(&["check", "--trace", "--format", "json", &fx("merged_example1.spel")]));
    assert!(j["details"]["trace"].as_str().unwrap().contains("GciNested(*, Top, *, Top, Bot)"));
}

#[test]
fn check_trace_and_no_early_exit() {
    let early = json(&spel(&["check", "--format", "json", &fx("merged_example1.spel")]));
    let full = json(&spel(&["check", "--no-early-exit", "--format", "json", &fx("merged_example1.spel")]));
    assert_eq!(early["verdict"], full["verdict"]);
    assert!(early["fact_count"].as_u64() <= full["fact_count"].as_u64());
    let traced = text(&spel(&["check", "--trace", &fx("merged_example1.spel")]));
    assert!(traced.starts_with("UNSAT\nfact "));
    assert_eq!(text(&spel(&["check", "--trace", &fx("example1.spel")])), "SAT\n");
}

#[test]
fn entail_reports_each_query() {
    let o = spel(&["entail", &fx("example1.spel"), "--query", &fx("example2_queries.spel")]);
    assert_eq!(o.status.code(), Some(0));
    let out = text(&o);
    assert_eq!(out.lines().count(), 5);
    assert!(out.lines().all(|l| l.starts_with("ENTAILED\tbox H")));

    let j = json(&spel(&["entail", &fx("example1.spel"), "--query", &fx("example2_queries.spel"), "--format", "json"]));
    assert_schema(&j, "entail");
    assert_eq!(j["verdict"], "ENTAILED");
    let rows = j["details"]["queries"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    for r in rows {
        assert_eq!(r["verdict"], "ENTAILED");
        assert!(r["subcheck_count"].as_u64().unwrap() >= 1);
        assert!(r["query"].as_str().unwrap().starts_with("box H"));
    }
}

#[test]
fn entail_diamond_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let kb = dir.path().join("kb.spel");
    let q = dir.path().join("q.spel");
    std::fs::write(&kb, "u <= s;\nbox u { A(a); B(a); }\n").unwrap();
    std::fs::write(&q, "dia s { A(a); B(a); }\nH & u <= 0;\n").unwrap();
    let j = json(&spel(&["entail", kb.to_str().unwrap(), "--query", q.to_str().unwrap(), "--format", "json"]));
    let rows = j["details"]["queries"].as_array().unwrap();
    assert_eq!(rows[0]["verdict"], "ENTAILED");
    assert_eq!(rows[0]["witness_standpoint"], "u");
    assert_eq!(rows[1]["verdict"], "NOT_ENTAILED");
    assert!(rows[1].get("witness_standpoint").is_none());
    assert_eq!(j["verdict"], "NOT_ENTAILED");
}

#[test]
fn normalize_output_reparses_to_itself() {
    let dir = tempfile::tempdir().unwrap();
    let once = text(&spel(&["normalize", &fx("example1.spel")]));
    let path = dir.path().join("normal.spel");
    std::fs::write(&path, &once).unwrap();
    let twice = spel(&["normalize", "--allow-reserved", path.to_str().unwrap()]);
    assert_eq!(twice.status.code(), Some(0));
    assert_eq!(text(&twice), once);
    assert_eq!(spel(&["normalize", path.to_str().unwrap()]).status.code(), Some(2));

    let stats = text(&spel(&["normalize", "--stats", &fx("example1.spel")]));
    assert!(stats.contains("# size input ") && stats.contains("# size output "));
    let j = json(&spel(&["normalize", "--format", "json", &fx("example1.spel")]));
    assert_schema(&j, "normalize");
    assert_eq!(j["details"]["kb"], once);
}

#[test]
fn saturate_lists_facts() {
    let facts = text(&spel(&["saturate", &fx("example1.spel")]));
    assert!(facts.lines().any(|l| l == "GciNested(*, {p1}, H, Top, HighRisk)"));
    let trace = text(&spel(&["saturate", "--trace", &fx("example1.spel")]));
    assert_eq!(facts.lines().count(), trace.lines().count());
    assert!(trace.lines().all(|l| l.starts_with("fact ") && l.contains(" BY ")));
    let j = json(&spel(&["saturate", "--format", "json", &fx("example1.spel")]));
    assert_schema(&j, "saturate");
    assert_eq!(j["fact_count"].as_u64().unwrap() as usize, facts.lines().count());
}

#[test]
fn export_datalog_writes_both_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dl");
    let o = spel(&["export-datalog", &fx("example1.spel"), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let rules = std::fs::read_to_string(out.join("example1.rules.dl")).unwrap();
    let facts = std::fs::read_to_string(out.join("example1.facts.dl")).unwrap();
    let program = spel_core::datalog::parse_program(&format!("{rules}{facts}")).unwrap();
    assert!(!program.rules.is_empty() && !program.facts.is_empty());
    spel(&["export-datalog", &fx("example1.spel"), "--out", out.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(out.join("example1.facts.dl")).unwrap(), facts);
}

#[test]
fn oracle_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    let sat = dir.path().join("sat.spel");
    let unsat = dir.path().join("unsat.spel");
    std::fs::write(&sat, "box s { A(a); }\ndia s { not A sub Bot; }\n").unwrap();
    std::fs::write(&unsat, "Top sub Bot;\n").unwrap();
    let o = text(&spel(&["oracle", sat.to_str().unwrap(), "--max-domain", "2", "--max-prec", "2"]));
    assert!(o.starts_with("domain: {d0}"), "{o}");
    let o = text(&spel(&["oracle", unsat.to_str().unwrap(), "--max-domain", "2", "--max-prec", "2"]));
    assert_eq!(o, "NoneWithinBounds\n");
    let j = json(&spel(&["oracle", unsat.to_str().unwrap(), "--format", "json"]));
    assert_schema(&j, "oracle");
    assert_eq!(j["verdict"], "NONE_WITHIN_BOUNDS");
    assert_eq!(spel(&["oracle", sat.to_str().unwrap(), "--max-domain", "0"]).status.code(), Some(1));
    let o = text(&spel(&["oracle", &fx("example1.spel"), "--budget", "10"]));
    assert!(o.starts_with("Inconclusive"), "{o}");
}
