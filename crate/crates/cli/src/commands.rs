use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};
use spel_core::datalog::export;
use spel_core::kb_model::{size, KnowledgeBase, Query};
use spel_core::normalizer::normalize_with_stats;
use spel_core::oracle::{find_model_conditions, kb_conditions, Bounds, Outcome, DEFAULT_BUDGET};
use spel_core::parser::{parse_kb_with, parse_queries, render_kb, ParseError, ParseOptions};
use spel_core::preprocessor::prep;
use spel_core::reasoner::{check_sat_with, describe_query, entails_with, ReasonerConfig};
use spel_core::saturation::trace::render_trace;
use spel_core::saturation::{saturate, SaturationConfig};

use crate::{Command, Common, Format};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

/// Environment variable overriding the saturation fact limit.
pub const FACT_LIMIT_VAR: &str = "SPEL_FACT_LIMIT";

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INTERNAL, message: format!("error: {e}") }
}

fn parse_failure(path: &Path, errors: &[ParseError]) -> Failure {
    let mut message = String::new();
    for e in errors {
        let _ = writeln!(message, "{}:{e}", path.display());
    }
    Failure { code: EXIT_PARSE, message: message.trim_end().to_string() }
}

fn read(path: &Path, command: &str) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| usage(format!("error: cannot read {}: {e}\nusage: spel {command} <file.spel> [options]", path.display())))
}

fn load_kb(path: &Path, command: &str, common: &Common) -> Result<KnowledgeBase, Failure> {
    let text = read(path, command)?;
    let opts = ParseOptions { allow_reserved: common.allow_reserved, ..ParseOptions::default() };
    parse_kb_with(&text, &opts).map_err(|errs| parse_failure(path, &errs))
}

fn saturation_config(early_exit: bool) -> Result<SaturationConfig, Failure> {
    let mut config = SaturationConfig { early_exit_on_refutation: early_exit, ..SaturationConfig::default() };
    if let Ok(raw) = std::env::var(FACT_LIMIT_VAR) {
        config.fact_limit = raw
            .trim()
            .parse()
            .map_err(|_| usage(format!("error: {FACT_LIMIT_VAR} must be a non-negative integer, got {raw:?}")))?;
    }
    Ok(config)
}

struct Report {
    command: &'static str,
    input: String,
    verdict: Value,
    fact_count: Value,
    details: Value,
    text: String,
}

fn emit(format: Format, started: Instant, r: Report) -> String {
    match format {
        Format::Text => r.text,
        Format::Json => {
            let doc = json!({
                "command": r.command,
                "input": r.input,
                "verdict": r.verdict,
                "fact_count": r.fact_count,
                "elapsed_ms": started.elapsed().as_secs_f64() * 1000.0,
                "details": r.details,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json values serialize"))
        }
    }
}

pub fn run(command: Command) -> Result<String, Failure> {
    let started = Instant::now();
    match command {
        Command::Check { file, trace, no_early_exit, common } => {
            let kb = load_kb(&file, "check", &common)?;
            let config = ReasonerConfig { saturation: saturation_config(!no_early_exit)?, trace };
            let result = check_sat_with(&kb, &config).map_err(internal)?;
            let verdict = result.verdict.as_str();
            let mut text = format!("{verdict}\n");
            if let Some(t) = &result.refutation_trace {
                text.push_str(t);
            }
            Ok(emit(common.format, started, Report {
                command: "check",
                input: file.display().to_string(),
                verdict: json!(verdict),
                fact_count: json!(result.fact_count),
                details: json!({ "trace": result.refutation_trace }),
                text,
            }))
        }
        Command::Entail { kb, query, common } => {
            let base = load_kb(&kb, "entail", &common)?;
            let qtext = read(&query, "entail")?;
            let opts = ParseOptions {
                allow_reserved: common.allow_reserved,
                base: Some(base.vocabulary().clone()),
                ..ParseOptions::default()
            };
            let queries: Vec<Query> = parse_queries(&qtext, &opts).map_err(|errs| parse_failure(&query, &errs))?;
            if queries.is_empty() {
                return Err(usage(format!("error: {} contains no query", query.display())));
            }
            let config = ReasonerConfig { saturation: saturation_config(true)?, trace: false };
            let mut text = String::new();
            let mut rows = Vec::new();
            let mut all = true;
            for q in &queries {
                let r = entails_with(&base, q, &config).map_err(internal)?;
                let described = describe_query(q);
                let verdict = r.verdict.as_str();
                all &= r.verdict == spel_core::reasoner::EntailVerdict::Entailed;
                let witness = r.witness_standpoint.as_ref().map(|s| s.as_str().to_string());
                let _ = write!(text, "{verdict}\t{described}");
                if let Some(w) = &witness {
                    let _ = write!(text, "\twitness={w}");
                }
                text.push('\n');
                let mut row = json!({ "query": described, "verdict": verdict, "subcheck_count": r.subchecks.len() });
                if let Some(w) = witness {
                    row["witness_standpoint"] = json!(w);
                }
                rows.push(row);
            }
            Ok(emit(common.format, started, Report {
                command: "entail",
                input: kb.display().to_string(),
                verdict: json!(if all { "ENTAILED" } else { "NOT_ENTAILED" }),
                fact_count: Value::Null,
                details: json!({ "query_file": query.display().to_string(), "queries": rows }),
                text,
            }))
        }
        Command::Normalize { file, stats, common } => {
            let kb = load_kb(&file, "normalize", &common)?;
            let (normal, nstats) = normalize_with_stats(&kb);
            let rendered = render_kb(&normal).map_err(internal)?;
            let (before, after) = (size(&kb), size(&normal));
            let mut text = rendered.clone();
            if stats {
                let _ = writeln!(text, "# size input {before}\n# size output {after}\n# rewrites {}", nstats.total());
            }
            Ok(emit(common.format, started, Report {
                command: "normalize",
                input: file.display().to_string(),
                verdict: Value::Null,
                fact_count: Value::Null,
                details: json!({
                    "kb": rendered,
                    "size_input": before,
                    "size_output": after,
                    "rewrites": nstats.total(),
                }),
                text,
            }))
        }
        Command::Saturate { file, trace, common } => {
            let kb = load_kb(&file, "saturate", &common)?;
            let store = saturate(prep(&kb), &saturation_config(false)?).map_err(internal)?;
            let text = if trace {
                render_trace(&store)
            } else {
                let u = store.universe();
                store.facts().iter().map(|f| format!("{}\n", f.display(u))).collect()
            };
            let verdict = if store.is_refuted() { "UNSAT" } else { "SAT" };
            Ok(emit(common.format, started, Report {
                command: "saturate",
                input: file.display().to_string(),
                verdict: json!(verdict),
                fact_count: json!(store.len()),
                details: json!({ if trace { "trace" } else { "facts" }: text.lines().collect::<Vec<_>>() }),
                text,
            }))
        }
        Command::ExportDatalog { file, out, common } => {
            let kb = load_kb(&file, "export-datalog", &common)?;
            let stem = file
                .file_stem()
                .and_then(|s| s.to_str())
                .ok_or_else(|| usage(format!("error: cannot derive a name from {}", file.display())))?
                .to_string();
            let program = export(&prep(&kb));
            fs::create_dir_all(&out).map_err(|e| usage(format!("error: cannot create {}: {e}", out.display())))?;
            let rules = out.join(format!("{stem}.rules.dl"));
            let facts = out.join(format!("{stem}.facts.dl"));
            for (path, body) in [(&rules, &program.rules_text), (&facts, &program.facts_text)] {
                fs::write(path, body).map_err(|e| usage(format!("error: cannot write {}: {e}", path.display())))?;
            }
            Ok(emit(common.format, started, Report {
                command: "export-datalog",
                input: file.display().to_string(),
                verdict: Value::Null,
                fact_count: Value::Null,
                details: json!({ "rules": rules.display().to_string(), "facts": facts.display().to_string() }),
                text: format!("{}\n{}\n", rules.display(), facts.display()),
            }))
        }
        Command::Oracle { file, max_domain, max_prec, budget, common } => {
            let kb = load_kb(&file, "oracle", &common)?;
            let bounds = Bounds::new(max_domain, max_prec).with_budget(budget.unwrap_or(DEFAULT_BUDGET));
            let outcome = find_model_conditions(&kb_conditions(&kb), kb.vocabulary(), bounds).map_err(|e| match e {
                spel_core::oracle::OracleError::Bounds { .. } => usage(format!("error: {e}")),
                other => internal(other),
            })?;
            let (verdict, text, details) = match &outcome {
                Outcome::Model(m) => ("MODEL", m.dump(), json!({ "model": m.dump() })),
                Outcome::NoneWithinBounds => ("NONE_WITHIN_BOUNDS", "NoneWithinBounds\n".to_string(), json!({})),
                Outcome::Inconclusive { steps } => {
                    ("INCONCLUSIVE", format!("Inconclusive after {steps} steps\n"), json!({ "steps": steps }))
                }
            };
            Ok(emit(common.format, started, Report {
                command: "oracle",
                input: file.display().to_string(),
                verdict: json!(verdict),
                fact_count: Value::Null,
                details,
                text,
            }))
        }
    }
}
