//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spel_core::datalog::{export, parse_program};
use spel_core::kb_model::{is_normal_form, size, ConceptName, IndividualName, KnowledgeBase, StandpointName};
use spel_core::normalizer::normalize;
use spel_core::oracle::{fact_condition, find_model, find_model_conditions, seed_conditions, Bounds, Outcome};
use spel_core::parser::{parse_kb, parse_kb_with, parse_queries, render_kb, render_query, ParseOptions};
use spel_core::preprocessor::{prep, ExtConcept, Fact, FactStore, Origin, STAR, TOP};
use spel_core::reasoner::{check_sat, Verdict};
use spel_core::saturation::trace::{check_trace, parse_trace};
use spel_core::saturation::{apply_rule, is_refuted, polynomial_bound, saturate, SaturationConfig};
use spel_testkit::corpus::corpus;
use spel_testkit::fixtures;
use spel_testkit::gen::{random_kb, GenConfig};

type Check = Result<String, String>;

fn spel(args: &[&str]) -> (Output, Duration) {
    let t = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_spel")).args(args).output().expect("spel runs");
    (out, t.elapsed())
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn fixture(name: &str) -> String {
    fixtures::path(name).display().to_string()
}

/// Bound checks for every saturation performed directly by this suite.
#[derive(Default)]
struct Bounded {
    runs: usize,
    violations: Vec<String>,
}

impl Bounded {
    fn saturate(&mut self, label: &str, seeds: FactStore, config: &SaturationConfig) -> Result<FactStore, String> {
        let bound = polynomial_bound(seeds.universe());
        let store = saturate(seeds, config).map_err(|e| format!("{label}: {e}"))?;
        self.runs += 1;
        if store.len() as u128 > bound {
            self.violations.push(format!("{label}: {} facts > bound {bound}", store.len()));
        }
        Ok(store)
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion1(b: &mut Bounded) -> Check {
    let (out, took) = spel(&["check", &fixture("example1.spel")]);
    ensure(out.status.success() && stdout(&out).trim() == "SAT", || format!("check printed {:?}", stdout(&out)))?;
    ensure(took < Duration::from_secs(5), || format!("check took {took:?}"))?;
    let store = b.saturate("example1", prep(&fixtures::example1()), &SaturationConfig::default())?;
    let u = store.universe();
    let p1 = u.ind(&IndividualName::new("p1")).ok_or("p1 missing")?;
    let h = u.sp(&StandpointName::new("H")).ok_or("H missing")?;
    let high = u.cn(&ExtConcept::Name(ConceptName::new("HighRisk"))).ok_or("HighRisk missing")?;
    let target = Fact::GciNested(STAR, u.nominal(p1), h, TOP, high);
    ensure(store.contains(&target), || "GciNested(*, {p1}, H, Top, HighRisk) not derived".into())?;
    Ok(format!("SAT in {took:?}, HighRisk(p1) under H derived"))
}

fn criterion2() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut slowest = Duration::ZERO;
    let lines: Vec<&str> = fixtures::EXAMPLE2_QUERIES.lines().filter(|l| !l.trim().is_empty()).collect();
    ensure(lines.len() == 5, || format!("{} queries in fixture", lines.len()))?;
    for (i, q) in lines.iter().enumerate() {
        let path = dir.path().join(format!("q{i}.spel"));
        std::fs::write(&path, q).map_err(|e| e.to_string())?;
        let (out, took) = spel(&["entail", &fixture("example1.spel"), "--query", path.to_str().unwrap()]);
        let text = stdout(&out);
        ensure(out.status.success() && text.starts_with("ENTAILED\t"), || format!("{q}: {text:?}"))?;
        ensure(took < Duration::from_secs(10), || format!("{q}: took {took:?}"))?;
        slowest = slowest.max(took);
    }
    Ok(format!("5/5 ENTAILED, slowest {slowest:?}"))
}

fn criterion3() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("q.spel");
    std::fs::write(&path, "H & L <= 0;\n").map_err(|e| e.to_string())?;
    let (out, _) = spel(&["entail", &fixture("example1.spel"), "--query", path.to_str().unwrap()]);
    let text = stdout(&out);
    ensure(out.status.success() && text.starts_with("ENTAILED\t"), || format!("{text:?}"))?;
    Ok("H & L <= 0 ENTAILED".into())
}

fn criterion4(b: &mut Bounded) -> Check {
    let (out, _) = spel(&["check", "--trace", &fixture("merged_example1.spel")]);
    let text = stdout(&out);
    let (verdict, trace) = text.split_once('\n').ok_or("no output")?;
    ensure(out.status.success() && verdict == "UNSAT", || format!("verdict {verdict:?}"))?;
    let merged = parse_kb(fixtures::MERGED_EXAMPLE1).map_err(|e| format!("{e:?}"))?;
    let seeds = prep(&merged);
    let lines = parse_trace(seeds.universe(), trace).map_err(|e| e.to_string())?;
    check_trace(&lines, &seeds).map_err(|e| e.to_string())?;
    let last = lines.last().ok_or("empty trace")?;
    ensure(last.fact == spel_core::preprocessor::REFUTATION, || "trace does not end in the refutation fact".into())?;
    let store = b.saturate("merged", seeds, &SaturationConfig::default())?;
    ensure(is_refuted(&store), || "library saturation not refuted".into())?;
    Ok(format!("UNSAT, {}-line trace replays", lines.len()))
}

fn criterion5() -> Check {
    let t = Instant::now();
    let cfg = GenConfig::default();
    let n = 250;
    for seed in 0..n {
        let kb = random_kb(10_000 + seed, &cfg);
        let out = normalize(&kb);
        ensure(is_normal_form(&out), || format!("seed {seed}: output not in normal form"))?;
        ensure(size(&out) <= 30 * size(&kb) + 50, || format!("seed {seed}: size {} from {}", size(&out), size(&kb)))?;
        ensure(normalize(&out) == out, || format!("seed {seed}: not idempotent"))?;
    }
    let took = t.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {took:?}"))?;
    Ok(format!("{n} KBs in {took:?}"))
}

fn oracle_corpus() -> Vec<KnowledgeBase> {
    let cfg = GenConfig { concepts: 2, roles: 1, standpoints: 2, individuals: 2, ..GenConfig::tiny() };
    (0..120).map(|seed| random_kb(20_000 + seed, &cfg)).collect()
}

fn criterion6(kbs: &[KnowledgeBase], b: &mut Bounded) -> Check {
    let (mut models, mut unsat, mut sat_only) = (0, 0, 0);
    for (i, kb) in kbs.iter().enumerate() {
        let found = find_model(kb, 3, 3).map_err(|e| format!("kb {i}: {e}"))?;
        let store = b.saturate(&format!("oracle kb {i}"), prep(kb), &SaturationConfig::default())?;
        let verdict = if is_refuted(&store) { Verdict::Unsat } else { Verdict::Sat };
        ensure(check_sat(kb).map_err(|e| e.to_string())?.verdict == verdict, || format!("kb {i}: verdict mismatch"))?;
        match (&found, verdict) {
            (Outcome::Inconclusive { steps }, _) => return Err(format!("kb {i}: oracle inconclusive after {steps}")),
            (Outcome::Model(_), Verdict::Unsat) => return Err(format!("kb {i}: model found but UNSAT")),
            (Outcome::Model(_), Verdict::Sat) => models += 1,
            (Outcome::NoneWithinBounds, Verdict::Unsat) => unsat += 1,
            (Outcome::NoneWithinBounds, Verdict::Sat) => sat_only += 1,
        }
    }
    Ok(format!(
        "{} KBs: {models} with models (all SAT), {unsat} UNSAT (none within 3x3), {sat_only} SAT without a bounded model, 0 disagreements",
        kbs.len()
    ))
}

fn criterion7(kbs: &[KnowledgeBase], b: &mut Bounded) -> Check {
    let (mut checked_kbs, mut checked_facts, mut skipped) = (0, 0, 0);
    for (i, kb) in kbs.iter().enumerate() {
        if find_model(kb, 3, 3).map_err(|e| e.to_string())?.model().is_none() {
            continue;
        }
        let seeds = prep(kb);
        let conds = seed_conditions(&seeds);
        let outcome = find_model_conditions(&conds, kb.vocabulary(), Bounds::new(3, 3)).map_err(|e| e.to_string())?;
        let Some(model) = outcome.model() else {
            skipped += 1;
            continue;
        };
        let store = b.saturate(&format!("soundness kb {i}"), seeds, &SaturationConfig::exhaustive())?;
        let u = store.universe();
        for f in store.facts() {
            let holds = model.eval_condition(&fact_condition(u, f)).map_err(|e| format!("kb {i}: {e}"))?;
            ensure(holds, || format!("kb {i}: {} false in model\n{}", f.display(u), model.dump()))?;
        }
        checked_kbs += 1;
        checked_facts += store.len();
    }
    ensure(checked_kbs > 0, || "no KB had a model of its preprocessed form".into())?;
    Ok(format!("{checked_facts} facts true across {checked_kbs} models, {skipped} KBs without a bounded K^prep model"))
}

fn criterion8(b: &Bounded) -> Check {
    ensure(b.violations.is_empty(), || b.violations.join("; "))?;
    Ok(format!("{} saturation runs within the polynomial bound", b.runs))
}

fn criterion9(stores: &[(String, FactStore)]) -> Check {
    let pool: Vec<(usize, usize)> = stores
        .iter()
        .enumerate()
        .flat_map(|(k, (_, s))| {
            s.iter().filter(|(_, _, o)| matches!(o, Origin::Derived { .. })).map(move |(id, _, _)| (k, id.index()))
        })
        .collect();
    ensure(pool.len() >= 1000, || format!("only {} derived facts", pool.len()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in sample(&mut rng, pool.len(), 1000) {
        let (k, idx) = pool[i];
        let (name, store) = &stores[k];
        let (id, fact, origin) = store.iter().nth(idx).expect("fact id in range");
        let Origin::Derived { rule, premises } = origin else { unreachable!() };
        let prem: Vec<Fact> = premises.iter().map(|p| store.fact(*p)).collect();
        let out = apply_rule(*rule, &prem, store.universe()).map_err(|e| format!("{name} fact {}: {e}", id.index()))?;
        ensure(out.contains(fact), || format!("{name} fact {}: {rule} does not reproduce it", id.index()))?;
    }
    Ok(format!("1000 of {} derived facts reproduced", pool.len()))
}

fn criterion10(members: &[(String, KnowledgeBase)]) -> Check {
    for (name, kb) in members {
        let seeds = prep(kb);
        let first = export(&seeds).program_text();
        let again = export(&prep(kb)).program_text();
        ensure(first == again, || format!("{name}: export not byte-identical"))?;
        parse_program(&first).map_err(|e| format!("{name}: line {}: {}", e.line, e.message))?;
    }
    let mut note = String::from("external engine: not run");
    if try_souffle_available() {
        note = souffle_equivalence(members)?;
    }
    Ok(format!("{} programs pass the grammar check, byte-identical; {note}", members.len()))
}

fn try_souffle_available() -> bool {
    Command::new("souffle").arg("--version").output().map(|o| o.status.success()).unwrap_or(false)
}

fn souffle_equivalence(members: &[(String, KnowledgeBase)]) -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (name, kb) in members {
        let seeds = prep(kb);
        let mut program = export(&seeds).program_text();
        program.push_str(".output gci_nested\n");
        let src = dir.path().join(format!("{name}.dl"));
        std::fs::write(&src, program).map_err(|e| e.to_string())?;
        let out = Command::new("souffle").arg("-D").arg(dir.path()).arg(&src).output().map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("{name}: souffle failed"))?;
        let csv = std::fs::read_to_string(dir.path().join("gci_nested.csv")).unwrap_or_default();
        let refuted = csv.lines().any(|l| l.split('\t').collect::<Vec<_>>() == ["STAR", "TOP", "STAR", "TOP", "BOT"]);
        let native = is_refuted(&saturate(seeds, &SaturationConfig::exhaustive()).map_err(|e| e.to_string())?);
        ensure(refuted == native, || format!("{name}: souffle and native verdicts differ"))?;
    }
    Ok("souffle refutation verdicts agree".into())
}

fn criterion11(members: &[(String, KnowledgeBase)], extra: &[KnowledgeBase]) -> Check {
    let opts = ParseOptions { allow_reserved: true, ..ParseOptions::default() };
    let mut count = 0;
    for (name, kb) in members.iter().map(|(n, k)| (n.clone(), k)).chain(extra.iter().map(|k| ("generated".to_string(), k))) {
        let text = render_kb(kb).map_err(|e| format!("{name}: {e}"))?;
        let back = parse_kb_with(&text, &opts).map_err(|e| format!("{name}: {e:?}"))?;
        ensure(&back == kb, || format!("{name}: round trip changed the KB"))?;
        let normal = normalize(kb);
        let back = parse_kb_with(&render_kb(&normal).map_err(|e| e.to_string())?, &opts).map_err(|e| format!("{e:?}"))?;
        ensure(back == normal, || format!("{name}: normalized round trip changed the KB"))?;
        count += 1;
    }
    let base = fixtures::example1();
    let q_opts = ParseOptions { base: Some(base.vocabulary().clone()), ..ParseOptions::default() };
    let queries = parse_queries(fixtures::EXAMPLE2_QUERIES, &q_opts).map_err(|e| format!("{e:?}"))?;
    let text: String = queries.iter().map(|q| render_query(q).map(|t| t + "\n")).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(parse_queries(&text, &q_opts).map_err(|e| format!("{e:?}"))? == queries, || "query fixture round trip".into())?;
    Ok(format!("{count} KBs and the query fixture round-trip"))
}

fn main() {
    let mut bounded = Bounded::default();
    let oracle = oracle_corpus();
    let members = corpus();
    let started = Instant::now();
    let mut results: Vec<(usize, Check)> = vec![
        (1, criterion1(&mut bounded)),
        (2, criterion2()),
        (3, criterion3()),
        (4, criterion4(&mut bounded)),
        (5, criterion5()),
        (6, criterion6(&oracle, &mut bounded)),
        (7, criterion7(&oracle, &mut bounded)),
    ];
    let stores: Result<Vec<(String, FactStore)>, String> = members
        .iter()
        .map(|(name, kb)| bounded.saturate(name, prep(kb), &SaturationConfig::exhaustive()).map(|s| (name.clone(), s)))
        .collect();
    results.push((9, stores.and_then(|s| criterion9(&s))));
    results.push((10, criterion10(&members)));
    let generated: Vec<KnowledgeBase> = (0..200).map(|s| random_kb(30_000 + s, &GenConfig::default())).collect();
    results.push((11, criterion11(&members, &generated)));
    results.push((8, criterion8(&bounded)));
    results.sort_by_key(|(n, _)| *n);

    let mut failed = 0;
    for (n, r) in &results {
        match r {
            Ok(msg) => println!("criterion {n:>2}: PASS  {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:?}", results.len() - failed, started.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
