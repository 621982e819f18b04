//! Line-oriented derivation traces.
//!
//! One line per fact, in store order:
//!
//! ```text
//! fact 7: Sharper(H, *) BY S.1 FROM 0,3
//! fact 0: Sharper(H, SN) BY input FROM -
//! ```
//!
//! Seed facts carry `input` or `witness` instead of a rule name.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use super::apply::apply_rule;
use super::rules::RuleId;
use crate::kb_model::{IndividualName, RoleName};
use crate::preprocessor::{Cn, ExtConcept, Fact, FactId, FactStore, Origin, Shape, Universe, BOT, TOP};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TraceError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("fact {id}: premise {premise} does not occur earlier in the trace")]
    PremiseOrder { id: u32, premise: u32 },
    #[error("fact {id}: {rule} does not yield it from its premises")]
    NotReproduced { id: u32, rule: String },
    #[error("fact {id}: not a seed fact of the knowledge base")]
    UnknownSeed { id: u32 },
    #[error("fact {id}: {message}")]
    Rule { id: u32, message: String },
    #[error("fact id {id} appears twice")]
    Duplicate { id: u32 },
}

/// Justification recorded on a trace line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Input,
    Witness,
    Rule(RuleId, Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLine {
    pub id: u32,
    pub fact: Fact,
    pub justification: Justification,
}

fn render_line(out: &mut String, store: &FactStore, id: FactId) {
    let fact = store.fact(id);
    let _ = write!(out, "fact {}: {} BY ", id.0, fact.display(store.universe()));
    match store.origin(id) {
        Origin::Input => out.push_str("input FROM -"),
        Origin::Witness => out.push_str("witness FROM -"),
        Origin::Derived { rule, premises } => {
            let _ = write!(out, "{rule} FROM ");
            if premises.is_empty() {
                out.push('-');
            } else {
                let ids: Vec<String> = premises.iter().map(|p| p.0.to_string()).collect();
                out.push_str(&ids.join(","));
            }
        }
    }
    out.push('\n');
}

/// The full trace of a store.
pub fn render_trace(store: &FactStore) -> String {
    let mut out = String::new();
    for i in 0..store.len() {
        render_line(&mut out, store, FactId(i as u32));
    }
    out
}

/// Ids of `target` and every fact its recorded derivation depends on, ascending.
pub fn support(store: &FactStore, target: FactId) -> BTreeSet<FactId> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![target];
    while let Some(id) = stack.pop() {
        if !seen.insert(id) {
            continue;
        }
        if let Origin::Derived { premises, .. } = store.origin(id) {
            stack.extend(premises.iter().copied());
        }
    }
    seen
}

/// The trace restricted to the support of `target`.
pub fn render_proof(store: &FactStore, target: &Fact) -> Option<String> {
    let id = store.id_of(target)?;
    let mut out = String::new();
    for p in support(store, id) {
        render_line(&mut out, store, p);
    }
    Some(out)
}

fn parse_concept(u: &Universe, text: &str) -> Option<Cn> {
    match text {
        "Top" => Some(TOP),
        "Bot" => Some(BOT),
        _ => {
            if let Some(a) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
                return u.ind(&IndividualName::new(a)).map(|a| u.nominal(a));
            }
            if let Some(r) = text.strip_prefix("Self(").and_then(|t| t.strip_suffix(')')) {
                return u.rl(&RoleName::new(r)).map(|r| u.self_concept(r));
            }
            u.cn(&ExtConcept::Name(text.into()))
        }
    }
}

/// Parses `Shape(arg, ...)` against the names of `u`.
pub fn parse_fact(u: &Universe, text: &str) -> Result<Fact, String> {
    let open = text.find('(').ok_or("missing `(`")?;
    let inner = text[open + 1..].strip_suffix(')').ok_or("missing `)`")?;
    let shape = Shape::from_name(&text[..open]).ok_or_else(|| format!("unknown shape `{}`", &text[..open]))?;
    let args: Vec<&str> = inner.split(", ").collect();
    let sp = |i: usize| u.sp_by_text(args[i]).ok_or_else(|| format!("unknown standpoint `{}`", args[i]));
    let cn = |i: usize| parse_concept(u, args[i]).ok_or_else(|| format!("unknown concept `{}`", args[i]));
    let rl = |i: usize| u.rl(&RoleName::new(args[i])).ok_or_else(|| format!("unknown role `{}`", args[i]));
    let ind = |i: usize| u.ind(&IndividualName::new(args[i])).ok_or_else(|| format!("unknown individual `{}`", args[i]));
    let want = match shape {
        Shape::Sharper => 2,
        Shape::SharperIntersection | Shape::Ria2 => 3,
        Shape::GciNested => 5,
        _ => 4,
    };
    if args.len() != want {
        return Err(format!("{} takes {want} arguments", shape.name()));
    }
    Ok(match shape {
        Shape::Sharper => Fact::Sharper(sp(0)?, sp(1)?),
        Shape::SharperIntersection => Fact::SharperIntersection(sp(0)?, sp(1)?, sp(2)?),
        Shape::Ria2 => Fact::Ria2(sp(0)?, rl(1)?, rl(2)?),
        Shape::Ria3 => Fact::Ria3(sp(0)?, rl(1)?, rl(2)?, rl(3)?),
        Shape::GciNested => Fact::GciNested(sp(0)?, cn(1)?, sp(2)?, cn(3)?, cn(4)?),
        Shape::GciDiaRight => Fact::GciDiaRight(sp(0)?, cn(1)?, sp(2)?, cn(3)?),
        Shape::GciExRight => Fact::GciExRight(sp(0)?, cn(1)?, rl(2)?, cn(3)?),
        Shape::GciExLeft => Fact::GciExLeft(sp(0)?, rl(1)?, cn(2)?, cn(3)?),
        Shape::GciConLeft => Fact::GciConLeft(sp(0)?, cn(1)?, cn(2)?, cn(3)?),
        Shape::RoleAssertion => Fact::RoleAssertion(sp(0)?, rl(1)?, ind(2)?, ind(3)?),
    })
}

/// Parses a trace; blank lines and lines starting with `#` are skipped.
pub fn parse_trace(u: &Universe, text: &str) -> Result<Vec<TraceLine>, TraceError> {
    let mut lines = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| TraceError::Syntax { line: n + 1, message };
        let rest = line.strip_prefix("fact ").ok_or_else(|| err("expected `fact`".into()))?;
        let (id, rest) = rest.split_once(": ").ok_or_else(|| err("expected `:`".into()))?;
        let id: u32 = id.parse().map_err(|_| err(format!("bad id `{id}`")))?;
        let (fact, rest) = rest.rsplit_once(" BY ").ok_or_else(|| err("expected `BY`".into()))?;
        let (rule, from) = rest.split_once(" FROM ").ok_or_else(|| err("expected `FROM`".into()))?;
        let fact = parse_fact(u, fact).map_err(err)?;
        let premises: Vec<u32> = if from == "-" {
            vec![]
        } else {
            from.split(',').map(|p| p.parse().map_err(|_| err(format!("bad premise `{p}`")))).collect::<Result<_, _>>()?
        };
        let justification = match rule {
            "input" => Justification::Input,
            "witness" => Justification::Witness,
            other => Justification::Rule(other.parse().map_err(err)?, premises),
        };
        lines.push(TraceLine { id, fact, justification });
    }
    Ok(lines)
}

/// Checks a trace: seed lines must be seeds of `seeds` with the same origin; every other line
/// must follow by its rule from premises on earlier lines.
pub fn check_trace(lines: &[TraceLine], seeds: &FactStore) -> Result<(), TraceError> {
    let u = seeds.universe();
    let mut known: HashMap<u32, Fact> = HashMap::new();
    for line in lines {
        match &line.justification {
            Justification::Input | Justification::Witness => {
                let want = if line.justification == Justification::Input { Origin::Input } else { Origin::Witness };
                match seeds.id_of(&line.fact) {
                    Some(i) if *seeds.origin(i) == want => {}
                    _ => return Err(TraceError::UnknownSeed { id: line.id }),
                }
            }
            Justification::Rule(rule, premises) => {
                let mut facts = Vec::with_capacity(premises.len());
                for p in premises {
                    match known.get(p) {
                        Some(f) if *p < line.id => facts.push(*f),
                        _ => return Err(TraceError::PremiseOrder { id: line.id, premise: *p }),
                    }
                }
                let out = apply_rule(*rule, &facts, u).map_err(|e| TraceError::Rule { id: line.id, message: e.to_string() })?;
                if !out.contains(&line.fact) {
                    return Err(TraceError::NotReproduced { id: line.id, rule: rule.to_string() });
                }
            }
        }
        if known.insert(line.id, line.fact).is_some() {
            return Err(TraceError::Duplicate { id: line.id });
        }
    }
    Ok(())
}

/// Checks every recorded derivation of a saturated store against [`apply_rule`].
pub fn replay(store: &FactStore) -> Result<(), TraceError> {
    let u = store.universe();
    for (id, fact, origin) in store.iter() {
        if let Origin::Derived { rule, premises } = origin {
            let mut facts = Vec::with_capacity(premises.len());
            for p in premises {
                if *p >= id {
                    return Err(TraceError::PremiseOrder { id: id.0, premise: p.0 });
                }
                facts.push(store.fact(*p));
            }
            let out = apply_rule(*rule, &facts, u).map_err(|e| TraceError::Rule { id: id.0, message: e.to_string() })?;
            if !out.contains(fact) {
                return Err(TraceError::NotReproduced { id: id.0, rule: rule.to_string() });
            }
        }
    }
    Ok(())
}
