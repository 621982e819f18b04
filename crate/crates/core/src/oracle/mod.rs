//! Bounded model search over finite standpoint structures.
//!
//! The search grounds the satisfaction relation into propositional clauses
//! and hands them to a SAT solver, one candidate size at a time, smallest
//! first. Every model returned is re-checked with the direct evaluator in
//! [`structure`], which shares no code with the grounding.

mod condition;
mod ground;
mod structure;

#[cfg(test)]
mod tests;

use std::collections::BTreeMap;

pub use condition::{ext_concept_term, fact_condition, kb_conditions, query_countercondition, seed_conditions, Condition};
pub use structure::{EvalError, StandpointStructure, MAX_SIZE};

use crate::kb_model::{KnowledgeBase, Query, Vocabulary};
use ground::Grounding;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Model(StandpointStructure),
    /// No structure exists within the bounds; says nothing about larger ones.
    NoneWithinBounds,
    /// The step budget ran out before the search finished.
    Inconclusive { steps: u64 },
}

impl Outcome {
    pub fn model(&self) -> Option<&StandpointStructure> {
        match self {
            Outcome::Model(m) => Some(m),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("bounds must be between 1 and {MAX_SIZE}, got domain {domain} and precisifications {precisifications}")]
    Bounds { domain: usize, precisifications: usize },
    #[error("model failed verification: {0}")]
    SelfCheck(String),
    #[error("solver failure: {0}")]
    Solver(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_domain: usize,
    pub max_precisifications: usize,
    pub budget: u64,
}

impl Bounds {
    pub fn new(max_domain: usize, max_precisifications: usize) -> Bounds {
        Bounds { max_domain, max_precisifications, budget: DEFAULT_BUDGET }
    }

    pub fn with_budget(self, budget: u64) -> Bounds {
        Bounds { budget, ..self }
    }

    /// Candidate sizes in search order: by `d + p`, then by `d`.
    fn sizes(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (1..=self.max_domain)
            .flat_map(|d| (1..=self.max_precisifications).map(move |p| (d, p)))
            .collect();
        out.sort_by_key(|&(d, p)| (d + p, d));
        out
    }
}

/// Searches for a model of `kb` with at most the given numbers of elements and precisifications.
pub fn find_model(kb: &KnowledgeBase, max_domain: usize, max_precisifications: usize) -> Result<Outcome, OracleError> {
    find_model_conditions(&kb_conditions(kb), kb.vocabulary(), Bounds::new(max_domain, max_precisifications))
}

/// Searches for a model of `kb` in which `query` is false.
pub fn find_countermodel(kb: &KnowledgeBase, query: &Query, bounds: Bounds) -> Result<Outcome, OracleError> {
    let mut conds = kb_conditions(kb);
    conds.push(query_countercondition(query));
    find_model_conditions(&conds, kb.vocabulary(), bounds)
}

/// Searches for a structure satisfying every condition. Names in `vocab` are
/// interpreted even when no condition mentions them.
pub fn find_model_conditions(conds: &[Condition], vocab: &Vocabulary, bounds: Bounds) -> Result<Outcome, OracleError> {
    let ok = |n: usize| (1..=MAX_SIZE).contains(&n);
    if !ok(bounds.max_domain) || !ok(bounds.max_precisifications) {
        return Err(OracleError::Bounds { domain: bounds.max_domain, precisifications: bounds.max_precisifications });
    }
    let mut names = vocab.clone();
    for c in conds {
        c.collect_names(&mut names);
    }
    let mut spent = 0u64;
    for (d, p) in bounds.sizes() {
        let remaining = bounds.budget.saturating_sub(spent);
        match solve_at(conds, &names, d, p, remaining)? {
            Attempt::Found(m) => {
                verify(&m, conds)?;
                return Ok(Outcome::Model(m));
            }
            Attempt::Empty(steps) => spent += steps,
            Attempt::OutOfBudget => return Ok(Outcome::Inconclusive { steps: bounds.budget }),
        }
    }
    Ok(Outcome::NoneWithinBounds)
}

enum Attempt {
    Found(StandpointStructure),
    Empty(u64),
    OutOfBudget,
}

fn solve_at(conds: &[Condition], names: &Vocabulary, d: usize, p: usize, budget: u64) -> Result<Attempt, OracleError> {
    let Ok(mut g) = Grounding::new(names, d, p, budget) else {
        return Ok(Attempt::OutOfBudget);
    };
    for c in conds {
        match g.require(c) {
            Ok(true) => {}
            Ok(false) => return Ok(Attempt::Empty(g.steps())),
            Err(_) => return Ok(Attempt::OutOfBudget),
        }
    }
    let mut solver = varisat::Solver::new();
    solver.add_formula(&g.cnf);
    if !solver.solve().map_err(|e| OracleError::Solver(e.to_string()))? {
        return Ok(Attempt::Empty(g.steps()));
    }
    let model = solver.model().ok_or_else(|| OracleError::Solver("no model after SAT".into()))?;
    let mut truth = vec![false; g.cnf.var_count()];
    for lit in model {
        if lit.var().index() < truth.len() {
            truth[lit.var().index()] = lit.is_positive();
        }
    }
    let val = |v: &varisat::Var| truth[v.index()];
    let mask = |row: &[varisat::Var]| row.iter().enumerate().filter(|(_, v)| val(v)).fold(0u64, |m, (i, _)| m | 1 << i);
    let structure = StandpointStructure {
        domain_size: d,
        precisifications: p,
        sigma: g.sigma.iter().map(|(s, row)| ((*s).clone(), mask(row))).collect(),
        concepts: g.concepts.iter().map(|(c, per)| ((*c).clone(), per.iter().map(|row| mask(row)).collect())).collect(),
        roles: g
            .roles
            .iter()
            .map(|(r, per)| ((*r).clone(), per.iter().map(|rows| rows.iter().map(|row| mask(row)).collect()).collect()))
            .collect(),
        individuals: g
            .individuals
            .iter()
            .map(|(a, row)| ((*a).clone(), row.iter().position(val).expect("one-hot individual")))
            .collect::<BTreeMap<_, _>>(),
    };
    Ok(Attempt::Found(structure))
}

fn verify(m: &StandpointStructure, conds: &[Condition]) -> Result<(), OracleError> {
    if !m.is_well_formed() {
        return Err(OracleError::SelfCheck("structure is not well formed".into()));
    }
    for c in conds {
        match m.eval_condition(c) {
            Ok(true) => {}
            Ok(false) => return Err(OracleError::SelfCheck(format!("{c:?} is false"))),
            Err(e) => return Err(OracleError::SelfCheck(e.to_string())),
        }
    }
    Ok(())
}
