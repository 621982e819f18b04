//! Satisfiability and entailment checking on top of saturation.

#[cfg(test)]
mod tests;

use std::collections::BTreeSet;

use crate::kb_model::{KnowledgeBase, Literal, Modality, Query, SharpRhs, StandpointName, Statement};
use crate::normalizer::normalize;
use crate::parser::{render_query, render_statement};
use crate::preprocessor::{prep, Fact, REFUTATION};
use crate::saturation::{is_refuted, saturate, trace::render_proof, SaturationConfig, SaturationError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Sat,
    Unsat,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Sat => "SAT",
            Verdict::Unsat => "UNSAT",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatResult {
    pub verdict: Verdict,
    pub fact_count: usize,
    /// Derivation of the refutation fact; only when UNSAT and tracing is on.
    pub refutation_trace: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntailVerdict {
    Entailed,
    NotEntailed,
}

impl EntailVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            EntailVerdict::Entailed => "ENTAILED",
            EntailVerdict::NotEntailed => "NOT_ENTAILED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcheck {
    pub description: String,
    pub result: SatResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntailResult {
    pub verdict: EntailVerdict,
    pub subchecks: Vec<Subcheck>,
    /// The standpoint `u` with `u ⪯ s` and `□_u[μ]` found for a diamond query.
    pub witness_standpoint: Option<StandpointName>,
}

#[derive(Clone, Debug, Default)]
pub struct ReasonerConfig {
    pub saturation: SaturationConfig,
    pub trace: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReasonerError {
    #[error(transparent)]
    Saturation(#[from] SaturationError),
}

pub fn check_sat(kb: &KnowledgeBase) -> Result<SatResult, ReasonerError> {
    check_sat_with(kb, &ReasonerConfig::default())
}

pub fn check_sat_with(kb: &KnowledgeBase, config: &ReasonerConfig) -> Result<SatResult, ReasonerError> {
    let store = saturate(prep(kb), &config.saturation)?;
    let refuted = is_refuted(&store);
    Ok(SatResult {
        verdict: if refuted { Verdict::Unsat } else { Verdict::Sat },
        fact_count: store.len(),
        refutation_trace: (refuted && config.trace).then(|| render_proof(&store, &REFUTATION)).flatten(),
    })
}

pub fn entails(kb: &KnowledgeBase, query: &Query) -> Result<EntailResult, ReasonerError> {
    entails_with(kb, query, &ReasonerConfig::default())
}

pub fn entails_with(kb: &KnowledgeBase, query: &Query, config: &ReasonerConfig) -> Result<EntailResult, ReasonerError> {
    let kb = kb.with_vocabulary(&query.names());
    let mut run = Run { config, subchecks: Vec::new() };
    let (entailed, witness) = match query {
        Query::Statement(Statement::Sharpening { negated, lhs, rhs }) => {
            let flipped = Statement::sharpening(!negated, lhs.clone(), rhs.clone());
            (run.refutes(&kb, flipped)?, None)
        }
        Query::Statement(Statement::Formula { modality: Modality::Box, standpoint, monomial }) => {
            (run.boxed(&kb, standpoint, monomial)?, None)
        }
        Query::Statement(Statement::Formula { modality: Modality::Diamond, standpoint, monomial }) => {
            match monomial.as_slice() {
                [] => (true, None),
                [lit] => {
                    let negated = Statement::formula(Modality::Box, standpoint.clone(), vec![lit.flipped()]);
                    (run.refutes(&kb, negated)?, None)
                }
                _ => {
                    let witness = run.diamond(&kb, standpoint, monomial)?;
                    (witness.is_some(), witness)
                }
            }
        }
        Query::NotFormula { modality, standpoint, monomial } => {
            (run.refutes(&kb, Statement::formula(*modality, standpoint.clone(), monomial.clone()))?, None)
        }
    };
    Ok(EntailResult {
        verdict: if entailed { EntailVerdict::Entailed } else { EntailVerdict::NotEntailed },
        subchecks: run.subchecks,
        witness_standpoint: witness,
    })
}

/// Applies [`entails`] to each query in order.
pub fn intermediate_entailments(
    kb: &KnowledgeBase,
    queries: &[Query],
    config: &ReasonerConfig,
) -> Result<Vec<(Query, EntailResult)>, ReasonerError> {
    queries.iter().map(|q| Ok((q.clone(), entails_with(kb, q, config)?))).collect()
}

struct Run<'c> {
    config: &'c ReasonerConfig,
    subchecks: Vec<Subcheck>,
}

fn describe(stmt: &Statement) -> String {
    render_statement(stmt).unwrap_or_else(|_| format!("{stmt:?}"))
}

impl Run<'_> {
    /// True when `kb ∪ {extra}` is unsatisfiable.
    fn refutes(&mut self, kb: &KnowledgeBase, extra: Statement) -> Result<bool, ReasonerError> {
        let description = format!("K + {}", describe(&extra));
        let result = check_sat_with(&kb.with_statements([extra]), self.config)?;
        let unsat = result.verdict == Verdict::Unsat;
        self.subchecks.push(Subcheck { description, result });
        Ok(unsat)
    }

    /// `kb ⊨ □_s[λ1 ∧ … ∧ λn]`, one refutation per literal.
    fn boxed(&mut self, kb: &KnowledgeBase, s: &StandpointName, monomial: &[Literal]) -> Result<bool, ReasonerError> {
        for lit in monomial {
            if !self.refutes(kb, Statement::formula(Modality::Diamond, s.clone(), vec![lit.flipped()]))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Finds `u` with `K′ ⊨ u ⪯ s` and `K′ ⊨ □_u[μ]` over the normalized KB.
    fn diamond(
        &mut self,
        kb: &KnowledgeBase,
        s: &StandpointName,
        monomial: &[Literal],
    ) -> Result<Option<StandpointName>, ReasonerError> {
        let normal = normalize(kb);
        let mut candidates: BTreeSet<StandpointName> = normal.vocabulary().standpoints.clone();
        candidates.insert(s.clone());
        candidates.insert(StandpointName::star());

        let closure = saturate(prep(&normal), &self.config.saturation)?;
        let u_of = |name: &StandpointName| closure.universe().sp_by_text(name.as_str());
        for u in &candidates {
            let fast = u == s
                || s.is_star()
                || matches!((u_of(u), u_of(s)), (Some(a), Some(b)) if closure.contains(&Fact::Sharper(a, b)));
            let sharper = fast || self.refutes(&normal, Statement::sharpening(true, vec![u.clone()], SharpRhs::Standpoint(s.clone())))?;
            if sharper && self.boxed(&normal, u, monomial)? {
                return Ok(Some(u.clone()));
            }
        }
        Ok(None)
    }
}

/// Text form of a query for reports.
pub fn describe_query(q: &Query) -> String {
    render_query(q).unwrap_or_else(|_| format!("{q:?}"))
}
