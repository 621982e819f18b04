//! Finite standpoint structures and direct evaluation of the satisfaction relation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::condition::Condition;
use crate::kb_model::{
    Axiom, Concept, ConceptName, IndividualName, Literal, Modality, RoleName, SharpRhs, StandpointName, Statement,
};

/// Largest supported domain or precisification count; sets are stored as `u64` masks.
pub const MAX_SIZE: usize = 64;

/// `⟨Δ, Π, σ, γ⟩` with `Δ = {0..domain_size}` and `Π = {0..precisifications}`.
///
/// Element and precisification sets are bit masks. `σ(*) = Π` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandpointStructure {
    pub domain_size: usize,
    pub precisifications: usize,
    pub sigma: BTreeMap<StandpointName, u64>,
    /// Per precisification, the extension of each concept name.
    pub concepts: BTreeMap<ConceptName, Vec<u64>>,
    /// Per precisification and element, the successor set of each role.
    pub roles: BTreeMap<RoleName, Vec<Vec<u64>>>,
    pub individuals: BTreeMap<IndividualName, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("{kind} `{name}` is not interpreted")]
    Undeclared { kind: &'static str, name: String },
    #[error("precisification {0} does not exist")]
    NoPrecisification(usize),
}

fn undeclared(kind: &'static str, name: &impl ToString) -> EvalError {
    EvalError::Undeclared { kind, name: name.to_string() }
}

fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

impl StandpointStructure {
    pub fn all_elements(&self) -> u64 {
        full(self.domain_size)
    }

    pub fn all_precisifications(&self) -> u64 {
        full(self.precisifications)
    }

    pub fn sigma_of(&self, s: &StandpointName) -> Result<u64, EvalError> {
        if s.is_star() {
            return Ok(self.all_precisifications());
        }
        self.sigma.get(s).copied().ok_or_else(|| undeclared("standpoint", s))
    }

    fn role(&self, pi: usize, r: &RoleName) -> Result<&[u64], EvalError> {
        let per = self.roles.get(r).ok_or_else(|| undeclared("role", r))?;
        per.get(pi).map(Vec::as_slice).ok_or(EvalError::NoPrecisification(pi))
    }

    fn element(&self, a: &IndividualName) -> Result<usize, EvalError> {
        self.individuals.get(a).copied().ok_or_else(|| undeclared("individual", a))
    }

    /// Checks the structural invariants: nonempty Δ, nonempty σ(s) ⊆ Π, sized tables.
    pub fn is_well_formed(&self) -> bool {
        let d = self.domain_size;
        let p = self.precisifications;
        (1..=MAX_SIZE).contains(&d)
            && (1..=MAX_SIZE).contains(&p)
            && self.sigma.values().all(|&m| m != 0 && m & !self.all_precisifications() == 0)
            && self.concepts.values().all(|v| v.len() == p && v.iter().all(|&m| m & !self.all_elements() == 0))
            && self.roles.values().all(|v| {
                v.len() == p && v.iter().all(|rows| rows.len() == d && rows.iter().all(|&m| m & !self.all_elements() == 0))
            })
            && self.individuals.values().all(|&e| e < d)
    }

    /// Extension of `c` in precisification `pi`.
    pub fn eval_concept(&self, pi: usize, c: &Concept) -> Result<u64, EvalError> {
        if pi >= self.precisifications {
            return Err(EvalError::NoPrecisification(pi));
        }
        Ok(match c {
            Concept::Top => self.all_elements(),
            Concept::Bottom => 0,
            Concept::Name(n) => {
                let per = self.concepts.get(n).ok_or_else(|| undeclared("concept", n))?;
                per[pi]
            }
            Concept::And(l, r) => self.eval_concept(pi, l)? & self.eval_concept(pi, r)?,
            Concept::Exists(r, f) => {
                let filler = self.eval_concept(pi, f)?;
                let rel = self.role(pi, r)?;
                (0..self.domain_size).filter(|&d| rel[d] & filler != 0).fold(0, |m, d| m | 1 << d)
            }
            Concept::SelfLoop(r) => {
                let rel = self.role(pi, r)?;
                (0..self.domain_size).filter(|&d| rel[d] >> d & 1 == 1).fold(0, |m, d| m | 1 << d)
            }
            Concept::Modal(m, s, inner) => {
                let sig = self.sigma_of(s)?;
                let mut acc = match m {
                    Modality::Box => self.all_elements(),
                    Modality::Diamond => 0,
                };
                for p in bits(sig) {
                    let ext = self.eval_concept(p, inner)?;
                    match m {
                        Modality::Box => acc &= ext,
                        Modality::Diamond => acc |= ext,
                    }
                }
                acc
            }
            Concept::Nominal(a) => 1 << self.element(a)?,
        })
    }

    /// The relation denoted by a role chain, as successor masks.
    fn chain(&self, pi: usize, roles: &[RoleName]) -> Result<Vec<u64>, EvalError> {
        let mut rel: Vec<u64> = self.role(pi, &roles[0])?.to_vec();
        for r in &roles[1..] {
            let next = self.role(pi, r)?;
            rel = rel.iter().map(|&succ| bits(succ).fold(0, |m, e| m | next[e])).collect();
        }
        Ok(rel)
    }

    pub fn eval_axiom(&self, pi: usize, ax: &Axiom) -> Result<bool, EvalError> {
        Ok(match ax {
            Axiom::Gci(l, r) => self.eval_concept(pi, l)? & !self.eval_concept(pi, r)? == 0,
            Axiom::Ria(chain, sup) => {
                let lhs = self.chain(pi, chain)?;
                let rhs = self.role(pi, sup)?;
                lhs.iter().zip(rhs).all(|(l, r)| l & !r == 0)
            }
            Axiom::ConceptAssertion(c, a) => self.eval_concept(pi, c)? >> self.element(a)? & 1 == 1,
            Axiom::RoleAssertion(r, a, b) => self.role(pi, r)?[self.element(a)?] >> self.element(b)? & 1 == 1,
        })
    }

    pub fn eval_literal(&self, pi: usize, lit: &Literal) -> Result<bool, EvalError> {
        Ok(self.eval_axiom(pi, &lit.axiom)? != lit.negated)
    }

    pub fn eval_statement(&self, stmt: &Statement) -> Result<bool, EvalError> {
        match stmt {
            Statement::Formula { modality, standpoint, monomial } => {
                let sig = self.sigma_of(standpoint)?;
                let mut results = Vec::new();
                for p in bits(sig) {
                    let mut ok = true;
                    for lit in monomial {
                        ok &= self.eval_literal(p, lit)?;
                    }
                    results.push(ok);
                }
                Ok(match modality {
                    Modality::Box => results.iter().all(|&b| b),
                    Modality::Diamond => results.iter().any(|&b| b),
                })
            }
            Statement::Sharpening { negated, lhs, rhs } => {
                let mut inter = self.all_precisifications();
                for s in lhs {
                    inter &= self.sigma_of(s)?;
                }
                let target = match rhs {
                    SharpRhs::Standpoint(s) => self.sigma_of(s)?,
                    SharpRhs::Empty => 0,
                };
                Ok((inter & !target == 0) != *negated)
            }
        }
    }

    pub fn eval_condition(&self, cond: &Condition) -> Result<bool, EvalError> {
        match cond {
            Condition::Holds(s) => self.eval_statement(s),
            Condition::Fails(s) => Ok(!self.eval_statement(s)?),
            Condition::Nested { outer, lhs, inner, guard, rhs } => {
                let inner_sig = self.sigma_of(inner)?;
                let mut required = self.all_elements();
                for p in bits(inner_sig) {
                    required &= !self.eval_concept(p, guard)? | self.eval_concept(p, rhs)?;
                }
                for p in bits(self.sigma_of(outer)?) {
                    if self.eval_concept(p, lhs)? & !required != 0 {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// Stable text rendering: Δ, Π, σ, individuals, then one block per precisification.
    pub fn dump(&self) -> String {
        let set = |mask: u64, prefix: &str| {
            let items: Vec<String> = bits(mask).map(|i| format!("{prefix}{i}")).collect();
            format!("{{{}}}", items.join(", "))
        };
        let mut out = String::new();
        let _ = writeln!(out, "domain: {}", set(self.all_elements(), "d"));
        let _ = writeln!(out, "precisifications: {}", set(self.all_precisifications(), "p"));
        let _ = writeln!(out, "sigma(*) = {}", set(self.all_precisifications(), "p"));
        for (s, m) in &self.sigma {
            let _ = writeln!(out, "sigma({s}) = {}", set(*m, "p"));
        }
        for (a, e) in &self.individuals {
            let _ = writeln!(out, "individual {a} = d{e}");
        }
        for p in 0..self.precisifications {
            let _ = writeln!(out, "p{p}:");
            for (c, ext) in &self.concepts {
                let _ = writeln!(out, "  {c} = {}", set(ext[p], "d"));
            }
            for (r, rel) in &self.roles {
                let pairs: Vec<String> = rel[p]
                    .iter()
                    .enumerate()
                    .flat_map(|(d, &succ)| bits(succ).map(move |e| format!("(d{d}, d{e})")))
                    .collect();
                let _ = writeln!(out, "  {r} = {{{}}}", pairs.join(", "));
            }
        }
        out
    }
}
