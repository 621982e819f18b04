//! Propositional encoding of a bounded model search.

use rustc_hash::FxHashMap;
use varisat::{CnfFormula, ExtendFormula, Lit, Var};

use super::condition::Condition;
use crate::kb_model::{
    Axiom, Concept, ConceptName, IndividualName, Literal, Modality, RoleName, SharpRhs, StandpointName, Statement,
    Vocabulary,
};

/// Grounding step budget was exhausted.
#[derive(Debug)]
pub(crate) struct OutOfBudget;

/// A gate output, folded when constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum B {
    Const(bool),
    L(Lit),
}

impl std::ops::Not for B {
    type Output = B;
    fn not(self) -> B {
        match self {
            B::Const(b) => B::Const(!b),
            B::L(l) => B::L(!l),
        }
    }
}

pub(crate) struct Grounding<'v> {
    pub d: usize,
    pub p: usize,
    pub cnf: CnfFormula,
    pub sigma: FxHashMap<&'v StandpointName, Vec<Var>>,
    pub concepts: FxHashMap<&'v ConceptName, Vec<Vec<Var>>>,
    pub roles: FxHashMap<&'v RoleName, Vec<Vec<Vec<Var>>>>,
    pub individuals: FxHashMap<&'v IndividualName, Vec<Var>>,
    memo: FxHashMap<(Concept, usize), Vec<B>>,
    steps: u64,
    budget: u64,
}

impl<'v> Grounding<'v> {
    pub fn new(vocab: &'v Vocabulary, d: usize, p: usize, budget: u64) -> Result<Self, OutOfBudget> {
        let mut cnf = CnfFormula::new();
        let mut grid = |n: usize| (0..n).map(|_| cnf.new_var()).collect::<Vec<_>>();
        let sigma: FxHashMap<_, _> =
            vocab.standpoints.iter().filter(|s| !s.is_star()).map(|s| (s, grid(p))).collect();
        let concepts: FxHashMap<_, _> =
            vocab.concepts.iter().map(|c| (c, (0..p).map(|_| grid(d)).collect())).collect();
        let roles: FxHashMap<_, _> = vocab
            .roles
            .iter()
            .map(|r| (r, (0..p).map(|_| (0..d).map(|_| grid(d)).collect()).collect()))
            .collect();
        let individuals: FxHashMap<_, _> = vocab.individuals.iter().map(|a| (a, grid(d))).collect();
        let mut g = Grounding { d, p, cnf, sigma, concepts, roles, individuals, memo: FxHashMap::default(), steps: 0, budget };
        let sigma_rows: Vec<Vec<Var>> = g.sigma.values().cloned().collect();
        for row in sigma_rows {
            g.clause(row.iter().map(|v| v.positive()).collect())?;
        }
        let ind_rows: Vec<Vec<Var>> = g.individuals.values().cloned().collect();
        for row in ind_rows {
            g.clause(row.iter().map(|v| v.positive()).collect())?;
            for i in 0..d {
                for j in i + 1..d {
                    g.clause(vec![row[i].negative(), row[j].negative()])?;
                }
            }
        }
        Ok(g)
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    fn clause(&mut self, lits: Vec<Lit>) -> Result<(), OutOfBudget> {
        self.tick()?;
        self.cnf.add_clause(&lits);
        Ok(())
    }

    fn and(&mut self, inputs: impl IntoIterator<Item = B>) -> Result<B, OutOfBudget> {
        let mut lits = Vec::new();
        for b in inputs {
            match b {
                B::Const(false) => return Ok(B::Const(false)),
                B::Const(true) => {}
                B::L(l) => lits.push(l),
            }
        }
        lits.sort_unstable();
        lits.dedup();
        match lits.len() {
            0 => Ok(B::Const(true)),
            1 => Ok(B::L(lits[0])),
            _ => {
                if lits.windows(2).any(|w| w[0].var() == w[1].var()) {
                    return Ok(B::Const(false));
                }
                let g = self.cnf.new_var().positive();
                for &l in &lits {
                    self.clause(vec![!g, l])?;
                }
                let mut back: Vec<Lit> = lits.iter().map(|&l| !l).collect();
                back.push(g);
                self.clause(back)?;
                Ok(B::L(g))
            }
        }
    }

    fn or(&mut self, inputs: impl IntoIterator<Item = B>) -> Result<B, OutOfBudget> {
        let negated: Vec<B> = inputs.into_iter().map(|b| !b).collect();
        Ok(!self.and(negated)?)
    }

    fn implies(&mut self, a: B, b: B) -> Result<B, OutOfBudget> {
        self.or([!a, b])
    }

    fn sigma_at(&self, s: &StandpointName, pi: usize) -> B {
        if s.is_star() {
            B::Const(true)
        } else {
            B::L(self.sigma[s][pi].positive())
        }
    }

    fn role_at(&self, r: &RoleName, pi: usize) -> Vec<Vec<B>> {
        self.roles[r][pi].iter().map(|row| row.iter().map(|v| B::L(v.positive())).collect()).collect()
    }

    /// Extension of `c` at `pi`, one gate per element.
    fn concept(&mut self, pi: usize, c: &Concept) -> Result<Vec<B>, OutOfBudget> {
        let key_pi = if matches!(c, Concept::Modal(..)) { usize::MAX } else { pi };
        if let Some(v) = self.memo.get(&(c.clone(), key_pi)) {
            return Ok(v.clone());
        }
        let d = self.d;
        let out = match c {
            Concept::Top => vec![B::Const(true); d],
            Concept::Bottom => vec![B::Const(false); d],
            Concept::Name(n) => self.concepts[n][pi].iter().map(|v| B::L(v.positive())).collect(),
            Concept::Nominal(a) => self.individuals[a].iter().map(|v| B::L(v.positive())).collect(),
            Concept::And(l, r) => {
                let l = self.concept(pi, l)?;
                let r = self.concept(pi, r)?;
                let mut out = Vec::with_capacity(d);
                for e in 0..d {
                    out.push(self.and([l[e], r[e]])?);
                }
                out
            }
            Concept::Exists(r, f) => {
                let f = self.concept(pi, f)?;
                let rel = self.role_at(r, pi);
                let mut out = Vec::with_capacity(d);
                for row in &rel {
                    let mut terms = Vec::with_capacity(d);
                    for e in 0..d {
                        terms.push(self.and([row[e], f[e]])?);
                    }
                    out.push(self.or(terms)?);
                }
                out
            }
            Concept::SelfLoop(r) => {
                let rel = self.role_at(r, pi);
                (0..d).map(|e| rel[e][e]).collect()
            }
            Concept::Modal(m, s, inner) => {
                let mut per = Vec::with_capacity(self.p);
                for q in 0..self.p {
                    per.push(self.concept(q, inner)?);
                }
                let mut out = Vec::with_capacity(d);
                for e in 0..d {
                    let mut terms = Vec::with_capacity(self.p);
                    for (q, ext) in per.iter().enumerate() {
                        let sig = self.sigma_at(s, q);
                        terms.push(match m {
                            Modality::Box => self.implies(sig, ext[e])?,
                            Modality::Diamond => self.and([sig, ext[e]])?,
                        });
                    }
                    out.push(match m {
                        Modality::Box => self.and(terms)?,
                        Modality::Diamond => self.or(terms)?,
                    });
                }
                out
            }
        };
        self.memo.insert((c.clone(), key_pi), out.clone());
        Ok(out)
    }

    fn point(&self, a: &IndividualName) -> Vec<B> {
        self.individuals[a].iter().map(|v| B::L(v.positive())).collect()
    }

    fn axiom(&mut self, pi: usize, ax: &Axiom) -> Result<B, OutOfBudget> {
        let d = self.d;
        match ax {
            Axiom::Gci(l, r) => {
                let l = self.concept(pi, l)?;
                let r = self.concept(pi, r)?;
                let mut terms = Vec::with_capacity(d);
                for e in 0..d {
                    terms.push(self.implies(l[e], r[e])?);
                }
                self.and(terms)
            }
            Axiom::Ria(chain, sup) => {
                let mut rel = self.role_at(&chain[0], pi);
                for r in &chain[1..] {
                    let next = self.role_at(r, pi);
                    let mut composed = vec![vec![B::Const(false); d]; d];
                    for x in 0..d {
                        for z in 0..d {
                            let mut terms = Vec::with_capacity(d);
                            for y in 0..d {
                                terms.push(self.and([rel[x][y], next[y][z]])?);
                            }
                            composed[x][z] = self.or(terms)?;
                        }
                    }
                    rel = composed;
                }
                let sup = self.role_at(sup, pi);
                let mut terms = Vec::with_capacity(d * d);
                for x in 0..d {
                    for y in 0..d {
                        terms.push(self.implies(rel[x][y], sup[x][y])?);
                    }
                }
                self.and(terms)
            }
            Axiom::ConceptAssertion(c, a) => {
                let ext = self.concept(pi, c)?;
                let at = self.point(a);
                let mut terms = Vec::with_capacity(d);
                for e in 0..d {
                    terms.push(self.and([at[e], ext[e]])?);
                }
                self.or(terms)
            }
            Axiom::RoleAssertion(r, a, b) => {
                let rel = self.role_at(r, pi);
                let (pa, pb) = (self.point(a), self.point(b));
                let mut terms = Vec::with_capacity(d * d);
                for x in 0..d {
                    for y in 0..d {
                        terms.push(self.and([pa[x], pb[y], rel[x][y]])?);
                    }
                }
                self.or(terms)
            }
        }
    }

    fn literal(&mut self, pi: usize, lit: &Literal) -> Result<B, OutOfBudget> {
        let b = self.axiom(pi, &lit.axiom)?;
        Ok(if lit.negated { !b } else { b })
    }

    fn statement(&mut self, stmt: &Statement) -> Result<B, OutOfBudget> {
        let p = self.p;
        match stmt {
            Statement::Formula { modality, standpoint, monomial } => {
                let mut terms = Vec::with_capacity(p);
                for pi in 0..p {
                    let mut lits = Vec::with_capacity(monomial.len());
                    for lit in monomial {
                        lits.push(self.literal(pi, lit)?);
                    }
                    let mono = self.and(lits)?;
                    let sig = self.sigma_at(standpoint, pi);
                    terms.push(match modality {
                        Modality::Box => self.implies(sig, mono)?,
                        Modality::Diamond => self.and([sig, mono])?,
                    });
                }
                match modality {
                    Modality::Box => self.and(terms),
                    Modality::Diamond => self.or(terms),
                }
            }
            Statement::Sharpening { negated, lhs, rhs } => {
                let mut terms = Vec::with_capacity(p);
                for pi in 0..p {
                    let parts: Vec<B> = lhs.iter().map(|s| self.sigma_at(s, pi)).collect();
                    let inter = self.and(parts)?;
                    let target = match rhs {
                        SharpRhs::Standpoint(s) => self.sigma_at(s, pi),
                        SharpRhs::Empty => B::Const(false),
                    };
                    terms.push(self.implies(inter, target)?);
                }
                let holds = self.and(terms)?;
                Ok(if *negated { !holds } else { holds })
            }
        }
    }

    fn condition(&mut self, cond: &Condition) -> Result<B, OutOfBudget> {
        match cond {
            Condition::Holds(s) => self.statement(s),
            Condition::Fails(s) => Ok(!self.statement(s)?),
            Condition::Nested { outer, lhs, inner, guard, rhs } => {
                let (d, p) = (self.d, self.p);
                let mut required = Vec::with_capacity(d);
                let mut guards = Vec::with_capacity(p);
                for q in 0..p {
                    guards.push((self.concept(q, guard)?, self.concept(q, rhs)?));
                }
                for e in 0..d {
                    let mut terms = Vec::with_capacity(p);
                    for (q, (g, r)) in guards.iter().enumerate() {
                        let sig = self.sigma_at(inner, q);
                        let inside = self.implies(g[e], r[e])?;
                        terms.push(self.implies(sig, inside)?);
                    }
                    required.push(self.and(terms)?);
                }
                let mut terms = Vec::with_capacity(p * d);
                for q in 0..p {
                    let ext = self.concept(q, lhs)?;
                    let sig = self.sigma_at(outer, q);
                    for e in 0..d {
                        let here = self.and([sig, ext[e]])?;
                        terms.push(self.implies(here, required[e])?);
                    }
                }
                self.and(terms)
            }
        }
    }

    /// Asserts `cond`. Returns false when it folded to a constant contradiction.
    pub fn require(&mut self, cond: &Condition) -> Result<bool, OutOfBudget> {
        match self.condition(cond)? {
            B::Const(b) => Ok(b),
            B::L(l) => {
                self.clause(vec![l])?;
                Ok(true)
            }
        }
    }
}
