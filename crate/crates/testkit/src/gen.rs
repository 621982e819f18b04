//! Seeded generators of random knowledge bases over small vocabularies.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spel_core::kb_model::{
    Axiom, Concept, ConceptName, IndividualName, KnowledgeBase, Literal, Modality, RoleName, SharpRhs,
    StandpointName, Statement,
};

/// Shape parameters for [`random_kb`].
#[derive(Clone, Debug)]
pub struct GenConfig {
    pub concepts: usize,
    pub roles: usize,
    pub individuals: usize,
    pub standpoints: usize,
    pub statements: usize,
    pub max_depth: usize,
    pub max_monomial: usize,
    /// Probability that a literal or sharpening is negated.
    pub negation: f64,
    pub allow_self: bool,
    pub allow_chains: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            concepts: 4,
            roles: 2,
            individuals: 2,
            standpoints: 3,
            statements: 6,
            max_depth: 3,
            max_monomial: 2,
            negation: 0.2,
            allow_self: true,
            allow_chains: true,
        }
    }
}

impl GenConfig {
    /// Tiny vocabularies suitable for exhaustive model search.
    pub fn tiny() -> GenConfig {
        GenConfig {
            concepts: 2,
            roles: 1,
            individuals: 1,
            standpoints: 2,
            statements: 3,
            max_depth: 2,
            max_monomial: 2,
            negation: 0.25,
            allow_self: true,
            allow_chains: true,
        }
    }
}

struct Gen<'a> {
    rng: ChaCha8Rng,
    cfg: &'a GenConfig,
}

impl Gen<'_> {
    fn concept_name(&mut self) -> ConceptName {
        ConceptName::new(&format!("C{}", self.rng.gen_range(0..self.cfg.concepts.max(1))))
    }

    fn role(&mut self) -> RoleName {
        RoleName::new(&format!("r{}", self.rng.gen_range(0..self.cfg.roles.max(1))))
    }

    fn individual(&mut self) -> IndividualName {
        IndividualName::new(&format!("i{}", self.rng.gen_range(0..self.cfg.individuals.max(1))))
    }

    fn standpoint(&mut self) -> StandpointName {
        let n = self.rng.gen_range(0..=self.cfg.standpoints);
        if n == self.cfg.standpoints {
            StandpointName::star()
        } else {
            StandpointName::new(&format!("s{n}"))
        }
    }

    fn modality(&mut self) -> Modality {
        if self.rng.gen_bool(0.5) {
            Modality::Box
        } else {
            Modality::Diamond
        }
    }

    fn concept(&mut self, depth: usize) -> Concept {
        let leaf = depth == 0 || self.rng.gen_bool(0.4);
        if leaf {
            return match self.rng.gen_range(0..10) {
                0 => Concept::Top,
                1 => Concept::Bottom,
                2 if self.cfg.allow_self && self.cfg.roles > 0 => Concept::SelfLoop(self.role()),
                _ => Concept::Name(self.concept_name()),
            };
        }
        match self.rng.gen_range(0..3) {
            0 => Concept::and(self.concept(depth - 1), self.concept(depth - 1)),
            1 if self.cfg.roles > 0 => Concept::exists(self.role(), self.concept(depth - 1)),
            _ => {
                let m = self.modality();
                let s = self.standpoint();
                Concept::modal(m, s, self.concept(depth - 1))
            }
        }
    }

    fn axiom(&mut self) -> Axiom {
        let has_ind = self.cfg.individuals > 0;
        let has_role = self.cfg.roles > 0;
        match self.rng.gen_range(0..10) {
            0..=5 => Axiom::Gci(self.concept(self.cfg.max_depth), self.concept(self.cfg.max_depth)),
            6 if has_role && self.cfg.allow_chains => {
                let n = self.rng.gen_range(1..=3);
                Axiom::Ria((0..n).map(|_| self.role()).collect(), self.role())
            }
            7 if has_ind && has_role => Axiom::RoleAssertion(self.role(), self.individual(), self.individual()),
            _ if has_ind => Axiom::ConceptAssertion(self.concept(self.cfg.max_depth), self.individual()),
            _ => Axiom::Gci(self.concept(self.cfg.max_depth), self.concept(self.cfg.max_depth)),
        }
    }

    fn statement(&mut self) -> Statement {
        if self.cfg.standpoints > 0 && self.rng.gen_bool(0.2) {
            let n = self.rng.gen_range(1..=3);
            let lhs: Vec<StandpointName> = (0..n).map(|_| self.standpoint()).collect();
            let rhs = if self.rng.gen_bool(0.3) { SharpRhs::Empty } else { SharpRhs::Standpoint(self.standpoint()) };
            let negated = self.rng.gen_bool(self.cfg.negation);
            return Statement::sharpening(negated, lhs, rhs);
        }
        let m = self.modality();
        let s = self.standpoint();
        let len = self.rng.gen_range(1..=self.cfg.max_monomial.max(1));
        let monomial = (0..len)
            .map(|_| {
                let ax = self.axiom();
                if self.rng.gen_bool(self.cfg.negation) {
                    Literal::neg(ax)
                } else {
                    Literal::pos(ax)
                }
            })
            .collect();
        Statement::formula(m, s, monomial)
    }
}

/// A random knowledge base determined entirely by `seed` and `cfg`.
pub fn random_kb(seed: u64, cfg: &GenConfig) -> KnowledgeBase {
    let mut g = Gen { rng: ChaCha8Rng::seed_from_u64(seed), cfg };
    let stmts: Vec<Statement> = (0..cfg.statements).map(|_| g.statement()).collect();
    KnowledgeBase::from_statements(stmts)
}

/// A random knowledge base that contains only positive Horn-style statements in normal form shapes.
pub fn random_normal_kb(seed: u64, cfg: &GenConfig) -> KnowledgeBase {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Gen { rng: ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9), cfg };
    let mut stmts = Vec::new();
    for _ in 0..cfg.statements {
        let s = g.standpoint();
        let a = Concept::Name(g.concept_name());
        let b = Concept::Name(g.concept_name());
        let stmt = match rng.gen_range(0..8) {
            0 => Statement::boxed(s, Axiom::Gci(a, b)),
            1 => Statement::boxed(s, Axiom::Gci(Concept::and(a, b), Concept::Name(g.concept_name()))),
            2 if cfg.roles > 0 => Statement::boxed(s, Axiom::Gci(a, Concept::exists(g.role(), b))),
            3 if cfg.roles > 0 => Statement::boxed(s, Axiom::Gci(Concept::exists(g.role(), a), b)),
            4 => {
                let m = g.modality();
                let u = g.standpoint();
                Statement::boxed(s, Axiom::Gci(a, Concept::modal(m, u, b)))
            }
            5 if cfg.individuals > 0 => {
                Statement::boxed(s, Axiom::ConceptAssertion(Concept::Name(g.concept_name()), g.individual()))
            }
            6 => {
                let mut lhs = vec![g.standpoint()];
                if rng.gen_bool(0.5) {
                    lhs.push(g.standpoint());
                }
                Statement::sharpening(false, lhs, SharpRhs::Standpoint(g.standpoint()))
            }
            _ => Statement::boxed(s, Axiom::Gci(a, Concept::Bottom)),
        };
        stmts.push(stmt);
    }
    stmts.shuffle(&mut rng);
    KnowledgeBase::from_statements(stmts)
}
