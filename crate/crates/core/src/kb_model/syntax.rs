use std::collections::BTreeSet;

use super::names::{ConceptName, IndividualName, RoleName, StandpointName};
use super::vocabulary::Vocabulary;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modality {
    Box,
    Diamond,
}

impl Modality {
    pub fn dual(self) -> Modality {
        match self {
            Modality::Box => Modality::Diamond,
            Modality::Diamond => Modality::Box,
        }
    }
}

/// Concept terms. Conjunction is binary; n-ary conjunctions are left-nested.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Concept {
    Top,
    Bottom,
    Name(ConceptName),
    And(Box<Concept>, Box<Concept>),
    Exists(RoleName, Box<Concept>),
    SelfLoop(RoleName),
    Modal(Modality, StandpointName, Box<Concept>),
    /// Internal only: never produced by the parser.
    Nominal(IndividualName),
}

impl Concept {
    pub fn name(text: &str) -> Concept {
        Concept::Name(ConceptName::new(text))
    }

    pub fn and(left: Concept, right: Concept) -> Concept {
        Concept::And(Box::new(left), Box::new(right))
    }

    /// Left-nested conjunction of a nonempty sequence.
    pub fn and_all(parts: impl IntoIterator<Item = Concept>) -> Option<Concept> {
        parts.into_iter().reduce(Concept::and)
    }

    pub fn exists(role: RoleName, filler: Concept) -> Concept {
        Concept::Exists(role, Box::new(filler))
    }

    pub fn modal(modality: Modality, standpoint: StandpointName, inner: Concept) -> Concept {
        Concept::Modal(modality, standpoint, Box::new(inner))
    }

    /// Member of N_C ∪ {⊤, ⊥} ∪ {∃R.Self}.
    pub fn is_atomic(&self) -> bool {
        matches!(
            self,
            Concept::Top | Concept::Bottom | Concept::Name(_) | Concept::SelfLoop(_)
        )
    }

    /// Allowed as an argument on the left of a normal-form GCI: N_C ∪ {⊤} ∪ {∃R.Self}.
    pub fn is_lhs_basic(&self) -> bool {
        matches!(self, Concept::Top | Concept::Name(_) | Concept::SelfLoop(_))
    }

    /// Allowed as an argument on the right of a normal-form GCI: N_C ∪ {⊥} ∪ {∃R.Self}.
    pub fn is_rhs_basic(&self) -> bool {
        matches!(self, Concept::Bottom | Concept::Name(_) | Concept::SelfLoop(_))
    }

    pub fn contains_nominal(&self) -> bool {
        match self {
            Concept::Nominal(_) => true,
            Concept::And(l, r) => l.contains_nominal() || r.contains_nominal(),
            Concept::Exists(_, c) | Concept::Modal(_, _, c) => c.contains_nominal(),
            _ => false,
        }
    }

    pub(crate) fn collect_names(&self, vocab: &mut Vocabulary) {
        match self {
            Concept::Top | Concept::Bottom => {}
            Concept::Name(n) => {
                vocab.concepts.insert(n.clone());
            }
            Concept::And(l, r) => {
                l.collect_names(vocab);
                r.collect_names(vocab);
            }
            Concept::Exists(r, c) => {
                vocab.roles.insert(r.clone());
                c.collect_names(vocab);
            }
            Concept::SelfLoop(r) => {
                vocab.roles.insert(r.clone());
            }
            Concept::Modal(_, s, c) => {
                vocab.standpoints.insert(s.clone());
                c.collect_names(vocab);
            }
            Concept::Nominal(a) => {
                vocab.individuals.insert(a.clone());
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Gci(Concept, Concept),
    /// `R1 ∘ … ∘ Rn ⊑ R` with n ≥ 1.
    Ria(Vec<RoleName>, RoleName),
    ConceptAssertion(Concept, IndividualName),
    RoleAssertion(RoleName, IndividualName, IndividualName),
}

impl Axiom {
    pub fn gci(lhs: Concept, rhs: Concept) -> Axiom {
        Axiom::Gci(lhs, rhs)
    }

    pub(crate) fn collect_names(&self, vocab: &mut Vocabulary) {
        match self {
            Axiom::Gci(l, r) => {
                l.collect_names(vocab);
                r.collect_names(vocab);
            }
            Axiom::Ria(chain, sup) => {
                vocab.roles.extend(chain.iter().cloned());
                vocab.roles.insert(sup.clone());
            }
            Axiom::ConceptAssertion(c, a) => {
                c.collect_names(vocab);
                vocab.individuals.insert(a.clone());
            }
            Axiom::RoleAssertion(r, a, b) => {
                vocab.roles.insert(r.clone());
                vocab.individuals.insert(a.clone());
                vocab.individuals.insert(b.clone());
            }
        }
    }

    pub fn contains_nominal(&self) -> bool {
        match self {
            Axiom::Gci(l, r) => l.contains_nominal() || r.contains_nominal(),
            Axiom::ConceptAssertion(c, _) => c.contains_nominal(),
            _ => false,
        }
    }
}

/// A possibly negated axiom inside a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub negated: bool,
    pub axiom: Axiom,
}

impl Literal {
    pub fn pos(axiom: Axiom) -> Literal {
        Literal { negated: false, axiom }
    }

    pub fn neg(axiom: Axiom) -> Literal {
        Literal { negated: true, axiom }
    }

    pub fn flipped(&self) -> Literal {
        Literal { negated: !self.negated, axiom: self.axiom.clone() }
    }
}

/// Right-hand side of a sharpening statement: a standpoint or the empty pseudo-standpoint `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SharpRhs {
    Standpoint(StandpointName),
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    Formula {
        modality: Modality,
        standpoint: StandpointName,
        monomial: Vec<Literal>,
    },
    Sharpening {
        negated: bool,
        lhs: Vec<StandpointName>,
        rhs: SharpRhs,
    },
}

impl Statement {
    pub fn boxed(standpoint: StandpointName, axiom: Axiom) -> Statement {
        Statement::Formula {
            modality: Modality::Box,
            standpoint,
            monomial: vec![Literal::pos(axiom)],
        }
    }

    pub fn formula(modality: Modality, standpoint: StandpointName, monomial: Vec<Literal>) -> Statement {
        Statement::Formula { modality, standpoint, monomial }
    }

    pub fn sharper(lhs: StandpointName, rhs: StandpointName) -> Statement {
        Statement::Sharpening { negated: false, lhs: vec![lhs], rhs: SharpRhs::Standpoint(rhs) }
    }

    pub fn sharpening(negated: bool, lhs: Vec<StandpointName>, rhs: SharpRhs) -> Statement {
        Statement::Sharpening { negated, lhs, rhs }
    }

    /// Removes repeated standpoints from a sharpening lhs, keeping first occurrences.
    pub(crate) fn canonical(mut self) -> Statement {
        if let Statement::Sharpening { lhs, .. } = &mut self {
            let mut seen = BTreeSet::new();
            lhs.retain(|s| seen.insert(s.clone()));
        }
        self
    }

    pub(crate) fn collect_names(&self, vocab: &mut Vocabulary) {
        match self {
            Statement::Formula { standpoint, monomial, .. } => {
                vocab.standpoints.insert(standpoint.clone());
                for lit in monomial {
                    lit.axiom.collect_names(vocab);
                }
            }
            Statement::Sharpening { lhs, rhs, .. } => {
                vocab.standpoints.extend(lhs.iter().cloned());
                if let SharpRhs::Standpoint(s) = rhs {
                    vocab.standpoints.insert(s.clone());
                }
            }
        }
    }

    pub fn contains_nominal(&self) -> bool {
        match self {
            Statement::Formula { monomial, .. } => monomial.iter().any(|l| l.axiom.contains_nominal()),
            Statement::Sharpening { .. } => false,
        }
    }
}

/// An entailment query: any statement, or a negated modal formula `¬⊙_s[μ]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Query {
    Statement(Statement),
    NotFormula {
        modality: Modality,
        standpoint: StandpointName,
        monomial: Vec<Literal>,
    },
}

impl Query {
    pub(crate) fn collect_names(&self, vocab: &mut Vocabulary) {
        match self {
            Query::Statement(s) => s.collect_names(vocab),
            Query::NotFormula { modality, standpoint, monomial } => {
                Statement::formula(*modality, standpoint.clone(), monomial.clone()).collect_names(vocab)
            }
        }
    }

    /// Names occurring in the query.
    pub fn names(&self) -> Vocabulary {
        let mut vocab = Vocabulary::new();
        self.collect_names(&mut vocab);
        vocab
    }
}
