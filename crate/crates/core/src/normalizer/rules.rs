//! Individual rewrite rules. Each returns the replacement statements when it applies.

use super::fresh::FreshNameFactory;
use crate::kb_model::{Axiom, Concept, Literal, Modality, SharpRhs, StandpointName, Statement};

/// Rewrite rules; numbers 17–23 form phase one, 24–36 phase two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormRule {
    R17,
    R18,
    R19,
    R20,
    R21,
    R22,
    R23,
    R24,
    R25,
    R26,
    R27,
    R28,
    R29,
    R30,
    R31,
    R32,
    R33,
    R34,
    R35,
    R36,
    /// `C ⊑ D` with both sides compound becomes `C ⊑ A`, `A ⊑ D`.
    Split,
}

impl NormRule {
    pub fn tag(self) -> &'static str {
        match self {
            NormRule::R17 => "17",
            NormRule::R18 => "18",
            NormRule::R19 => "19",
            NormRule::R20 => "20",
            NormRule::R21 => "21",
            NormRule::R22 => "22",
            NormRule::R23 => "23",
            NormRule::R24 => "24",
            NormRule::R25 => "25",
            NormRule::R26 => "26",
            NormRule::R27 => "27",
            NormRule::R28 => "28",
            NormRule::R29 => "29",
            NormRule::R30 => "30",
            NormRule::R31 => "31",
            NormRule::R32 => "32",
            NormRule::R33 => "33",
            NormRule::R34 => "34",
            NormRule::R35 => "35",
            NormRule::R36 => "36",
            NormRule::Split => "x",
        }
    }
}

pub(crate) type Rewrite = Option<(NormRule, Vec<Statement>)>;

fn boxed(s: &StandpointName, axiom: Axiom) -> Statement {
    Statement::boxed(s.clone(), axiom)
}

fn gci(l: Concept, r: Concept) -> Axiom {
    Axiom::Gci(l, r)
}

fn single_literal(stmt: &Statement) -> Option<(&StandpointName, &Literal)> {
    match stmt {
        Statement::Formula { modality: Modality::Box, standpoint, monomial } if monomial.len() == 1 => {
            Some((standpoint, &monomial[0]))
        }
        _ => None,
    }
}

pub(crate) fn phase1(stmt: &Statement, fresh: &mut FreshNameFactory) -> Rewrite {
    match stmt {
        Statement::Formula { modality: Modality::Diamond, standpoint, monomial } => {
            let t = NormRule::R17;
            let v = fresh.standpoint(t.tag());
            Some((
                t,
                vec![
                    Statement::sharper(v.clone(), standpoint.clone()),
                    Statement::formula(Modality::Box, v, monomial.clone()),
                ],
            ))
        }
        Statement::Formula { modality: Modality::Box, standpoint, monomial } if monomial.len() > 1 => Some((
            NormRule::R18,
            monomial
                .iter()
                .map(|l| Statement::formula(Modality::Box, standpoint.clone(), vec![l.clone()]))
                .collect(),
        )),
        Statement::Formula { .. } => {
            let (s, lit) = single_literal(stmt)?;
            if !lit.negated {
                return None;
            }
            Some(negated_axiom(s, &lit.axiom, fresh))
        }
        Statement::Sharpening { negated: true, lhs, rhs } => {
            let t = NormRule::R23;
            let v = fresh.standpoint(t.tag());
            let mut out: Vec<Statement> = lhs.iter().map(|si| Statement::sharper(v.clone(), si.clone())).collect();
            if let SharpRhs::Standpoint(s) = rhs {
                out.push(Statement::sharpening(false, vec![v, s.clone()], SharpRhs::Empty));
            }
            Some((t, out))
        }
        Statement::Sharpening { negated: false, .. } => None,
    }
}

fn negated_axiom(s: &StandpointName, axiom: &Axiom, fresh: &mut FreshNameFactory) -> (NormRule, Vec<Statement>) {
    match axiom {
        Axiom::Gci(c, d) => {
            let t = NormRule::R19;
            let a = Concept::Name(fresh.concept(t.tag()));
            let r = fresh.role(t.tag());
            (
                t,
                vec![
                    boxed(s, gci(a.clone(), c.clone())),
                    boxed(s, gci(Concept::and(a.clone(), d.clone()), Concept::Bottom)),
                    boxed(s, gci(Concept::Top, Concept::exists(r, a))),
                ],
            )
        }
        Axiom::ConceptAssertion(c, ind) => {
            let t = NormRule::R20;
            let a = fresh.concept(t.tag());
            (
                t,
                vec![
                    boxed(s, Axiom::ConceptAssertion(Concept::Name(a.clone()), ind.clone())),
                    boxed(s, gci(Concept::and(Concept::Name(a), c.clone()), Concept::Bottom)),
                ],
            )
        }
        Axiom::RoleAssertion(r, ia, ib) => {
            let t = NormRule::R21;
            let aa = fresh.concept(t.tag());
            let ab = fresh.concept(t.tag());
            (
                t,
                vec![
                    boxed(s, Axiom::ConceptAssertion(Concept::Name(aa.clone()), ia.clone())),
                    boxed(s, Axiom::ConceptAssertion(Concept::Name(ab.clone()), ib.clone())),
                    boxed(
                        s,
                        gci(
                            Concept::and(Concept::Name(aa), Concept::exists(r.clone(), Concept::Name(ab))),
                            Concept::Bottom,
                        ),
                    ),
                ],
            )
        }
        Axiom::Ria(chain, sup) => {
            let t = NormRule::R22;
            let aa = Concept::Name(fresh.concept(t.tag()));
            let ab = Concept::Name(fresh.concept(t.tag()));
            let r = fresh.role(t.tag());
            let path = chain.iter().rev().fold(ab.clone(), |acc, role| Concept::exists(role.clone(), acc));
            (
                t,
                vec![
                    boxed(s, gci(Concept::Top, Concept::exists(r, aa.clone()))),
                    boxed(s, gci(Concept::and(aa.clone(), Concept::exists(sup.clone(), ab)), Concept::Bottom)),
                    boxed(s, gci(aa, path)),
                ],
            )
        }
    }
}

pub(crate) fn phase2(stmt: &Statement, fresh: &mut FreshNameFactory) -> Rewrite {
    match stmt {
        Statement::Sharpening { negated: false, lhs, rhs: SharpRhs::Standpoint(s) } if lhs.len() >= 3 => {
            let t = NormRule::R24;
            let s2 = fresh.standpoint(t.tag());
            let mut rest = vec![s2.clone()];
            rest.extend(lhs[2..].iter().cloned());
            Some((
                t,
                vec![
                    Statement::sharpening(false, vec![lhs[0].clone(), lhs[1].clone()], SharpRhs::Standpoint(s2)),
                    Statement::sharpening(false, rest, SharpRhs::Standpoint(s.clone())),
                ],
            ))
        }
        Statement::Sharpening { negated: false, lhs, rhs: SharpRhs::Empty } => {
            let t = NormRule::R25;
            let names: Vec<Concept> = lhs.iter().map(|_| Concept::Name(fresh.concept(t.tag()))).collect();
            let mut out: Vec<Statement> =
                lhs.iter().zip(&names).map(|(si, a)| boxed(si, gci(Concept::Top, a.clone()))).collect();
            let conj = Concept::and_all(names).expect("sharpening lhs is nonempty");
            out.push(boxed(&StandpointName::star(), gci(conj, Concept::Bottom)));
            Some((t, out))
        }
        Statement::Sharpening { .. } => None,
        Statement::Formula { .. } => {
            let (s, lit) = single_literal(stmt)?;
            if lit.negated {
                return None;
            }
            axiom_phase2(s, &lit.axiom, fresh)
        }
    }
}

fn axiom_phase2(s: &StandpointName, axiom: &Axiom, fresh: &mut FreshNameFactory) -> Rewrite {
    match axiom {
        Axiom::Ria(chain, sup) if chain.len() >= 3 => {
            let t = NormRule::R26;
            let r = fresh.role(t.tag());
            let mut rest = vec![r.clone()];
            rest.extend(chain[2..].iter().cloned());
            Some((
                t,
                vec![
                    boxed(s, Axiom::Ria(vec![chain[0].clone(), chain[1].clone()], r)),
                    boxed(s, Axiom::Ria(rest, sup.clone())),
                ],
            ))
        }
        Axiom::ConceptAssertion(c, ind) if !matches!(c, Concept::Name(_)) => {
            let t = NormRule::R27;
            let a = Concept::Name(fresh.concept(t.tag()));
            Some((
                t,
                vec![
                    boxed(s, Axiom::ConceptAssertion(a.clone(), ind.clone())),
                    boxed(s, gci(a, c.clone())),
                ],
            ))
        }
        Axiom::Gci(l, r) => gci_phase2(s, l, r, fresh),
        _ => None,
    }
}

fn gci_phase2(s: &StandpointName, l: &Concept, r: &Concept, fresh: &mut FreshNameFactory) -> Rewrite {
    if *r == Concept::Top {
        return Some((NormRule::R28, vec![]));
    }
    if *l == Concept::Bottom {
        return Some((NormRule::R29, vec![]));
    }
    if let Concept::Exists(role, filler) = r {
        if !filler.is_rhs_basic() {
            let t = NormRule::R30;
            let a = Concept::Name(fresh.concept(t.tag()));
            return Some((
                t,
                vec![
                    boxed(s, gci(l.clone(), Concept::exists(role.clone(), a.clone()))),
                    boxed(s, gci(a, (**filler).clone())),
                ],
            ));
        }
    }
    if let Concept::And(c, d) = r {
        let t = NormRule::R31;
        let a = Concept::Name(fresh.concept(t.tag()));
        return Some((
            t,
            vec![
                boxed(s, gci(l.clone(), a.clone())),
                boxed(s, gci(a.clone(), (**c).clone())),
                boxed(s, gci(a, (**d).clone())),
            ],
        ));
    }
    if let Concept::Modal(m, u, inner) = r {
        if !inner.is_rhs_basic() {
            let t = NormRule::R32;
            let a = Concept::Name(fresh.concept(t.tag()));
            return Some((
                t,
                vec![
                    boxed(s, gci(l.clone(), Concept::modal(*m, u.clone(), a.clone()))),
                    boxed(s, gci(a, (**inner).clone())),
                ],
            ));
        }
    }
    if let Concept::Exists(role, filler) = l {
        if !filler.is_lhs_basic() {
            let t = NormRule::R33;
            let a = Concept::Name(fresh.concept(t.tag()));
            return Some((
                t,
                vec![
                    boxed(s, gci((**filler).clone(), a.clone())),
                    boxed(s, gci(Concept::exists(role.clone(), a), r.clone())),
                ],
            ));
        }
    }
    if let Concept::And(c, d) = l {
        let t = NormRule::R34;
        if !c.is_lhs_basic() {
            let a = Concept::Name(fresh.concept(t.tag()));
            return Some((
                t,
                vec![
                    boxed(s, gci((**c).clone(), a.clone())),
                    boxed(s, gci(Concept::and(a, (**d).clone()), r.clone())),
                ],
            ));
        }
        if !d.is_lhs_basic() {
            let a = Concept::Name(fresh.concept(t.tag()));
            return Some((
                t,
                vec![
                    boxed(s, gci((**d).clone(), a.clone())),
                    boxed(s, gci(Concept::and((**c).clone(), a), r.clone())),
                ],
            ));
        }
    }
    if let Concept::Modal(Modality::Diamond, u, c) = l {
        let t = NormRule::R35;
        let a = Concept::Name(fresh.concept(t.tag()));
        return Some((
            t,
            vec![
                boxed(u, gci((**c).clone(), Concept::modal(Modality::Box, StandpointName::star(), a.clone()))),
                boxed(s, gci(a, r.clone())),
            ],
        ));
    }
    if let Concept::Modal(Modality::Box, u, c) = l {
        let t = NormRule::R36;
        let v0 = fresh.standpoint(t.tag());
        let v1 = fresh.standpoint(t.tag());
        let a = Concept::Name(fresh.concept(t.tag()));
        let both = Concept::and(
            Concept::modal(Modality::Diamond, v0.clone(), a.clone()),
            Concept::modal(Modality::Diamond, v1.clone(), a.clone()),
        );
        return Some((
            t,
            vec![
                Statement::sharper(v0, u.clone()),
                Statement::sharper(v1, u.clone()),
                boxed(u, gci((**c).clone(), a)),
                boxed(s, gci(both, r.clone())),
            ],
        ));
    }
    if !l.is_atomic() && !r.is_atomic() {
        let t = NormRule::Split;
        let a = Concept::Name(fresh.concept(t.tag()));
        return Some((t, vec![boxed(s, gci(l.clone(), a.clone())), boxed(s, gci(a, r.clone()))]));
    }
    None
}
