//! Declarative form of every rule: conclusions from an explicit premise list.

use super::rules::RuleId;
use crate::preprocessor::{Fact, Universe, BOT, STAR, TOP};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ApplyError {
    #[error("{rule} expects {expected} premises, got {got}")]
    Arity { rule: RuleId, expected: usize, got: usize },
    #[error("{rule}: premise {position} has the wrong shape")]
    Shape { rule: RuleId, position: usize },
}

/// Conclusions of one application of `rule` to `premises`, listed in schema order.
///
/// Premises of the right shapes whose arguments do not unify yield no conclusions.
pub fn apply_rule(rule: RuleId, premises: &[Fact], u: &Universe) -> Result<Vec<Fact>, ApplyError> {
    use Fact::*;
    use RuleId as R;
    if premises.len() != rule.arity() {
        return Err(ApplyError::Arity { rule, expected: rule.arity(), got: premises.len() });
    }
    let bad = |position: usize| ApplyError::Shape { rule, position };
    let p = premises;
    let out = match rule {
        R::T1 => u.standpoint_ids().map(|s| Sharper(s, STAR)).collect(),
        R::T2 => u.standpoint_ids().map(|s| Sharper(s, s)).collect(),
        R::T3 => u.concept_ids().map(|c| GciNested(STAR, TOP, STAR, c, c)).collect(),
        R::T4 => u.concept_ids().map(|c| GciNested(STAR, TOP, STAR, c, TOP)).collect(),
        R::T5 => u.role_ids().map(|r| Ria2(STAR, r, r)).collect(),
        R::S1 => match (p[0], p[1]) {
            (Sharper(s, s1), Sharper(s1b, s2)) => when(s1 == s1b, Sharper(s, s2)),
            (Sharper(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::S2 => match (p[0], p[1], p[2]) {
            (Sharper(s, s1), Sharper(sb, s2), SharperIntersection(x1, x2, t)) => {
                when(s == sb && s1 == x1 && s2 == x2, Sharper(s, t))
            }
            (Sharper(..), Sharper(..), _) => return Err(bad(2)),
            (Sharper(..), _, _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::S3(shape) => {
            let xi = p[0];
            if xi.shape() != shape {
                return Err(bad(0));
            }
            match p[1] {
                Sharper(s, s1) => when(xi.outer() == Some(s1), xi.with_outer(s)),
                _ => return Err(bad(1)),
            }
        }
        R::S4 => match (p[0], p[1]) {
            (GciNested(t, c, s1, d, e), Sharper(s, s1b)) => when(s1 == s1b, GciNested(t, c, s, d, e)),
            (GciNested(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::I1 => match p[0] {
            GciNested(s, c, s2, d, e) => when(s == s2 && d == TOP, GciNested(STAR, TOP, s, c, e)),
            _ => return Err(bad(0)),
        },
        R::I2 => match p[0] {
            GciNested(_, c, s, d, e) => when(c == TOP, GciNested(STAR, TOP, s, d, e)),
            _ => return Err(bad(0)),
        },
        R::R1 => match (p[0], p[1]) {
            (Ria2(s, r, r2), Ria2(sb, r2b, r1)) => when(s == sb && r2 == r2b, Ria2(s, r, r1)),
            (Ria2(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::C1 => match (p[0], p[1]) {
            (GciNested(t, b, s, c, d), GciNested(t2, b2, s2, d2, e)) => {
                when(t == t2 && b == b2 && s == s2 && d == d2, GciNested(t, b, s, c, e))
            }
            (GciNested(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::C2 => match (p[0], p[1]) {
            (GciNested(_, top, t, b, c), GciNested(t2, c2, s, d, e)) => {
                when(top == TOP && t == t2 && c == c2, GciNested(t, b, s, d, e))
            }
            (GciNested(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::C3 => match (p[0], p[1]) {
            (GciNested(_, top, t, c, d), GciDiaRight(t2, d2, s, e)) => {
                when(top == TOP && t == t2 && d == d2, GciDiaRight(t, c, s, e))
            }
            (GciNested(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::C4 => match (p[0], p[1]) {
            (GciDiaRight(t, c, s, d), GciNested(t2, c2, s2, d2, e)) => {
                when(t == t2 && c == c2 && s == s2 && d == d2, GciDiaRight(t, c, s, e))
            }
            (GciDiaRight(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::F1 => match (p[0], p[1]) {
            (GciNested(t, c, s1, top, d), GciNested(s1b, d2, s, e, f)) => {
                when(top == TOP && s1 == s1b && d == d2, GciNested(t, c, s, e, f))
            }
            (GciNested(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::F2 => match (p[0], p[1]) {
            (GciNested(t, c, s1, top, d), GciDiaRight(s1b, d2, s, e)) => {
                when(top == TOP && s1 == s1b && d == d2, GciDiaRight(t, c, s, e))
            }
            (GciNested(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::F3 => match (p[0], p[1]) {
            (GciDiaRight(t, c, s1, d), GciNested(s1b, d2, s, e, f)) => {
                when(s1 == s1b && d == d2, GciNested(t, c, s, e, f))
            }
            (GciDiaRight(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::F4 => match (p[0], p[1]) {
            (GciDiaRight(t, c, s1, d), GciDiaRight(s1b, d2, s, e)) => {
                when(s1 == s1b && d == d2, GciDiaRight(t, c, s, e))
            }
            (GciDiaRight(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::E1 => match (p[0], p[1], p[2]) {
            (GciExRight(s, c, r, d), GciNested(_, top, s2, d2, e), Ria2(s3, r2, r1)) => {
                when(top == TOP && s == s2 && s == s3 && d == d2 && r == r2, GciExRight(s, c, r1, e))
            }
            (GciExRight(..), GciNested(..), _) => return Err(bad(2)),
            (GciExRight(..), _, _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::E2 => match (p[0], p[1], p[2]) {
            (GciExRight(s, c, r1, d), GciExRight(s2, d2, r2, e), Ria3(s3, x1, x2, r)) => {
                when(s == s2 && s == s3 && d == d2 && r1 == x1 && r2 == x2, GciExRight(s, c, r, e))
            }
            (GciExRight(..), GciExRight(..), _) => return Err(bad(2)),
            (GciExRight(..), _, _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::E3 => match (p[0], p[1]) {
            (GciExRight(s, c, r, d), GciExLeft(s2, r2, d2, f)) => {
                when(s == s2 && r == r2 && d == d2, GciNested(STAR, TOP, s, c, f))
            }
            (GciExRight(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::E4 => match (p[0], p[1], p[2]) {
            (GciNested(t, b, s, c, c1), GciNested(t2, b2, s2, c_, c2), GciConLeft(s3, x1, x2, d)) => when(
                t == t2 && b == b2 && s == s2 && s == s3 && c == c_ && c1 == x1 && c2 == x2,
                GciNested(t, b, s, c, d),
            ),
            (GciNested(..), GciNested(..), _) => return Err(bad(2)),
            (GciNested(..), _, _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::A1 => match p[0] {
            GciNested(_, top, s, b, c) if top == TOP => {
                u.individual_ids().map(|a| GciNested(STAR, u.nominal(a), s, b, c)).collect()
            }
            GciNested(..) => vec![],
            _ => return Err(bad(0)),
        },
        R::A2 => match p[0] {
            GciNested(_, a, s, top, c) => when(u.as_nominal(a).is_some() && top == TOP, GciNested(STAR, TOP, s, a, c)),
            _ => return Err(bad(0)),
        },
        R::A9 => match p[0] {
            GciNested(_, top, s, a, c) => when(top == TOP && u.as_nominal(a).is_some(), GciNested(STAR, a, s, TOP, c)),
            _ => return Err(bad(0)),
        },
        R::A3 => match p[0] {
            GciNested(_, a, s, b, c) => when(u.as_nominal(a).is_some(), GciNested(STAR, a, s, b, c)),
            _ => return Err(bad(0)),
        },
        R::A4 => match (p[0], p[1]) {
            (RoleAssertion(s, r, a, b), Ria2(s2, r2, r1)) => when(s == s2 && r == r2, RoleAssertion(s, r1, a, b)),
            (RoleAssertion(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::A5 => match (p[0], p[1], p[2]) {
            (RoleAssertion(s, r1, a, b), RoleAssertion(s2, r2, b2, c), Ria3(s3, x1, x2, r)) => {
                when(s == s2 && s == s3 && b == b2 && r1 == x1 && r2 == x2, RoleAssertion(s, r, a, c))
            }
            (RoleAssertion(..), RoleAssertion(..), _) => return Err(bad(2)),
            (RoleAssertion(..), _, _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::A6 => match (p[0], p[1]) {
            (RoleAssertion(s, r, a, b), GciNested(_, nb, s2, top, bc)) => {
                when(s == s2 && top == TOP && nb == u.nominal(b), GciExRight(s, u.nominal(a), r, bc))
            }
            (RoleAssertion(..), _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::A7 => match (p[0], p[1], p[2]) {
            (RoleAssertion(s, r1, a, b), GciExRight(s2, nb, r2, c), Ria3(s3, x1, x2, r)) => when(
                s == s2 && s == s3 && nb == u.nominal(b) && r1 == x1 && r2 == x2,
                GciExRight(s, u.nominal(a), r, c),
            ),
            (RoleAssertion(..), GciExRight(..), _) => return Err(bad(2)),
            (RoleAssertion(..), _, _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::A8 => match (p[0], p[1], p[2], p[3]) {
            (RoleAssertion(s, r1, a, b), GciNested(_, nb, s2, top, bc), GciExRight(s3, bc2, r2, c), Ria3(s4, x1, x2, r)) => {
                when(
                    s == s2 && s == s3 && s == s4 && top == TOP && nb == u.nominal(b) && bc == bc2 && r1 == x1 && r2 == x2,
                    GciExRight(s, u.nominal(a), r, c),
                )
            }
            (RoleAssertion(..), GciNested(..), GciExRight(..), _) => return Err(bad(3)),
            (RoleAssertion(..), GciNested(..), _, _) => return Err(bad(2)),
            (RoleAssertion(..), _, _, _) => return Err(bad(1)),
            _ => return Err(bad(0)),
        },
        R::L1 => match p[0] {
            GciNested(_, na, s, top, e) => match (u.as_nominal(na), u.as_self(e)) {
                (Some(a), Some(r)) if top == TOP => vec![RoleAssertion(s, r, a, a)],
                _ => vec![],
            },
            _ => return Err(bad(0)),
        },
        R::L2 => match p[0] {
            GciNested(_, top, s, c, e) => match u.as_self(e) {
                Some(r) if top == TOP => vec![GciExRight(s, c, r, c)],
                _ => vec![],
            },
            _ => return Err(bad(0)),
        },
        R::L3 => match p[0] {
            GciExLeft(s, r, d, c) => vec![GciConLeft(s, u.self_concept(r), d, c)],
            _ => return Err(bad(0)),
        },
        R::L4 => match p[0] {
            RoleAssertion(s, r, a, b) => when(a == b, GciNested(STAR, u.nominal(a), s, TOP, u.self_concept(r))),
            _ => return Err(bad(0)),
        },
        R::L5 => match p[0] {
            Ria2(s, r, r1) => vec![GciNested(STAR, TOP, s, u.self_concept(r), u.self_concept(r1))],
            _ => return Err(bad(0)),
        },
        R::L6 => match p[0] {
            Ria3(s, r1, r2, r) => vec![GciConLeft(s, u.self_concept(r1), u.self_concept(r2), u.self_concept(r))],
            _ => return Err(bad(0)),
        },
        R::B1 => match p[0] {
            GciExRight(s, c, _, d) => when(d == BOT, GciNested(STAR, TOP, s, c, BOT)),
            _ => return Err(bad(0)),
        },
        R::B2 => match p[0] {
            GciNested(t, c, _, d, e) => when(d == TOP && e == BOT, GciNested(STAR, TOP, t, c, BOT)),
            _ => return Err(bad(0)),
        },
        R::B3 => match p[0] {
            GciDiaRight(t, c, _, d) => when(d == BOT, GciNested(STAR, TOP, t, c, BOT)),
            _ => return Err(bad(0)),
        },
        R::B4 => match p[0] {
            GciNested(_, na, _, d, e) => {
                when(u.as_nominal(na).is_some() && d == TOP && e == BOT, GciNested(STAR, TOP, STAR, TOP, BOT))
            }
            _ => return Err(bad(0)),
        },
    };
    Ok(out)
}

fn when(cond: bool, fact: Fact) -> Vec<Fact> {
    if cond {
        vec![fact]
    } else {
        vec![]
    }
}
