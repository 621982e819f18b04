use std::fmt;

use super::universe::{Cn, Ind, Rl, Sp, Universe, BOT, STAR, TOP};

/// A statement of the saturation calculus, over interned ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fact {
    /// `s₁ ⪯ s₂`
    Sharper(Sp, Sp),
    /// `s₁ ⊓ s₂ ⪯ s₃`
    SharperIntersection(Sp, Sp, Sp),
    /// `□_s[R₁ ⊑ R₂]`
    Ria2(Sp, Rl, Rl),
    /// `□_s[R₁ ∘ R₂ ⊑ R₃]`
    Ria3(Sp, Rl, Rl, Rl),
    /// `□_t[C ⊑ □_s[D ⇒ E]]` as `(t, C, s, D, E)`
    GciNested(Sp, Cn, Sp, Cn, Cn),
    /// `□_t[C ⊑ ◇_s D]` as `(t, C, s, D)`
    GciDiaRight(Sp, Cn, Sp, Cn),
    /// `□_s[C ⊑ ∃R.D]` as `(s, C, R, D)`
    GciExRight(Sp, Cn, Rl, Cn),
    /// `□_s[∃R.C ⊑ D]` as `(s, R, C, D)`
    GciExLeft(Sp, Rl, Cn, Cn),
    /// `□_s[C₁ ⊓ C₂ ⊑ D]`
    GciConLeft(Sp, Cn, Cn, Cn),
    /// `□_s[R(a, b)]`
    RoleAssertion(Sp, Rl, Ind, Ind),
}

/// `□_*[⊤ ⊑ □_*[⊤ ⇒ ⊥]]`, the marker of unsatisfiability.
pub const REFUTATION: Fact = Fact::GciNested(STAR, TOP, STAR, TOP, BOT);

/// Fact shapes, in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Sharper,
    SharperIntersection,
    Ria2,
    Ria3,
    GciNested,
    GciDiaRight,
    GciExRight,
    GciExLeft,
    GciConLeft,
    RoleAssertion,
}

impl Shape {
    pub const ALL: [Shape; 10] = [
        Shape::Sharper,
        Shape::SharperIntersection,
        Shape::Ria2,
        Shape::Ria3,
        Shape::GciNested,
        Shape::GciDiaRight,
        Shape::GciExRight,
        Shape::GciExLeft,
        Shape::GciConLeft,
        Shape::RoleAssertion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Sharper => "Sharper",
            Shape::SharperIntersection => "SharperIntersection",
            Shape::Ria2 => "Ria2",
            Shape::Ria3 => "Ria3",
            Shape::GciNested => "GciNested",
            Shape::GciDiaRight => "GciDiaRight",
            Shape::GciExRight => "GciExRight",
            Shape::GciExLeft => "GciExLeft",
            Shape::GciConLeft => "GciConLeft",
            Shape::RoleAssertion => "RoleAssertionFact",
        }
    }

    pub fn from_name(text: &str) -> Option<Shape> {
        Shape::ALL.into_iter().find(|s| s.name() == text)
    }
}

impl Fact {
    pub fn shape(&self) -> Shape {
        match self {
            Fact::Sharper(..) => Shape::Sharper,
            Fact::SharperIntersection(..) => Shape::SharperIntersection,
            Fact::Ria2(..) => Shape::Ria2,
            Fact::Ria3(..) => Shape::Ria3,
            Fact::GciNested(..) => Shape::GciNested,
            Fact::GciDiaRight(..) => Shape::GciDiaRight,
            Fact::GciExRight(..) => Shape::GciExRight,
            Fact::GciExLeft(..) => Shape::GciExLeft,
            Fact::GciConLeft(..) => Shape::GciConLeft,
            Fact::RoleAssertion(..) => Shape::RoleAssertion,
        }
    }

    /// The box standpoint wrapping the whole fact; `None` for sharpenings.
    pub fn outer(&self) -> Option<Sp> {
        match *self {
            Fact::Sharper(..) | Fact::SharperIntersection(..) => None,
            Fact::Ria2(s, ..)
            | Fact::Ria3(s, ..)
            | Fact::GciNested(s, ..)
            | Fact::GciDiaRight(s, ..)
            | Fact::GciExRight(s, ..)
            | Fact::GciExLeft(s, ..)
            | Fact::GciConLeft(s, ..)
            | Fact::RoleAssertion(s, ..) => Some(s),
        }
    }

    /// The same fact with its outer standpoint replaced.
    pub fn with_outer(&self, t: Sp) -> Fact {
        match *self {
            Fact::Ria2(_, a, b) => Fact::Ria2(t, a, b),
            Fact::Ria3(_, a, b, c) => Fact::Ria3(t, a, b, c),
            Fact::GciNested(_, c, s, d, e) => Fact::GciNested(t, c, s, d, e),
            Fact::GciDiaRight(_, c, s, d) => Fact::GciDiaRight(t, c, s, d),
            Fact::GciExRight(_, c, r, d) => Fact::GciExRight(t, c, r, d),
            Fact::GciExLeft(_, r, c, d) => Fact::GciExLeft(t, r, c, d),
            Fact::GciConLeft(_, a, b, d) => Fact::GciConLeft(t, a, b, d),
            Fact::RoleAssertion(_, r, a, b) => Fact::RoleAssertion(t, r, a, b),
            other => other,
        }
    }

    /// Renders the fact with names resolved, e.g. `GciNested(*, Top, H, Tumour, Process)`.
    pub fn display<'a>(&'a self, u: &'a Universe) -> FactDisplay<'a> {
        FactDisplay { fact: self, universe: u }
    }
}

pub struct FactDisplay<'a> {
    fact: &'a Fact,
    universe: &'a Universe,
}

impl fmt::Display for FactDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = self.universe;
        let sp = |s: Sp| u.standpoint(s).to_string();
        let cn = |c: Cn| u.concept(c).to_string();
        let rl = |r: Rl| u.role(r).to_string();
        let ind = |a: Ind| u.individual(a).to_string();
        let args: Vec<String> = match *self.fact {
            Fact::Sharper(a, b) => vec![sp(a), sp(b)],
            Fact::SharperIntersection(a, b, c) => vec![sp(a), sp(b), sp(c)],
            Fact::Ria2(s, a, b) => vec![sp(s), rl(a), rl(b)],
            Fact::Ria3(s, a, b, c) => vec![sp(s), rl(a), rl(b), rl(c)],
            Fact::GciNested(t, c, s, d, e) => vec![sp(t), cn(c), sp(s), cn(d), cn(e)],
            Fact::GciDiaRight(t, c, s, d) => vec![sp(t), cn(c), sp(s), cn(d)],
            Fact::GciExRight(s, c, r, d) => vec![sp(s), cn(c), rl(r), cn(d)],
            Fact::GciExLeft(s, r, c, d) => vec![sp(s), rl(r), cn(c), cn(d)],
            Fact::GciConLeft(s, a, b, d) => vec![sp(s), cn(a), cn(b), cn(d)],
            Fact::RoleAssertion(s, r, a, b) => vec![sp(s), rl(r), ind(a), ind(b)],
        };
        write!(f, "{}({})", self.fact.shape().name(), args.join(", "))
    }
}
