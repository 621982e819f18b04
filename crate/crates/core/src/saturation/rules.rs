use std::fmt;
use std::str::FromStr;

use crate::preprocessor::Shape;

/// The rules of the calculus. `S3` carries the shape of the fact whose outer box it weakens.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    T1,
    T2,
    T3,
    T4,
    T5,
    S1,
    S2,
    S3(Shape),
    S4,
    I1,
    I2,
    R1,
    C1,
    C2,
    C3,
    C4,
    F1,
    F2,
    F3,
    F4,
    E1,
    E2,
    E3,
    E4,
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    /// Converse of A.2: a rigid individual inherits what holds of its nominal.
    A9,
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    B1,
    B2,
    B3,
    B4,
}

/// Shapes whose outer standpoint S.3 weakens.
pub const S3_SHAPES: [Shape; 8] = [
    Shape::Ria2,
    Shape::Ria3,
    Shape::GciNested,
    Shape::GciDiaRight,
    Shape::GciExRight,
    Shape::GciExLeft,
    Shape::GciConLeft,
    Shape::RoleAssertion,
];

impl RuleId {
    /// Every rule, with one S.3 instance per shape.
    pub fn all() -> Vec<RuleId> {
        use RuleId::*;
        let mut v = vec![T1, T2, T3, T4, T5, S1, S2];
        v.extend(S3_SHAPES.iter().map(|&s| S3(s)));
        v.extend([
            S4, I1, I2, R1, C1, C2, C3, C4, F1, F2, F3, F4, E1, E2, E3, E4, A1, A2, A3, A4, A5, A6, A7, A8, A9, L1,
            L2, L3, L4, L5, L6, B1, B2, B3, B4,
        ]);
        v
    }

    /// Number of premises in the rule schema.
    pub fn arity(self) -> usize {
        use RuleId::*;
        match self {
            T1 | T2 | T3 | T4 | T5 => 0,
            I1 | I2 | A1 | A2 | A3 | A9 | L1 | L2 | L3 | L4 | L5 | L6 | B1 | B2 | B3 | B4 => 1,
            S1 | S3(_) | S4 | R1 | C1 | C2 | C3 | C4 | F1 | F2 | F3 | F4 | E3 | A4 | A6 => 2,
            S2 | E1 | E2 | E4 | A5 | A7 => 3,
            A8 => 4,
        }
    }

    fn base_name(self) -> &'static str {
        use RuleId::*;
        match self {
            T1 => "T.1",
            T2 => "T.2",
            T3 => "T.3",
            T4 => "T.4",
            T5 => "T.5",
            S1 => "S.1",
            S2 => "S.2",
            S3(_) => "S.3",
            S4 => "S.4",
            I1 => "I.1",
            I2 => "I.2",
            R1 => "R.1",
            C1 => "C.1",
            C2 => "C.2",
            C3 => "C.3",
            C4 => "C.4",
            F1 => "F.1",
            F2 => "F.2",
            F3 => "F.3",
            F4 => "F.4",
            E1 => "E.1",
            E2 => "E.2",
            E3 => "E.3",
            E4 => "E.4",
            A1 => "A.1",
            A2 => "A.2",
            A3 => "A.3",
            A4 => "A.4",
            A5 => "A.5",
            A6 => "A.6",
            A7 => "A.7",
            A8 => "A.8",
            A9 => "A.9",
            L1 => "L.1",
            L2 => "L.2",
            L3 => "L.3",
            L4 => "L.4",
            L5 => "L.5",
            L6 => "L.6",
            B1 => "B.1",
            B2 => "B.2",
            B3 => "B.3",
            B4 => "B.4",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::S3(shape) => write!(f, "S.3[{}]", shape.name()),
            other => f.write_str(other.base_name()),
        }
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<RuleId, String> {
        RuleId::all().into_iter().find(|r| r.to_string() == s).ok_or_else(|| format!("unknown rule `{s}`"))
    }
}
