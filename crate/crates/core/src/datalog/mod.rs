//! Export of a preprocessed fact store as a self-contained Datalog program.
//!
//! One Horn rule per calculus rule, in [`RuleId::all`] order, plus one ground
//! atom per seed fact. Nominal and self-loop concepts are linked to their
//! individual and role through the helper predicates `nominal/2` and
//! `self_loop/2`.

mod syntax;

#[cfg(test)]
mod tests;

use std::fmt::Write as _;

pub use syntax::{parse_program, Atom, GrammarError, Program, Rule, Term};

use crate::preprocessor::{Cn, ExtConcept, Fact, FactStore, Ind, Rl, Shape, Sp, Universe, STAR};
use crate::saturation::RuleId;

/// Constant standing for the universal standpoint.
pub const STAR_CONST: &str = "STAR";
pub const TOP_CONST: &str = "TOP";
pub const BOT_CONST: &str = "BOT";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatalogExport {
    pub rules_text: String,
    pub facts_text: String,
}

impl DatalogExport {
    /// Rules followed by facts, as one program.
    pub fn program_text(&self) -> String {
        format!("{}{}", self.rules_text, self.facts_text)
    }
}

/// Predicate declarations, in output order.
pub const PREDICATES: [(&str, &[&str]); 16] = [
    ("sharper", &["s1", "s2"]),
    ("sharper_intersection", &["s1", "s2", "s"]),
    ("ria2", &["s", "r1", "r2"]),
    ("ria3", &["s", "r1", "r2", "r"]),
    ("gci_nested", &["t", "c", "s", "d", "e"]),
    ("gci_dia_right", &["t", "c", "s", "d"]),
    ("gci_ex_right", &["s", "c", "r", "d"]),
    ("gci_ex_left", &["s", "r", "c", "d"]),
    ("gci_con_left", &["s", "c1", "c2", "d"]),
    ("role_assertion", &["s", "r", "a", "b"]),
    ("is_sn", &["s"]),
    ("is_cn", &["c"]),
    ("is_rn", &["r"]),
    ("is_nom", &["c"]),
    ("nominal", &["a", "c"]),
    ("self_loop", &["r", "c"]),
];

fn predicate(shape: Shape) -> &'static str {
    match shape {
        Shape::Sharper => "sharper",
        Shape::SharperIntersection => "sharper_intersection",
        Shape::Ria2 => "ria2",
        Shape::Ria3 => "ria3",
        Shape::GciNested => "gci_nested",
        Shape::GciDiaRight => "gci_dia_right",
        Shape::GciExRight => "gci_ex_right",
        Shape::GciExLeft => "gci_ex_left",
        Shape::GciConLeft => "gci_con_left",
        Shape::RoleAssertion => "role_assertion",
    }
}

/// The clause for one rule. Constants are written as `STAR`, `TOP`, `BOT` and quoted on output.
fn rule_clause(rule: RuleId) -> String {
    use RuleId::*;
    let text = match rule {
        T1 => "sharper(s,STAR) :- is_sn(s).",
        T2 => "sharper(s,s) :- is_sn(s).",
        T3 => "gci_nested(STAR,TOP,STAR,c,c) :- is_cn(c).",
        T4 => "gci_nested(STAR,TOP,STAR,c,TOP) :- is_cn(c).",
        T5 => "ria2(STAR,r,r) :- is_rn(r).",
        S1 => "sharper(s1,s3) :- sharper(s1,s2), sharper(s2,s3).",
        S2 => "sharper(s,u) :- sharper(s,s1), sharper(s,s2), sharper_intersection(s1,s2,u).",
        S3(shape) => {
            let args = match shape {
                Shape::Ria2 => "r1,r2",
                Shape::Ria3 => "r1,r2,r3",
                Shape::GciNested => "c,t,d,e",
                Shape::GciDiaRight => "c,t,d",
                Shape::GciExRight => "c,r,d",
                Shape::GciExLeft => "r,c,d",
                Shape::GciConLeft => "c1,c2,d",
                Shape::RoleAssertion => "r,a,b",
                Shape::Sharper | Shape::SharperIntersection => unreachable!("sharpenings have no outer standpoint"),
            };
            let p = predicate(shape);
            return format!("{p}(s,{args}) :- {p}(u,{args}), sharper(s,u).");
        }
        S4 => "gci_nested(t,c,s,d,e) :- gci_nested(t,c,u,d,e), sharper(s,u).",
        I1 => "gci_nested(STAR,TOP,s,c,d) :- gci_nested(s,c,s,TOP,d).",
        I2 => "gci_nested(STAR,TOP,s,c,d) :- gci_nested(_,TOP,s,c,d).",
        R1 => "ria2(s,r1,r3) :- ria2(s,r1,r2), ria2(s,r2,r3).",
        C1 => "gci_nested(t,b,s,c,e) :- gci_nested(t,b,s,c,d), gci_nested(t,b,s,d,e).",
        C2 => "gci_nested(t,b,s,d,e) :- gci_nested(_,TOP,t,b,c), gci_nested(t,c,s,d,e).",
        C3 => "gci_dia_right(t,c,s,e) :- gci_nested(_,TOP,t,c,d), gci_dia_right(t,d,s,e).",
        C4 => "gci_dia_right(t,c,s,e) :- gci_dia_right(t,c,s,d), gci_nested(t,c,s,d,e).",
        F1 => "gci_nested(t,c,s,e,f) :- gci_nested(t,c,u,TOP,d), gci_nested(u,d,s,e,f).",
        F2 => "gci_dia_right(t,c,s,e) :- gci_nested(t,c,u,TOP,d), gci_dia_right(u,d,s,e).",
        F3 => "gci_nested(t,c,s,e,f) :- gci_dia_right(t,c,u,d), gci_nested(u,d,s,e,f).",
        F4 => "gci_dia_right(t,c,s,e) :- gci_dia_right(t,c,u,d), gci_dia_right(u,d,s,e).",
        E1 => "gci_ex_right(s,c,r2,e) :- gci_ex_right(s,c,r1,d), gci_nested(_,TOP,s,d,e), ria2(s,r1,r2).",
        E2 => "gci_ex_right(s,c,r3,e) :- gci_ex_right(s,c,r1,d), gci_ex_right(s,d,r2,e), ria3(s,r1,r2,r3).",
        E3 => "gci_nested(STAR,TOP,s,c,f) :- gci_ex_right(s,c,r,d), gci_ex_left(s,r,d,f).",
        E4 => "gci_nested(t,b,s,c,d) :- gci_nested(t,b,s,c,c1), gci_nested(t,b,s,c,c2), gci_con_left(s,c1,c2,d).",
        A1 => "gci_nested(STAR,n,s,b,c) :- gci_nested(_,TOP,s,b,c), is_nom(n).",
        A2 => "gci_nested(STAR,TOP,s,n,c) :- gci_nested(_,n,s,TOP,c), is_nom(n).",
        A3 => "gci_nested(STAR,n,s,b,c) :- gci_nested(_,n,s,b,c), is_nom(n).",
        A4 => "role_assertion(s,r1,a,b) :- role_assertion(s,r,a,b), ria2(s,r,r1).",
        A5 => "role_assertion(s,r,a,c) :- role_assertion(s,r1,a,b), role_assertion(s,r2,b,c), ria3(s,r1,r2,r).",
        A6 => "gci_ex_right(s,na,r,c) :- role_assertion(s,r,a,b), gci_nested(_,nb,s,TOP,c), nominal(a,na), nominal(b,nb).",
        A7 => "gci_ex_right(s,na,r,c) :- role_assertion(s,r1,a,b), gci_ex_right(s,nb,r2,c), ria3(s,r1,r2,r), nominal(a,na), nominal(b,nb).",
        A8 => "gci_ex_right(s,na,r,c) :- role_assertion(s,r1,a,b), gci_nested(_,nb,s,TOP,d), gci_ex_right(s,d,r2,c), ria3(s,r1,r2,r), nominal(a,na), nominal(b,nb).",
        A9 => "gci_nested(STAR,n,s,TOP,c) :- gci_nested(_,TOP,s,n,c), is_nom(n).",
        L1 => "role_assertion(s,r,a,a) :- gci_nested(_,n,s,TOP,e), nominal(a,n), self_loop(r,e).",
        L2 => "gci_ex_right(s,c,r,c) :- gci_nested(_,TOP,s,c,e), self_loop(r,e).",
        L3 => "gci_con_left(s,x,d,c) :- gci_ex_left(s,r,d,c), self_loop(r,x).",
        L4 => "gci_nested(STAR,n,s,TOP,x) :- role_assertion(s,r,a,a), nominal(a,n), self_loop(r,x).",
        L5 => "gci_nested(STAR,TOP,s,x,y) :- ria2(s,r,r1), self_loop(r,x), self_loop(r1,y).",
        L6 => "gci_con_left(s,x,y,z) :- ria3(s,r1,r2,r), self_loop(r1,x), self_loop(r2,y), self_loop(r,z).",
        B1 => "gci_nested(STAR,TOP,s,c,BOT) :- gci_ex_right(s,c,_,BOT).",
        B2 => "gci_nested(STAR,TOP,t,c,BOT) :- gci_nested(t,c,_,TOP,BOT).",
        B3 => "gci_nested(STAR,TOP,s,c,BOT) :- gci_dia_right(s,c,_,BOT).",
        B4 => "gci_nested(STAR,TOP,STAR,TOP,BOT) :- gci_nested(_,n,_,TOP,BOT), is_nom(n).",
    };
    quote_constants(text)
}

fn quote_constants(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 16);
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut String| {
        if [STAR_CONST, TOP_CONST, BOT_CONST].contains(&word.as_str()) {
            let _ = write!(out, "\"{word}\"");
        } else {
            out.push_str(word);
        }
        word.clear();
    };
    for c in text.chars() {
        if c.is_ascii_alphanumeric() || c == '_' {
            word.push(c);
        } else {
            flush(&mut word, &mut out);
            out.push(c);
        }
    }
    flush(&mut word, &mut out);
    out
}

/// The rules text. It does not depend on the store.
pub fn rules_text() -> String {
    let mut out = String::from("// Standpoint EL+ saturation calculus.\n");
    for (name, params) in PREDICATES {
        let params: Vec<String> = params.iter().map(|p| format!("{p}: symbol")).collect();
        let _ = writeln!(out, ".decl {name}({})", params.join(", "));
    }
    for rule in RuleId::all() {
        let _ = writeln!(out, "// {rule}\n{}", rule_clause(rule));
    }
    out
}

/// String escaping for constants.
pub fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Makes a user name distinct from the reserved constants.
fn user(name: &str) -> String {
    if [STAR_CONST, TOP_CONST, BOT_CONST].contains(&name) {
        format!("'{name}")
    } else {
        name.to_string()
    }
}

/// Constant names for the entities of a universe.
pub struct Constants<'u> {
    u: &'u Universe,
}

impl<'u> Constants<'u> {
    pub fn new(u: &'u Universe) -> Self {
        Constants { u }
    }

    pub fn standpoint(&self, s: Sp) -> String {
        if s == STAR {
            STAR_CONST.into()
        } else {
            user(self.u.standpoint(s).as_str())
        }
    }

    pub fn concept(&self, c: Cn) -> String {
        match self.u.concept(c) {
            ExtConcept::Top => TOP_CONST.into(),
            ExtConcept::Bottom => BOT_CONST.into(),
            ExtConcept::Name(n) => user(n.as_str()),
            ExtConcept::Nominal(a) => format!("{{{}}}", a.as_str()),
            ExtConcept::SelfConcept(r) => format!("Self({})", r.as_str()),
        }
    }

    pub fn role(&self, r: Rl) -> String {
        self.u.role(r).as_str().to_string()
    }

    pub fn individual(&self, a: Ind) -> String {
        self.u.individual(a).as_str().to_string()
    }

    /// A fact as a predicate and its constant arguments.
    pub fn fact(&self, f: &Fact) -> (&'static str, Vec<String>) {
        let (s, c, r, i) = (|x| self.standpoint(x), |x| self.concept(x), |x| self.role(x), |x| self.individual(x));
        let args = match *f {
            Fact::Sharper(a, b) => vec![s(a), s(b)],
            Fact::SharperIntersection(a, b, t) => vec![s(a), s(b), s(t)],
            Fact::Ria2(t, r1, r2) => vec![s(t), r(r1), r(r2)],
            Fact::Ria3(t, r1, r2, r3) => vec![s(t), r(r1), r(r2), r(r3)],
            Fact::GciNested(t, c1, s1, d, e) => vec![s(t), c(c1), s(s1), c(d), c(e)],
            Fact::GciDiaRight(t, c1, s1, d) => vec![s(t), c(c1), s(s1), c(d)],
            Fact::GciExRight(t, c1, r1, d) => vec![s(t), c(c1), r(r1), c(d)],
            Fact::GciExLeft(t, r1, c1, d) => vec![s(t), r(r1), c(c1), c(d)],
            Fact::GciConLeft(t, c1, c2, d) => vec![s(t), c(c1), c(c2), c(d)],
            Fact::RoleAssertion(t, r1, a, b) => vec![s(t), r(r1), i(a), i(b)],
        };
        (predicate(f.shape()), args)
    }
}

fn atom(out: &mut String, pred: &str, args: &[String]) {
    let args: Vec<String> = args.iter().map(|a| escape(a)).collect();
    let _ = writeln!(out, "{pred}({}).", args.join(","));
}

/// Vocabulary helpers plus one atom per seed fact.
pub fn facts_text(store: &FactStore) -> String {
    let u = store.universe();
    let k = Constants::new(u);
    let mut out = String::new();
    for s in u.standpoint_ids() {
        atom(&mut out, "is_sn", &[k.standpoint(s)]);
    }
    for c in u.concept_ids() {
        atom(&mut out, "is_cn", &[k.concept(c)]);
    }
    for r in u.role_ids() {
        atom(&mut out, "is_rn", &[k.role(r)]);
    }
    for a in u.individual_ids() {
        atom(&mut out, "is_nom", &[k.concept(u.nominal(a))]);
    }
    for a in u.individual_ids() {
        atom(&mut out, "nominal", &[k.individual(a), k.concept(u.nominal(a))]);
    }
    for r in u.role_ids() {
        atom(&mut out, "self_loop", &[k.role(r), k.concept(u.self_concept(r))]);
    }
    for f in store.seed_facts() {
        let (pred, args) = k.fact(f);
        atom(&mut out, pred, &args);
    }
    out
}

pub fn export(store: &FactStore) -> DatalogExport {
    DatalogExport { rules_text: rules_text(), facts_text: facts_text(store) }
}
