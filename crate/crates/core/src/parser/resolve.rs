//! Assigns a kind to every identifier and builds typed statements.

use std::collections::HashMap;

use super::grammar::{DeclKind, Pos, RawAxiom, RawConcept, RawItem, RawLiteral, RawName};
use super::{ParseError, ParseErrorKind, ParseOptions};
use crate::kb_model::{
    Axiom, Concept, ConceptName, IndividualName, Literal, Modality, Query, RoleName, SharpRhs, StandpointName,
    Statement, Vocabulary,
};

fn kind_word(kind: DeclKind) -> &'static str {
    match kind {
        DeclKind::Standpoint => "standpoint",
        DeclKind::Concept => "concept",
        DeclKind::Role => "role",
        DeclKind::Individual => "individual",
    }
}

struct Kinds<'a> {
    table: HashMap<String, DeclKind>,
    declared: HashMap<String, DeclKind>,
    order: Vec<String>,
    errors: Vec<ParseError>,
    options: &'a ParseOptions,
}

impl<'a> Kinds<'a> {
    fn new(options: &'a ParseOptions) -> Self {
        let mut declared = HashMap::new();
        if let Some(base) = &options.base {
            for n in &base.concepts {
                declared.insert(n.to_string(), DeclKind::Concept);
            }
            for n in &base.roles {
                declared.insert(n.to_string(), DeclKind::Role);
            }
            for n in &base.individuals {
                declared.insert(n.to_string(), DeclKind::Individual);
            }
            for n in &base.standpoints {
                declared.insert(n.to_string(), DeclKind::Standpoint);
            }
        }
        declared.insert("*".into(), DeclKind::Standpoint);
        Kinds { table: HashMap::new(), declared, order: Vec::new(), errors: Vec::new(), options }
    }

    fn error(&mut self, pos: Pos, kind: ParseErrorKind, message: String) {
        self.errors.push(ParseError::new(pos.line, pos.column, kind, message));
    }

    fn declare(&mut self, kind: DeclKind, name: &RawName) {
        match self.table.get(&name.text) {
            Some(&existing) if existing != kind => {
                let message = format!(
                    "`{}` is declared as {} but was already declared as {}",
                    name.text,
                    kind_word(kind),
                    kind_word(existing)
                );
                self.error(name.pos, ParseErrorKind::Syntax, message);
            }
            Some(_) => {}
            None => {
                if let Some(&base) = self.declared.get(&name.text) {
                    if base != kind {
                        let message =
                            format!("`{}` is declared as {} but is a {}", name.text, kind_word(kind), kind_word(base));
                        self.error(name.pos, ParseErrorKind::Syntax, message);
                        return;
                    }
                }
                self.table.insert(name.text.clone(), kind);
                self.order.push(name.text.clone());
            }
        }
    }

    fn lookup(&self, text: &str) -> Option<DeclKind> {
        self.table.get(text).or_else(|| self.declared.get(text)).copied()
    }

    fn use_as(&mut self, kind: DeclKind, name: &RawName) {
        match self.lookup(&name.text) {
            Some(existing) if existing != kind => {
                let message = format!(
                    "`{}` is used as a {} here but is a {}",
                    name.text,
                    kind_word(kind),
                    kind_word(existing)
                );
                self.error(name.pos, ParseErrorKind::Syntax, message);
            }
            Some(_) => {
                if !self.table.contains_key(&name.text) {
                    self.table.insert(name.text.clone(), kind);
                    self.order.push(name.text.clone());
                }
            }
            None => {
                if self.options.require_declarations {
                    let message = format!("`{}` is not declared", name.text);
                    self.error(name.pos, ParseErrorKind::UndeclaredName, message);
                }
                self.table.insert(name.text.clone(), kind);
                self.order.push(name.text.clone());
            }
        }
    }
}

fn collect_concept(kinds: &mut Kinds, c: &RawConcept) {
    match c {
        RawConcept::Top | RawConcept::Bot => {}
        RawConcept::Name(n) => kinds.use_as(DeclKind::Concept, n),
        RawConcept::And(l, r) => {
            collect_concept(kinds, l);
            collect_concept(kinds, r);
        }
        RawConcept::Exists(r, f) => {
            kinds.use_as(DeclKind::Role, r);
            collect_concept(kinds, f);
        }
        RawConcept::SelfLoop(r) => kinds.use_as(DeclKind::Role, r),
        RawConcept::Modal(_, s, inner) => {
            kinds.use_as(DeclKind::Standpoint, s);
            collect_concept(kinds, inner);
        }
    }
}

fn collect_axiom<'r>(kinds: &mut Kinds, ax: &'r RawAxiom, ambiguous: &mut Vec<(&'r RawName, &'r RawName)>) {
    match ax {
        RawAxiom::Sub(RawConcept::Name(a), RawConcept::Name(b)) => ambiguous.push((a, b)),
        RawAxiom::Sub(l, r) => {
            collect_concept(kinds, l);
            collect_concept(kinds, r);
        }
        RawAxiom::Chain(chain, sup) => {
            for r in chain {
                kinds.use_as(DeclKind::Role, r);
            }
            kinds.use_as(DeclKind::Role, sup);
        }
        RawAxiom::ConceptAssert(c, a) => {
            collect_concept(kinds, c);
            kinds.use_as(DeclKind::Individual, a);
        }
        RawAxiom::RoleAssert(r, a, b) => {
            kinds.use_as(DeclKind::Role, r);
            kinds.use_as(DeclKind::Individual, a);
            kinds.use_as(DeclKind::Individual, b);
        }
    }
}

fn build_concept(c: &RawConcept) -> Concept {
    match c {
        RawConcept::Top => Concept::Top,
        RawConcept::Bot => Concept::Bottom,
        RawConcept::Name(n) => Concept::Name(ConceptName::new(&n.text)),
        RawConcept::And(l, r) => Concept::and(build_concept(l), build_concept(r)),
        RawConcept::Exists(r, f) => Concept::exists(RoleName::new(&r.text), build_concept(f)),
        RawConcept::SelfLoop(r) => Concept::SelfLoop(RoleName::new(&r.text)),
        RawConcept::Modal(m, s, inner) => Concept::modal(*m, StandpointName::new(&s.text), build_concept(inner)),
    }
}

fn build_axiom(kinds: &Kinds, ax: &RawAxiom) -> Axiom {
    match ax {
        RawAxiom::Sub(RawConcept::Name(a), RawConcept::Name(b)) if kinds.lookup(&a.text) == Some(DeclKind::Role) => {
            Axiom::Ria(vec![RoleName::new(&a.text)], RoleName::new(&b.text))
        }
        RawAxiom::Sub(l, r) => Axiom::Gci(build_concept(l), build_concept(r)),
        RawAxiom::Chain(chain, sup) => {
            Axiom::Ria(chain.iter().map(|r| RoleName::new(&r.text)).collect(), RoleName::new(&sup.text))
        }
        RawAxiom::ConceptAssert(c, a) => Axiom::ConceptAssertion(build_concept(c), IndividualName::new(&a.text)),
        RawAxiom::RoleAssert(r, a, b) => {
            Axiom::RoleAssertion(RoleName::new(&r.text), IndividualName::new(&a.text), IndividualName::new(&b.text))
        }
    }
}

fn build_literals(kinds: &Kinds, lits: &[RawLiteral]) -> Vec<Literal> {
    lits.iter().map(|l| Literal { negated: l.negated, axiom: build_axiom(kinds, &l.axiom) }).collect()
}

pub(crate) fn resolve(items: Vec<RawItem>, options: &ParseOptions) -> Result<(Vocabulary, Vec<Query>), Vec<ParseError>> {
    let mut kinds = Kinds::new(options);
    for item in &items {
        if let RawItem::Decl(kind, name) = item {
            kinds.declare(*kind, name);
        }
    }

    let mut ambiguous = Vec::new();
    for item in &items {
        match item {
            RawItem::Decl(..) => {}
            RawItem::Formula { standpoint, literals, .. } => {
                kinds.use_as(DeclKind::Standpoint, standpoint);
                for lit in literals {
                    collect_axiom(&mut kinds, &lit.axiom, &mut ambiguous);
                }
            }
            RawItem::Sharpening { lhs, rhs, .. } => {
                for s in lhs.iter().chain(rhs.iter()) {
                    kinds.use_as(DeclKind::Standpoint, s);
                }
            }
            RawItem::Bare { axiom, .. } => collect_axiom(&mut kinds, axiom, &mut ambiguous),
        }
    }

    // `A sub B` between bare names is a role inclusion as soon as either side is known to be a role.
    loop {
        let mut changed = false;
        let mut pending = Vec::new();
        for (a, b) in ambiguous.drain(..) {
            let is_role = |n: &RawName| kinds.lookup(&n.text) == Some(DeclKind::Role);
            if is_role(a) || is_role(b) {
                kinds.use_as(DeclKind::Role, a);
                kinds.use_as(DeclKind::Role, b);
                changed = true;
            } else {
                pending.push((a, b));
            }
        }
        ambiguous = pending;
        if !changed {
            break;
        }
    }
    for (a, b) in ambiguous {
        kinds.use_as(DeclKind::Concept, a);
        kinds.use_as(DeclKind::Concept, b);
    }

    if !kinds.errors.is_empty() {
        let mut errors = kinds.errors;
        errors.sort_by_key(|e| (e.line, e.column));
        return Err(errors);
    }

    let mut vocab = Vocabulary::new();
    for text in &kinds.order {
        match kinds.table[text] {
            DeclKind::Standpoint => {
                vocab.standpoints.insert(StandpointName::new(text));
            }
            DeclKind::Concept => {
                vocab.concepts.insert(ConceptName::new(text));
            }
            DeclKind::Role => {
                vocab.roles.insert(RoleName::new(text));
            }
            DeclKind::Individual => {
                vocab.individuals.insert(IndividualName::new(text));
            }
        }
    }

    let mut out = Vec::new();
    for item in &items {
        match item {
            RawItem::Decl(..) => {}
            RawItem::Formula { negated, modality, standpoint, literals } => {
                let standpoint = StandpointName::new(&standpoint.text);
                let monomial = build_literals(&kinds, literals);
                if *negated {
                    out.push(Query::NotFormula { modality: *modality, standpoint, monomial });
                } else {
                    out.push(Query::Statement(Statement::formula(*modality, standpoint, monomial)));
                }
            }
            RawItem::Sharpening { negated, lhs, rhs } => {
                let lhs = lhs.iter().map(|s| StandpointName::new(&s.text)).collect();
                let rhs = match rhs {
                    Some(s) => SharpRhs::Standpoint(StandpointName::new(&s.text)),
                    None => SharpRhs::Empty,
                };
                out.push(Query::Statement(Statement::sharpening(*negated, lhs, rhs)));
            }
            RawItem::Bare { negated, axiom } => {
                let lit = Literal { negated: *negated, axiom: build_axiom(&kinds, axiom) };
                out.push(Query::Statement(Statement::formula(Modality::Box, StandpointName::star(), vec![lit])));
            }
        }
    }
    Ok((vocab, out))
}
