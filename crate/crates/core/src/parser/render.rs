use std::fmt::Write;

use thiserror::Error;

use crate::kb_model::{Axiom, Concept, KnowledgeBase, Literal, Modality, Query, SharpRhs, Statement};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RenderError {
    #[error("nominal concept {{{0}}} has no surface syntax")]
    Nominal(String),
}

fn modality_kw(m: Modality) -> &'static str {
    match m {
        Modality::Box => "box",
        Modality::Diamond => "dia",
    }
}

/// Renders a concept. Conjunctions on the right of `and` and below prefixes get parentheses.
pub fn render_concept(c: &Concept) -> Result<String, RenderError> {
    let mut out = String::new();
    write_concept(&mut out, c, false)?;
    Ok(out)
}

fn write_concept(out: &mut String, c: &Concept, operand: bool) -> Result<(), RenderError> {
    match c {
        Concept::Top => out.push_str("Top"),
        Concept::Bottom => out.push_str("Bot"),
        Concept::Name(n) => out.push_str(n.as_str()),
        Concept::And(l, r) => {
            if operand {
                out.push('(');
            }
            write_concept(out, l, false)?;
            out.push_str(" and ");
            write_concept(out, r, true)?;
            if operand {
                out.push(')');
            }
        }
        Concept::Exists(r, f) => {
            let _ = write!(out, "ex {r}.");
            write_concept(out, f, true)?;
        }
        Concept::SelfLoop(r) => {
            let _ = write!(out, "ex {r}.Self");
        }
        Concept::Modal(m, s, inner) => {
            let _ = write!(out, "{} {s} ", modality_kw(*m));
            write_concept(out, inner, true)?;
        }
        Concept::Nominal(a) => return Err(RenderError::Nominal(a.to_string())),
    }
    Ok(())
}

fn write_axiom(out: &mut String, ax: &Axiom) -> Result<(), RenderError> {
    match ax {
        Axiom::Gci(l, r) => {
            write_concept(out, l, false)?;
            out.push_str(" sub ");
            write_concept(out, r, false)?;
        }
        Axiom::Ria(chain, sup) => {
            let names: Vec<&str> = chain.iter().map(|r| r.as_str()).collect();
            let _ = write!(out, "{} sub {sup}", names.join(" o "));
        }
        Axiom::ConceptAssertion(c, a) => {
            if let Concept::Name(n) = c {
                out.push_str(n.as_str());
            } else {
                out.push('(');
                write_concept(out, c, false)?;
                out.push(')');
            }
            let _ = write!(out, "({a})");
        }
        Axiom::RoleAssertion(r, a, b) => {
            let _ = write!(out, "{r}({a}, {b})");
        }
    }
    Ok(())
}

fn write_literal(out: &mut String, lit: &Literal) -> Result<(), RenderError> {
    if lit.negated {
        out.push_str("not ");
    }
    write_axiom(out, &lit.axiom)
}

fn write_formula(out: &mut String, m: Modality, s: &str, monomial: &[Literal]) -> Result<(), RenderError> {
    let _ = write!(out, "{} {s} {{ ", modality_kw(m));
    for lit in monomial {
        write_literal(out, lit)?;
        out.push_str("; ");
    }
    out.push('}');
    Ok(())
}

/// One statement; sharpenings end in `;`, formulas in `}`.
pub fn render_statement(stmt: &Statement) -> Result<String, RenderError> {
    let mut out = String::new();
    match stmt {
        Statement::Formula { modality, standpoint, monomial } => {
            write_formula(&mut out, *modality, standpoint.as_str(), monomial)?;
            return Ok(out);
        }
        Statement::Sharpening { negated, lhs, rhs } => {
            let lhs: Vec<&str> = lhs.iter().map(|s| s.as_str()).collect();
            let rhs = match rhs {
                SharpRhs::Standpoint(s) => s.as_str(),
                SharpRhs::Empty => "0",
            };
            if *negated {
                let _ = write!(out, "not ({} <= {rhs})", lhs.join(" & "));
            } else {
                let _ = write!(out, "{} <= {rhs}", lhs.join(" & "));
            }
        }
    }
    out.push(';');
    Ok(out)
}

pub fn render_query(q: &Query) -> Result<String, RenderError> {
    match q {
        Query::Statement(s) => render_statement(s),
        Query::NotFormula { modality, standpoint, monomial } => {
            let mut out = String::from("not ");
            write_formula(&mut out, *modality, standpoint.as_str(), monomial)?;
            Ok(out)
        }
    }
}

/// Declarations for the whole vocabulary followed by one statement per line.
pub fn render_kb(kb: &KnowledgeBase) -> Result<String, RenderError> {
    let mut out = String::new();
    let vocab = kb.vocabulary();
    for s in vocab.standpoints.iter().filter(|s| !s.is_star()) {
        let _ = writeln!(out, "standpoint {s};");
    }
    for c in &vocab.concepts {
        let _ = writeln!(out, "concept {c};");
    }
    for r in &vocab.roles {
        let _ = writeln!(out, "role {r};");
    }
    for a in &vocab.individuals {
        let _ = writeln!(out, "individual {a};");
    }
    for stmt in kb.statements() {
        out.push_str(&render_statement(stmt)?);
        out.push('\n');
    }
    Ok(out)
}
