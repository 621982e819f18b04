//! Parser and checker for the core Datalog fragment the exporter emits.
//!
//! Accepted: `.decl p(x: symbol, …)` declarations, ground facts, and Horn
//! rules over variables, `_` and string constants. `//` starts a comment.
//! No negation, arithmetic, or other directives.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(String),
    Wildcard,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub pred: String,
    pub args: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub head: Atom,
    pub body: Vec<Atom>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    /// Declared predicates with their arities, in declaration order.
    pub decls: Vec<(String, usize)>,
    pub facts: Vec<Atom>,
    pub rules: Vec<Rule>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct GrammarError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Str(String),
    LParen,
    RParen,
    Comma,
    Colon,
    Dot,
    Implies,
    Decl,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Str(s) => write!(f, "string {s:?}"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Implies => f.write_str("`:-`"),
            Tok::Decl => f.write_str("`.decl`"),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> GrammarError {
    GrammarError { line, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, GrammarError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut line = 1;
    while let Some(c) = chars.next() {
        match c {
            '\n' => line += 1,
            c if c.is_whitespace() => {}
            '/' if chars.peek() == Some(&'/') => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        line += 1;
                        break;
                    }
                }
            }
            '(' => out.push((Tok::LParen, line)),
            ')' => out.push((Tok::RParen, line)),
            ',' => out.push((Tok::Comma, line)),
            ':' if chars.peek() == Some(&'-') => {
                chars.next();
                out.push((Tok::Implies, line));
            }
            ':' => out.push((Tok::Colon, line)),
            '.' => {
                if chars.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                    let mut word = String::new();
                    while let Some(&c) = chars.peek().filter(|c| c.is_ascii_alphanumeric() || **c == '_') {
                        word.push(c);
                        chars.next();
                    }
                    if word != "decl" {
                        return Err(err(line, format!("unsupported directive `.{word}`")));
                    }
                    out.push((Tok::Decl, line));
                } else {
                    out.push((Tok::Dot, line));
                }
            }
            '"' => {
                let mut s = String::new();
                loop {
                    match chars.next() {
                        None | Some('\n') => return Err(err(line, "unterminated string")),
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(c @ ('"' | '\\')) => s.push(c),
                            Some('n') => s.push('\n'),
                            other => return Err(err(line, format!("bad escape {other:?}"))),
                        },
                        Some(c) => s.push(c),
                    }
                }
                out.push((Tok::Str(s), line));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = c.to_string();
                while let Some(&c) = chars.peek().filter(|c| c.is_ascii_alphanumeric() || **c == '_') {
                    word.push(c);
                    chars.next();
                }
                out.push((Tok::Ident(word), line));
            }
            c => return Err(err(line, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn line(&self) -> usize {
        self.toks.get(self.pos).or(self.toks.last()).map_or(1, |t| t.1)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn next(&mut self) -> Result<Tok, GrammarError> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| err(self.line(), "unexpected end of input"))?;
        self.pos += 1;
        Ok(t.0)
    }

    fn expect(&mut self, want: Tok) -> Result<(), GrammarError> {
        let line = self.line();
        let got = self.next()?;
        if got == want {
            Ok(())
        } else {
            Err(err(line, format!("expected {want}, found {got}")))
        }
    }

    fn ident(&mut self) -> Result<String, GrammarError> {
        let line = self.line();
        match self.next()? {
            Tok::Ident(s) => Ok(s),
            other => Err(err(line, format!("expected identifier, found {other}"))),
        }
    }

    fn term(&mut self) -> Result<Term, GrammarError> {
        let line = self.line();
        match self.next()? {
            Tok::Ident(s) if s == "_" => Ok(Term::Wildcard),
            Tok::Ident(s) => Ok(Term::Var(s)),
            Tok::Str(s) => Ok(Term::Const(s)),
            other => Err(err(line, format!("expected a term, found {other}"))),
        }
    }

    fn atom(&mut self) -> Result<Atom, GrammarError> {
        let pred = self.ident()?;
        self.expect(Tok::LParen)?;
        let mut args = vec![self.term()?];
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
            args.push(self.term()?);
        }
        self.expect(Tok::RParen)?;
        Ok(Atom { pred, args })
    }

    fn decl(&mut self) -> Result<(String, usize), GrammarError> {
        let name = self.ident()?;
        self.expect(Tok::LParen)?;
        let mut n = 0;
        loop {
            self.ident()?;
            self.expect(Tok::Colon)?;
            let line = self.line();
            let ty = self.ident()?;
            if ty != "symbol" {
                return Err(err(line, format!("unsupported type `{ty}`")));
            }
            n += 1;
            match self.next()? {
                Tok::Comma => {}
                Tok::RParen => break,
                other => return Err(err(self.line(), format!("expected `,` or `)`, found {other}"))),
            }
        }
        Ok((name, n))
    }
}

/// Parses a program and checks it: declared predicates with consistent
/// arities, ground facts, safe rules, and no wildcards in heads.
pub fn parse_program(text: &str) -> Result<Program, GrammarError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let mut prog = Program::default();
    let mut arity: BTreeMap<String, usize> = BTreeMap::new();
    let mut uses: Vec<(Atom, usize)> = Vec::new();
    while p.peek().is_some() {
        let line = p.line();
        if p.peek() == Some(&Tok::Decl) {
            p.pos += 1;
            let (name, n) = p.decl()?;
            if arity.insert(name.clone(), n).is_some() {
                return Err(err(line, format!("`{name}` declared twice")));
            }
            prog.decls.push((name, n));
            continue;
        }
        let head = p.atom()?;
        match p.next()? {
            Tok::Dot => {
                if head.args.iter().any(|t| !matches!(t, Term::Const(_))) {
                    return Err(err(line, format!("fact `{}` is not ground", head.pred)));
                }
                uses.push((head.clone(), line));
                prog.facts.push(head);
            }
            Tok::Implies => {
                let mut body = vec![p.atom()?];
                loop {
                    match p.next()? {
                        Tok::Comma => body.push(p.atom()?),
                        Tok::Dot => break,
                        other => return Err(err(p.line(), format!("expected `,` or `.`, found {other}"))),
                    }
                }
                let bound: BTreeSet<&String> =
                    body.iter().flat_map(|a| &a.args).filter_map(|t| if let Term::Var(v) = t { Some(v) } else { None }).collect();
                for t in &head.args {
                    match t {
                        Term::Wildcard => return Err(err(line, "wildcard in rule head")),
                        Term::Var(v) if !bound.contains(v) => {
                            return Err(err(line, format!("head variable `{v}` does not occur in the body")))
                        }
                        _ => {}
                    }
                }
                uses.push((head.clone(), line));
                for a in &body {
                    uses.push((a.clone(), line));
                }
                prog.rules.push(Rule { head, body });
            }
            other => return Err(err(line, format!("expected `.` or `:-`, found {other}"))),
        }
    }
    for (atom, line) in uses {
        match arity.get(&atom.pred) {
            None => return Err(err(line, format!("undeclared predicate `{}`", atom.pred))),
            Some(&n) if n != atom.args.len() => {
                return Err(err(line, format!("`{}` has arity {n}, used with {}", atom.pred, atom.args.len())))
            }
            _ => {}
        }
    }
    Ok(prog)
}
