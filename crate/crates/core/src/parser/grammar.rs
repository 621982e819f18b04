//! Recursive-descent parser producing an unresolved syntax tree.
//!
//! Name kinds are not decided here; `resolve` does that once the whole file is read.

use super::lexer::{is_keyword, Tok, Token};
use super::{ParseError, ParseErrorKind};
use crate::kb_model::Modality;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct RawName {
    pub text: String,
    pub pos: Pos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum DeclKind {
    Standpoint,
    Concept,
    Role,
    Individual,
}

#[derive(Clone, Debug)]
pub(crate) enum RawConcept {
    Top,
    Bot,
    Name(RawName),
    And(Box<RawConcept>, Box<RawConcept>),
    Exists(RawName, Box<RawConcept>),
    SelfLoop(RawName),
    Modal(Modality, RawName, Box<RawConcept>),
}

#[derive(Clone, Debug)]
pub(crate) enum RawAxiom {
    /// `C sub D`; a GCI, or a RIA of length one when both sides are role names.
    Sub(RawConcept, RawConcept),
    Chain(Vec<RawName>, RawName),
    ConceptAssert(RawConcept, RawName),
    RoleAssert(RawName, RawName, RawName),
}

#[derive(Clone, Debug)]
pub(crate) struct RawLiteral {
    pub negated: bool,
    pub axiom: RawAxiom,
}

#[derive(Clone, Debug)]
pub(crate) enum RawItem {
    Decl(DeclKind, RawName),
    Formula {
        negated: bool,
        modality: Modality,
        standpoint: RawName,
        literals: Vec<RawLiteral>,
    },
    Sharpening {
        negated: bool,
        lhs: Vec<RawName>,
        /// `None` is the empty standpoint `0`.
        rhs: Option<RawName>,
    },
    Bare {
        negated: bool,
        axiom: RawAxiom,
    },
}

pub(crate) struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    errors: Vec<ParseError>,
    queries: bool,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    pub fn new(tokens: Vec<Token>, queries: bool) -> Parser {
        Parser { tokens, pos: 0, errors: Vec::new(), queries }
    }

    pub fn into_errors(self) -> Vec<ParseError> {
        self.errors
    }

    pub fn parse_file(&mut self) -> Vec<RawItem> {
        let mut items = Vec::new();
        while !self.at(&Tok::Eof) {
            let start = self.pos;
            match self.item() {
                Ok(item) => items.push(item),
                Err(e) => {
                    self.errors.push(e);
                    self.recover(start);
                }
            }
        }
        items
    }

    /// Skips to just past the next `;` outside braces, counting from the failed item's start.
    fn recover(&mut self, start: usize) {
        let mut depth = 0usize;
        let mut i = start;
        loop {
            match &self.tokens[i].tok {
                Tok::Eof => break,
                Tok::LBrace => depth += 1,
                Tok::RBrace => depth = depth.saturating_sub(1),
                Tok::Semi if depth == 0 => {
                    i += 1;
                    break;
                }
                _ => {}
            }
            i += 1;
        }
        self.pos = i.max(start + 1).min(self.tokens.len() - 1);
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn here(&self) -> Pos {
        let t = &self.tokens[self.pos];
        Pos { line: t.line, column: t.column }
    }

    fn at(&self, tok: &Tok) -> bool {
        self.peek() == tok
    }

    fn at_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(w) if w == kw)
    }

    fn kw_at(&self, offset: usize, kw: &str) -> bool {
        matches!(self.peek_at(offset), Tok::Ident(w) if w == kw)
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let p = self.here();
        ParseError::new(p.line, p.column, ParseErrorKind::Syntax, message.into())
    }

    fn describe(tok: &Tok) -> String {
        match tok {
            Tok::Ident(w) => format!("`{w}`"),
            Tok::Star => "`*`".into(),
            Tok::Zero => "`0`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Le => "`<=`".into(),
            Tok::Eof => "end of input".into(),
        }
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if self.at(&tok) {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected {}, found {}",
                Self::describe(&tok),
                Self::describe(self.peek())
            )))
        }
    }

    fn expect_kw(&mut self, kw: &str) -> PResult<()> {
        if self.at_kw(kw) {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!("expected `{kw}`, found {}", Self::describe(self.peek()))))
        }
    }

    fn is_plain_ident(tok: &Tok) -> bool {
        matches!(tok, Tok::Ident(w) if !is_keyword(w))
    }

    fn is_sp(tok: &Tok) -> bool {
        Self::is_plain_ident(tok) || *tok == Tok::Star
    }

    fn ident(&mut self, what: &str) -> PResult<RawName> {
        let pos = self.here();
        match self.peek().clone() {
            Tok::Ident(w) if !is_keyword(&w) => {
                self.bump();
                Ok(RawName { text: w, pos })
            }
            Tok::Ident(w) => Err(self.error_here(format!("keyword `{w}` cannot be used as {what}"))),
            other => Err(self.error_here(format!("expected {what}, found {}", Self::describe(&other)))),
        }
    }

    fn standpoint(&mut self) -> PResult<RawName> {
        if self.at(&Tok::Star) {
            let pos = self.here();
            self.bump();
            Ok(RawName { text: "*".into(), pos })
        } else {
            self.ident("a standpoint name")
        }
    }

    fn item(&mut self) -> PResult<RawItem> {
        if let Some(kind) = self.decl_kind() {
            if Self::is_plain_ident(self.peek_at(1)) && *self.peek_at(2) == Tok::Semi {
                self.bump();
                let name = self.ident("a name")?;
                self.expect(Tok::Semi)?;
                return Ok(RawItem::Decl(kind, name));
            }
        }
        let negated = if self.at_kw("not") {
            self.bump();
            true
        } else {
            false
        };
        if self.sharpening_ahead() {
            let (lhs, rhs) = self.sharpening()?;
            self.expect(Tok::Semi)?;
            return Ok(RawItem::Sharpening { negated, lhs, rhs });
        }
        if (self.at_kw("box") || self.at_kw("dia")) && Self::is_sp(self.peek_at(1)) && *self.peek_at(2) == Tok::LBrace
        {
            let start = self.here();
            let (modality, standpoint, literals) = self.formula()?;
            if self.at(&Tok::Semi) {
                self.bump();
            }
            if negated && !self.queries {
                return Err(ParseError::new(
                    start.line,
                    start.column,
                    ParseErrorKind::Syntax,
                    "a negated modal formula is only allowed as a query".into(),
                ));
            }
            return Ok(RawItem::Formula { negated, modality, standpoint, literals });
        }
        let axiom = self.axiom()?;
        self.expect(Tok::Semi)?;
        Ok(RawItem::Bare { negated, axiom })
    }

    fn decl_kind(&self) -> Option<DeclKind> {
        match self.peek() {
            Tok::Ident(w) => match w.as_str() {
                "standpoint" => Some(DeclKind::Standpoint),
                "concept" => Some(DeclKind::Concept),
                "role" => Some(DeclKind::Role),
                "individual" => Some(DeclKind::Individual),
                _ => None,
            },
            _ => None,
        }
    }

    fn sharpening_ahead(&self) -> bool {
        let offset = usize::from(self.at(&Tok::LParen));
        Self::is_sp(self.peek_at(offset)) && matches!(self.peek_at(offset + 1), Tok::Amp | Tok::Le)
    }

    fn sharpening(&mut self) -> PResult<(Vec<RawName>, Option<RawName>)> {
        let paren = self.at(&Tok::LParen);
        if paren {
            self.bump();
        }
        let mut lhs = vec![self.standpoint()?];
        while self.at(&Tok::Amp) {
            self.bump();
            lhs.push(self.standpoint()?);
        }
        self.expect(Tok::Le)?;
        let rhs = if self.at(&Tok::Zero) {
            self.bump();
            None
        } else {
            Some(self.standpoint()?)
        };
        if paren {
            self.expect(Tok::RParen)?;
        }
        Ok((lhs, rhs))
    }

    fn modality(&mut self) -> PResult<Modality> {
        if self.at_kw("box") {
            self.bump();
            Ok(Modality::Box)
        } else if self.at_kw("dia") {
            self.bump();
            Ok(Modality::Diamond)
        } else {
            Err(self.error_here("expected `box` or `dia`"))
        }
    }

    fn formula(&mut self) -> PResult<(Modality, RawName, Vec<RawLiteral>)> {
        let modality = self.modality()?;
        let standpoint = self.standpoint()?;
        self.expect(Tok::LBrace)?;
        let mut literals = Vec::new();
        loop {
            if self.at(&Tok::RBrace) {
                if literals.is_empty() {
                    return Err(self.error_here("a modal formula needs at least one literal"));
                }
                self.bump();
                break;
            }
            let negated = if self.at_kw("not") {
                self.bump();
                true
            } else {
                false
            };
            let axiom = self.axiom()?;
            literals.push(RawLiteral { negated, axiom });
            if self.at(&Tok::Semi) {
                self.bump();
            } else if !self.at(&Tok::RBrace) {
                return Err(self.error_here(format!(
                    "expected `;` or `}}` after literal, found {}",
                    Self::describe(self.peek())
                )));
            }
        }
        Ok((modality, standpoint, literals))
    }

    fn axiom(&mut self) -> PResult<RawAxiom> {
        if Self::is_plain_ident(self.peek()) && self.kw_at(1, "o") {
            let mut chain = vec![self.ident("a role name")?];
            while self.at_kw("o") {
                self.bump();
                chain.push(self.ident("a role name")?);
            }
            self.expect_kw("sub")?;
            let sup = self.ident("a role name")?;
            return Ok(RawAxiom::Chain(chain, sup));
        }
        let lhs = self.concept()?;
        if self.at_kw("sub") {
            self.bump();
            let rhs = self.concept()?;
            return Ok(RawAxiom::Sub(lhs, rhs));
        }
        if self.at(&Tok::LParen) {
            self.bump();
            let first = self.ident("an individual name")?;
            if self.at(&Tok::Comma) {
                self.bump();
                let second = self.ident("an individual name")?;
                self.expect(Tok::RParen)?;
                return match lhs {
                    RawConcept::Name(role) => Ok(RawAxiom::RoleAssert(role, first, second)),
                    _ => Err(ParseError::new(
                        first.pos.line,
                        first.pos.column,
                        ParseErrorKind::Syntax,
                        "a role assertion needs a role name before `(`".into(),
                    )),
                };
            }
            self.expect(Tok::RParen)?;
            return Ok(RawAxiom::ConceptAssert(lhs, first));
        }
        Err(self.error_here(format!("expected `sub` or `(`, found {}", Self::describe(self.peek()))))
    }

    fn concept(&mut self) -> PResult<RawConcept> {
        let mut acc = self.prefix_concept()?;
        while self.at_kw("and") {
            self.bump();
            let rhs = self.prefix_concept()?;
            acc = RawConcept::And(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn prefix_concept(&mut self) -> PResult<RawConcept> {
        let pos = self.here();
        match self.peek().clone() {
            Tok::Ident(w) if w == "Top" => {
                self.bump();
                Ok(RawConcept::Top)
            }
            Tok::Ident(w) if w == "Bot" => {
                self.bump();
                Ok(RawConcept::Bot)
            }
            Tok::Ident(w) if w == "ex" => {
                self.bump();
                let role = self.ident("a role name")?;
                self.expect(Tok::Dot)?;
                if self.at_kw("Self") {
                    self.bump();
                    return Ok(RawConcept::SelfLoop(role));
                }
                let filler = self.prefix_concept()?;
                Ok(RawConcept::Exists(role, Box::new(filler)))
            }
            Tok::Ident(w) if w == "box" || w == "dia" => {
                let modality = self.modality()?;
                let sp = self.standpoint()?;
                let inner = self.prefix_concept()?;
                Ok(RawConcept::Modal(modality, sp, Box::new(inner)))
            }
            Tok::Ident(w) if !is_keyword(&w) => {
                self.bump();
                Ok(RawConcept::Name(RawName { text: w, pos }))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.concept()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::LBrace => Err(ParseError::new(
                pos.line,
                pos.column,
                ParseErrorKind::NominalInInput,
                "nominal concepts are not allowed in input".into(),
            )),
            other => Err(self.error_here(format!("expected a concept, found {}", Self::describe(&other)))),
        }
    }
}
