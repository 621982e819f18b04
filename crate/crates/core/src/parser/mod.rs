//! The `.spel` text format: parsing into [`KnowledgeBase`] values and rendering back.
//!
//! ```text
//! standpoint H;
//! box H { Tumour sub Process; }
//! H <= SN;
//! dia L { Tumour(b); }
//! ```

mod grammar;
mod lexer;
mod render;
mod resolve;

use std::fmt;

use crate::kb_model::{KnowledgeBase, Query, Vocabulary};

pub use render::{render_concept, render_kb, render_query, render_statement, RenderError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    UndeclaredName,
    ReservedPrefix,
    NominalInInput,
}

impl ParseErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::Lexical => "lexical",
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::UndeclaredName => "undeclared-name",
            ParseErrorKind::ReservedPrefix => "reserved-prefix",
            ParseErrorKind::NominalInInput => "nominal-in-input",
        }
    }
}

/// A positioned parse diagnostic. Lines and columns are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, kind: ParseErrorKind, message: String) -> ParseError {
        ParseError { line, column, kind, message }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {} error: {}", self.line, self.column, self.kind.as_str(), self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, Default)]
pub struct ParseOptions {
    /// Accept identifiers with the reserved `_` prefix (used to re-read generated output).
    pub allow_reserved: bool,
    /// Names whose kinds are already fixed, e.g. the vocabulary of the KB a query refers to.
    pub base: Option<Vocabulary>,
    /// Reject names that are neither declared nor in `base`.
    pub require_declarations: bool,
}

pub fn parse_kb(text: &str) -> Result<KnowledgeBase, Vec<ParseError>> {
    parse_kb_with(text, &ParseOptions::default())
}

pub fn parse_kb_with(text: &str, options: &ParseOptions) -> Result<KnowledgeBase, Vec<ParseError>> {
    let queries = parse_items(text, options, false)?;
    let (vocab, items) = queries;
    let statements = items.into_iter().map(|q| match q {
        Query::Statement(s) => s,
        Query::NotFormula { .. } => unreachable!("negated formulas are rejected outside query files"),
    });
    Ok(KnowledgeBase::new(vocab, statements))
}

/// Parses a query file: statements plus negated formulas `not box s { … };`.
pub fn parse_queries(text: &str, options: &ParseOptions) -> Result<Vec<Query>, Vec<ParseError>> {
    parse_items(text, options, true).map(|(_, items)| items)
}

fn parse_items(
    text: &str,
    options: &ParseOptions,
    queries: bool,
) -> Result<(Vocabulary, Vec<Query>), Vec<ParseError>> {
    let (tokens, mut errors) = lexer::tokenize(text, options.allow_reserved);
    let mut parser = grammar::Parser::new(tokens, queries);
    let raw = parser.parse_file();
    errors.extend(parser.into_errors());
    if !errors.is_empty() {
        errors.sort_by_key(|e| (e.line, e.column));
        return Err(errors);
    }
    resolve::resolve(raw, options)
}

#[cfg(test)]
mod tests;
