use super::{ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Star,
    Zero,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Comma,
    Dot,
    Amp,
    Le,
    Eof,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(crate) const KEYWORDS: &[&str] = &[
    "box", "dia", "ex", "and", "sub", "not", "o", "Top", "Bot", "Self", "standpoint", "concept", "role",
    "individual",
];

pub(crate) fn is_keyword(text: &str) -> bool {
    KEYWORDS.contains(&text)
}

pub(crate) fn tokenize(text: &str, allow_reserved: bool) -> (Vec<Token>, Vec<ParseError>) {
    let mut tokens = Vec::new();
    let mut errors = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut column) = (0usize, 1usize, 1usize);

    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        let mut push = |tok: Tok, width: usize, i: &mut usize, column: &mut usize| {
            tokens.push(Token { tok, line: start_line, column: start_col });
            *i += width;
            *column += width;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                column += 1;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                    column += 1;
                }
            }
            '*' => push(Tok::Star, 1, &mut i, &mut column),
            '{' => push(Tok::LBrace, 1, &mut i, &mut column),
            '}' => push(Tok::RBrace, 1, &mut i, &mut column),
            '(' => push(Tok::LParen, 1, &mut i, &mut column),
            ')' => push(Tok::RParen, 1, &mut i, &mut column),
            ';' => push(Tok::Semi, 1, &mut i, &mut column),
            ',' => push(Tok::Comma, 1, &mut i, &mut column),
            '.' => push(Tok::Dot, 1, &mut i, &mut column),
            '&' => push(Tok::Amp, 1, &mut i, &mut column),
            '<' if chars.get(i + 1) == Some(&'=') => push(Tok::Le, 2, &mut i, &mut column),
            '0' if !chars.get(i + 1).is_some_and(|n| n.is_ascii_alphanumeric() || *n == '_') => {
                push(Tok::Zero, 1, &mut i, &mut column)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                let width = j - i;
                if c == '_' && !allow_reserved {
                    errors.push(ParseError::new(
                        start_line,
                        start_col,
                        ParseErrorKind::ReservedPrefix,
                        format!("identifier `{word}` uses the reserved prefix `_`"),
                    ));
                }
                push(Tok::Ident(word), width, &mut i, &mut column);
            }
            other => {
                errors.push(ParseError::new(
                    start_line,
                    start_col,
                    ParseErrorKind::Lexical,
                    format!("unexpected character `{other}`"),
                ));
                i += 1;
                column += 1;
            }
        }
    }
    tokens.push(Token { tok: Tok::Eof, line, column });
    (tokens, errors)
}
