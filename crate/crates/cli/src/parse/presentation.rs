//! Parser for the presentation language:
//!
//! ```text
//! presentation := '<' names '|' (relation (',' relation)*)? '>'
//! names        := (ident (',' ident)*)?
//! relation     := word ('=' word)?
//! word         := atom+
//! atom         := primary ('^' int)?
//! primary      := ident | '1' | '[' word ',' word ']' | '(' word ')'
//! ```
//!
//! Juxtaposition is the group product, `1` the empty word, `[x,y]` the
//! commutator `x y x^-1 y^-1`, and an equation `w1 = w2` is stored as the
//! relator `w1 w2^-1`. Errors carry 1-based line/column positions.

use acyclo_core::presentation::{Presentation, Word};

use super::{ParseError, Span};

/// Raw text plus the parsed presentation and the source spans of each
/// declared generator and relation, for positioned diagnostics.
#[derive(Clone, Debug)]
pub struct PresentationSource {
    pub raw: String,
    pub presentation: Presentation,
    pub generator_spans: Vec<Span>,
    pub relation_spans: Vec<Span>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Lt,
    Gt,
    Pipe,
    Comma,
    Eq,
    Caret,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Ident(String),
    Int(i64),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Lt => "'<'".into(),
            Tok::Gt => "'>'".into(),
            Tok::Pipe => "'|'".into(),
            Tok::Comma => "','".into(),
            Tok::Eq => "'='".into(),
            Tok::Caret => "'^'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::Int(value) => format!("integer `{value}`"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    fn advance(chars: &[char], i: &mut usize, line: &mut u32, col: &mut u32) -> char {
        let c = chars[*i];
        *i += 1;
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
        c
    }

    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let mut line: u32 = 1;
    let mut col: u32 = 1;
    while i < chars.len() {
        let c = chars[i];
        let span = Span { line, col };
        match c {
            c if c.is_whitespace() => {
                advance(&chars, &mut i, &mut line, &mut col);
            }
            '<' | '>' | '|' | ',' | '=' | '^' | '[' | ']' | '(' | ')' => {
                advance(&chars, &mut i, &mut line, &mut col);
                out.push((
                    match c {
                        '<' => Tok::Lt,
                        '>' => Tok::Gt,
                        '|' => Tok::Pipe,
                        ',' => Tok::Comma,
                        '=' => Tok::Eq,
                        '^' => Tok::Caret,
                        '[' => Tok::LBracket,
                        ']' => Tok::RBracket,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    },
                    span,
                ));
            }
            c if c.is_ascii_digit() || c == '-' => {
                let mut digits = String::new();
                digits.push(advance(&chars, &mut i, &mut line, &mut col));
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(advance(&chars, &mut i, &mut line, &mut col));
                }
                if digits == "-" {
                    return Err(ParseError::at(span, "expected digits after '-'"));
                }
                let value: i64 = digits.parse().map_err(|_| {
                    ParseError::at(span, format!("integer `{digits}` out of range"))
                })?;
                out.push((Tok::Int(value), span));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                name.push(advance(&chars, &mut i, &mut line, &mut col));
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    name.push(advance(&chars, &mut i, &mut line, &mut col));
                }
                out.push((Tok::Ident(name), span));
            }
            other => {
                return Err(ParseError::at(
                    span,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Tok, Span)>,
    pos: usize,
    end: Span,
    names: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn span(&self) -> Span {
        self.tokens
            .get(self.pos)
            .map(|(_, s)| *s)
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<(Tok, Span)> {
        let item = self.tokens.get(self.pos).cloned();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    fn err_here(&self, expected: &str) -> ParseError {
        let found = match self.tokens.get(self.pos) {
            Some((tok, _)) => format!("found {}", tok.describe()),
            None => "found end of input".to_string(),
        };
        ParseError::at(self.span(), format!("expected {expected}, {found}"))
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<Span, ParseError> {
        match self.peek() {
            Some(t) if *t == tok => Ok(self.next().unwrap().1),
            _ => Err(self.err_here(expected)),
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Ident(_)) | Some(Tok::Int(1)) | Some(Tok::LBracket) | Some(Tok::LParen)
        )
    }

    fn primary(&mut self) -> Result<Word, ParseError> {
        let span = self.span();
        match self.next() {
            Some((Tok::Ident(name), _)) => match self.names.iter().position(|n| *n == name) {
                Some(index) => Ok(Word::generator(index)),
                None => Err(ParseError::at(span, format!("unknown generator `{name}`"))),
            },
            Some((Tok::Int(1), _)) => Ok(Word::empty()),
            Some((Tok::LBracket, _)) => {
                let left = self.word()?;
                self.expect(Tok::Comma, "','")?;
                let right = self.word()?;
                self.expect(Tok::RBracket, "']'")?;
                Ok(Word::commutator(&left, &right))
            }
            Some((Tok::LParen, _)) => {
                let inner = self.word()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(ParseError::at(span, "expected generator, `1`, `[`, or `(`")),
        }
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        let base = self.primary()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            let span = self.span();
            match self.next() {
                Some((Tok::Int(exp), _)) => Ok(base.pow(exp)),
                _ => Err(ParseError::at(span, "expected integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        if !self.starts_primary() {
            return Err(self.err_here("a word (generator, `1`, `[`, or `(`)"));
        }
        let mut word = self.atom()?;
        while self.starts_primary() {
            word = word.concat(&self.atom()?);
        }
        Ok(word)
    }
}

pub fn parse_presentation(text: &str) -> Result<PresentationSource, ParseError> {
    let tokens = lex(text)?;
    let end = tokens
        .last()
        .map(|(_, s)| Span {
            line: s.line,
            col: s.col + 1,
        })
        .unwrap_or(Span { line: 1, col: 1 });
    let mut parser = Parser {
        tokens,
        pos: 0,
        end,
        names: Vec::new(),
    };

    parser.expect(Tok::Lt, "'<'")?;
    let mut generator_spans = Vec::new();
    loop {
        match parser.peek() {
            Some(Tok::Ident(_)) => {
                let (tok, span) = parser.next().unwrap();
                let Tok::Ident(name) = tok else {
                    unreachable!()
                };
                if parser.names.contains(&name) {
                    return Err(ParseError::at(
                        span,
                        format!("duplicate generator `{name}`"),
                    ));
                }
                parser.names.push(name);
                generator_spans.push(span);
                if matches!(parser.peek(), Some(Tok::Comma)) {
                    parser.next();
                    continue;
                }
                break;
            }
            Some(Tok::Pipe) => break,
            _ => return Err(parser.err_here("a generator name or '|'")),
        }
    }
    parser.expect(Tok::Pipe, "'|'")?;

    let mut relators = Vec::new();
    let mut relation_spans = Vec::new();
    if !matches!(parser.peek(), Some(Tok::Gt)) {
        loop {
            relation_spans.push(parser.span());
            let lhs = parser.word()?;
            let relator = if matches!(parser.peek(), Some(Tok::Eq)) {
                parser.next();
                let rhs = parser.word()?;
                lhs.concat(&rhs.inverse())
            } else {
                lhs
            };
            relators.push(relator);
            match parser.peek() {
                Some(Tok::Comma) => {
                    parser.next();
                }
                Some(Tok::Gt) => break,
                _ => return Err(parser.err_here("',' or '>'")),
            }
        }
    }
    parser.expect(Tok::Gt, "'>'")?;
    if let Some(tok) = parser.peek() {
        return Err(ParseError::at(
            parser.span(),
            format!("trailing input after '>': {}", tok.describe()),
        ));
    }

    let presentation =
        Presentation::new(parser.names.clone(), relators).map_err(|e| ParseError {
            line: 1,
            col: 1,
            message: e.to_string(),
        })?;
    Ok(PresentationSource {
        raw: text.to_string(),
        presentation,
        generator_spans,
        relation_spans,
    })
}
