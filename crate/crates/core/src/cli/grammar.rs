//! Text syntax for mapping class words.
//!
//! ```text
//! word := term { term }
//! term := atom [ '^' signed-int ]
//! atom := 't' index | 'iota' | '(' word ')'
//! ```
//!
//! `Display` on [`MCGWord`] prints in this syntax, so printing and reparsing
//! round-trips.

use thiserror::Error;

use crate::surface::{Atom, Generator, Genus, MCGWord, SurfaceError, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected {found} at offset {offset}, expected {expected}")]
    Unexpected { offset: usize, found: String, expected: &'static str },
    #[error("number {0} out of range")]
    Overflow(String),
    #[error("empty group at offset {0}")]
    EmptyGroup(usize),
    #[error(transparent)]
    Word(#[from] SurfaceError),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError::Unexpected { offset: self.pos, found, expected }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn word(&mut self, closing: bool) -> Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(')') if closing => break,
                _ => terms.push(self.term()?),
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let atom = self.atom()?;
        self.skip_ws();
        let mut exp = 1i64;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let neg = match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some('+') => {
                    self.pos += 1;
                    false
                }
                _ => false,
            };
            let d = self.digits();
            if d.is_empty() {
                return Err(self.unexpected("an integer exponent"));
            }
            let text = if neg { format!("-{d}") } else { d.to_string() };
            exp = text.parse().map_err(|_| ParseError::Overflow(text))?;
        }
        Ok(Term { atom, exp })
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let rest = &self.src[self.pos..];
        if rest.starts_with("iota") {
            self.pos += 4;
            return Ok(Atom::Gen(Generator::Iota));
        }
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                let d = self.digits();
                if d.is_empty() {
                    return Err(self.unexpected("a curve index after 't'"));
                }
                let i = d.parse().map_err(|_| ParseError::Overflow(d.to_string()))?;
                Ok(Atom::Gen(Generator::Twist(i)))
            }
            Some('(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.word(true)?;
                if self.peek() != Some(')') {
                    return Err(self.unexpected("')'"));
                }
                self.pos += 1;
                if inner.is_empty() {
                    return Err(ParseError::EmptyGroup(open));
                }
                Ok(Atom::Group(inner))
            }
            _ => Err(self.unexpected("'t<index>', 'iota' or '('")),
        }
    }
}

/// Parses a word in the generators of genus `g`. The empty string and `1`
/// both denote the identity.
pub fn parse_word(text: &str, genus: Genus) -> Result<MCGWord, ParseError> {
    if text.trim() == "1" {
        return Ok(MCGWord::empty(genus));
    }
    let mut p = Parser { src: text, pos: 0 };
    let terms = p.word(false)?;
    Ok(MCGWord::new(genus, terms)?)
}
