//! Recursive-descent parser for terms and identities.
//!
//! ```text
//! identity := term ("=" | "≈") term
//! term     := meet ( "->" term )?
//! meet     := post ( "&" post )*
//! post     := atom ( "'" )*
//! atom     := variable | "0" | "(" term ")"
//! variable := [a-z][a-z0-9]*
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment running to the end
//! of the line. Offsets in errors are byte offsets into the input.

use thiserror::Error;

use crate::term::{Identity, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown token {found:?} at byte {offset}")]
    UnknownToken { offset: usize, found: String },
    #[error("syntax error at byte {offset}: expected {expected}, found {found}")]
    Syntax {
        offset: usize,
        expected: &'static str,
        found: String,
    },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::UnknownToken { offset, .. } | ParseError::Syntax { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    Arrow,
    Amp,
    Prime,
    LParen,
    RParen,
    Equals,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("variable `{s}`"),
            Tok::Zero => "`0`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Prime => "`'`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Equals => "`=`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '#' => {
                while let Some(&(_, c)) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                }
            }
            'a'..='z' => {
                let mut end = i;
                while let Some(&(j, c)) = chars.peek() {
                    if c.is_ascii_lowercase() || c.is_ascii_digit() {
                        end = j + c.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((i, Tok::Ident(text[i..end].to_string())));
            }
            '0' => {
                chars.next();
                if let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() {
                        let end = text[i..]
                            .find(|c: char| !c.is_ascii_alphanumeric())
                            .map_or(text.len(), |e| i + e);
                        return Err(ParseError::UnknownToken {
                            offset: i,
                            found: text[i..end].to_string(),
                        });
                    }
                }
                out.push((i, Tok::Zero));
            }
            '-' => {
                chars.next();
                match chars.peek() {
                    Some(&(_, '>')) => {
                        chars.next();
                        out.push((i, Tok::Arrow));
                    }
                    _ => {
                        return Err(ParseError::UnknownToken {
                            offset: i,
                            found: "-".into(),
                        })
                    }
                }
            }
            '&' | '\'' | '(' | ')' | '=' | '≈' => {
                chars.next();
                let tok = match c {
                    '&' => Tok::Amp,
                    '\'' => Tok::Prime,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    _ => Tok::Equals,
                };
                out.push((i, tok));
            }
            other => {
                return Err(ParseError::UnknownToken {
                    offset: i,
                    found: other.to_string(),
                })
            }
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let left = self.meet()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let right = self.term()?;
            Ok(Term::arrow(left, right))
        } else {
            Ok(left)
        }
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.post()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.post()?;
            acc = Term::meet(acc, rhs);
        }
        Ok(acc)
    }

    fn post(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.atom()?;
        while *self.peek() == Tok::Prime {
            self.bump();
            acc = acc.prime();
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Term::Var(name))
            }
            Tok::Zero => {
                self.bump();
                Ok(Term::Zero)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.term()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("a variable, `0` or `(`")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}

/// Parses a term, desugaring primes and meets.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parses `p = q` (or `p ≈ q`).
pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let lhs = p.term()?;
    if *p.peek() != Tok::Equals {
        return Err(p.error("`=` or `≈`"));
    }
    p.bump();
    let rhs = p.term()?;
    p.finish()?;
    Ok(Identity::new(lhs, rhs))
}

/// Parses a static identity, panicking on malformed text. Meant for
/// built-in tables of identities.
pub fn identity(text: &str) -> Identity {
    parse_identity(text).unwrap_or_else(|e| panic!("bad built-in identity {text:?}: {e}"))
}
