//! Recursive-descent parser for polynomial text such as `y^2 + x*z + x`,
//! `x_1^3 x_2^5 x_3 - 2/3*x_4` or `(z + 1)*(x + y)`.
//!
//! Multiplication may be written with `*` or by juxtaposition. `/` is only
//! allowed between two integer literals, forming a rational coefficient.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::{Polynomial, Ring};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexed {
    tok: Tok,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Lexed>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Lexed {
                    tok: Tok::Num(text[start..i].parse().expect("digits")),
                    offset: start,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Lexed {
                    tok: Tok::Ident(text[start..i].to_string()),
                    offset: start,
                });
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or(c);
                return Err(parse_error(
                    text,
                    start,
                    format!("unexpected character `{ch}`"),
                ));
            }
        };
        out.push(Lexed { tok, offset: start });
        i += 1;
    }
    Ok(out)
}

/// Line/column (1-based) of a byte offset.
pub(crate) fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before
        .rfind('\n')
        .map_or(before.len(), |nl| before.len() - nl - 1)
        + 1;
    (line, column)
}

fn parse_error(text: &str, offset: usize, message: String) -> Error {
    let (line, column) = position(text, offset);
    Error::Parse {
        line,
        column,
        message,
    }
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<Lexed>,
    pos: usize,
    end: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |l| l.offset)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        parse_error(self.text, self.offset(), message.into())
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|l| l.tok.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -&self.product()?
            }
            Some(Tok::Plus) => {
                self.bump();
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.product()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen)
        )
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.bump();
                acc = &acc * &self.power()?;
            } else if self.starts_factor() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let k: u32 = n.try_into().map_err(|_| self.error("exponent too large"))?;
                    Ok(base.pow(k))
                }
                _ => {
                    self.pos -= 1;
                    Err(self.error("expected a non-negative integer exponent"))
                }
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        match self.bump() {
            Some(Tok::Num(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let den = match self.bump() {
                        Some(Tok::Num(d)) => d,
                        _ => {
                            self.pos -= 1;
                            return Err(self.error("expected an integer denominator"));
                        }
                    };
                    let c = field.from_ratio(n, den).map_err(|_| {
                        self.pos -= 1;
                        self.error(format!("denominator has no inverse in {field}"))
                    })?;
                    Ok(Polynomial::constant(self.ring, c))
                } else {
                    Ok(Polynomial::constant(self.ring, field.from_int(n)))
                }
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => {
                    self.pos -= 1;
                    Err(self.error(format!("unknown variable `{name}`")))
                }
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                Err(self.error("expected a number, variable or `(`"))
            }
        }
    }
}

/// Parses one polynomial over `ring`. Errors carry line/column within `text`.
pub fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    parse_span(ring, text, 0..text.len())
}

/// Parses `text[span]`, reporting positions relative to the whole of `text`.
pub(crate) fn parse_span(
    ring: &Arc<Ring>,
    text: &str,
    span: std::ops::Range<usize>,
) -> Result<Polynomial> {
    // Blank everything outside the span but keep newlines, so offsets and
    // line/column positions stay those of the full text.
    let masked: String = text
        .char_indices()
        .map(|(i, c)| {
            if span.contains(&i) || c == '\n' {
                c.to_string()
            } else {
                " ".repeat(c.len_utf8())
            }
        })
        .collect();
    let text = masked.as_str();
    let toks = lex(text)?;
    let mut p = Parser {
        text,
        toks,
        pos: 0,
        end: span.end.min(text.len()),
        ring,
    };
    if p.peek().is_none() {
        return Err(p.error("empty polynomial"));
    }
    let poly = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}
