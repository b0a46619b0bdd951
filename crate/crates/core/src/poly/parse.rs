//! Recursive-descent parser for the polynomial grammar
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := 'x' | 'y' | rational | '(' expr ')'
//! rational := int ('/' posint)?
//! ```
//!
//! Whitespace is insignificant. Implicit multiplication (`2x`) is rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{BiPoly, Rational};
use crate::error::{Error, Result};

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

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            let n: BigInt = text[pos..end].parse().expect("digit run");
            out.push((pos, Tok::Num(n)));
            continue;
        }
        if ch.is_alphabetic() || ch == '_' {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !(c.is_alphanumeric() || c == '_') {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            out.push((pos, Tok::Ident(text[pos..end].to_string())));
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected character '{ch}'"),
                })
            }
        };
        out.push((pos, tok));
        chars.next();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiPoly> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            let e = match self.bump() {
                Some(Tok::Num(n)) => u32::try_from(n).map_err(|_| Error::BadExponent { pos })?,
                _ => return Err(Error::BadExponent { pos }),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<BiPoly> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Ident(name)) => match name.as_str() {
                "x" => Ok(BiPoly::x()),
                "y" => Ok(BiPoly::y()),
                _ => Err(Error::UnknownIdentifier { pos, name }),
            },
            Some(Tok::Num(n)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            Ok(BiPoly::constant(Rational::new(n, d)))
                        }
                        Some(Tok::Num(_)) => {
                            self.idx -= 1;
                            self.syntax("denominator must be positive")
                        }
                        _ => {
                            self.idx -= 1;
                            self.syntax("expected denominator")
                        }
                    }
                } else {
                    Ok(BiPoly::constant(Rational::from_integer(n)))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => {
                        self.idx -= 1;
                        self.syntax("expected ')'")
                    }
                }
            }
            Some(_) => {
                self.idx -= 1;
                self.syntax("expected 'x', 'y', a number or '('")
            }
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses a polynomial in `x` and `y` into canonical form.
pub fn parse_poly(text: &str) -> Result<BiPoly> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        idx: 0,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.idx < p.toks.len() {
        return p.syntax("expected operator or end of input");
    }
    Ok(out)
}
