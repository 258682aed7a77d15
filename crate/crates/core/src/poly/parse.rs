//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | base ("^" UINT)?
//! base   := UINT ("/" UINT)? | IDENT | "(" expr ")"
//! ```
//!
//! Juxtaposition is not multiplication: `2x` is rejected.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial};
use crate::coords::Coords;
use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                out.push((Tok::Int(digits.parse().expect("ascii digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_owned()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax { offset, message: message.into() }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    coords: &'a Arc<Coords>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial<Rational>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<Rational>> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<Rational>> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Int(e), at) => {
                let e: u32 = e.try_into().map_err(|_| syntax(at, "exponent too large"))?;
                Ok(base.pow(e))
            }
            (_, at) => Err(syntax(at, "expected an unsigned integer exponent")),
        }
    }

    fn base(&mut self) -> Result<Polynomial<Rational>> {
        match self.bump() {
            (Tok::Int(num), _) => {
                let mut den = BigInt::one();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        (Tok::Int(d), at) => {
                            if d.is_zero() {
                                return Err(syntax(at, "zero denominator"));
                            }
                            den = d;
                        }
                        (_, at) => return Err(syntax(at, "expected a denominator")),
                    }
                }
                Ok(Polynomial::constant(self.coords, Rational::new(num, den)))
            }
            (Tok::Ident(name), at) => match self.coords.index_of(&name) {
                Some(i) => Ok(Polynomial::monomial(self.coords, Rational::one(), Monomial::var(i))),
                None => Err(Error::UnknownIdentifier { name, offset: at }),
            },
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (_, at) => Err(syntax(at, "expected `)`")),
                }
            }
            (Tok::Eof, at) => Err(syntax(at, "unexpected end of input")),
            (_, at) => Err(syntax(at, "expected a number, identifier or `(`")),
        }
    }
}

impl Polynomial<Rational> {
    /// Parses `text` against `coords` (primary names or aliases).
    pub fn parse(text: &str, coords: &Arc<Coords>) -> Result<Self> {
        let mut p = Parser { toks: lex(text)?, pos: 0, coords };
        let out = p.expr()?;
        if *p.peek() != Tok::Eof {
            return Err(syntax(p.offset(), "expected an operator or end of input"));
        }
        Ok(out)
    }
}
