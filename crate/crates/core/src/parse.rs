//! Plain-text polynomial and scalar syntax.
//!
//! The grammar accepted for polynomial-like contexts:
//!
//! ```text
//! expr   := [ '-' ] term ( ( '+' | '-' ) term )*
//! term   := factor ( '*' factor )*
//! factor := atom [ '^' uint ]
//! atom   := ident | uint [ '/' uint ] | '(' expr ')'
//! ```
//!
//! Coefficients are integers, plus `a/b` fractions when the coefficient
//! ring is the rationals; whitespace is insignificant. Scalar contexts
//! accept a single signed integer, and the rationals additionally accept
//! `a/b`. Errors carry the byte offset of the offending token.

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};
use crate::ring::{RingCtx, RingElt};
use crate::scalar::{Scalar, ScalarRing};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next_tok(&mut self) -> Result<(usize, Tok)> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((start, Tok::End));
        }
        let c = self.src[self.pos];
        let simple = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'/' => Some(Tok::Slash),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            self.pos += 1;
            return Ok((start, t));
        }
        if c.is_ascii_digit() {
            let mut end = self.pos;
            while end < self.src.len() && self.src[end].is_ascii_digit() {
                end += 1;
            }
            let txt = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
            self.pos = end;
            let n = txt.parse::<BigInt>().map_err(|e| Error::ParseError {
                pos: start,
                msg: format!("bad integer literal: {e}"),
            })?;
            return Ok((start, Tok::Int(n)));
        }
        if c.is_ascii_alphabetic() {
            let mut end = self.pos;
            while end < self.src.len()
                && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
            {
                end += 1;
            }
            let txt = std::str::from_utf8(&self.src[self.pos..end]).unwrap().to_string();
            self.pos = end;
            return Ok((start, Tok::Ident(txt)));
        }
        Err(Error::ParseError { pos: start, msg: format!("unexpected byte {:?}", c as char) })
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    ctx: RingCtx,
    look: (usize, Tok),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, ctx: &RingCtx) -> Result<Parser<'a>> {
        let mut lex = Lexer::new(src);
        let look = lex.next_tok()?;
        Ok(Parser { lex, ctx: ctx.clone(), look })
    }

    fn advance(&mut self) -> Result<(usize, Tok)> {
        let mut next = self.lex.next_tok()?;
        std::mem::swap(&mut self.look, &mut next);
        Ok(next)
    }

    fn expr(&mut self) -> Result<RingElt> {
        let mut negate = false;
        if self.look.1 == Tok::Minus {
            negate = true;
            self.advance()?;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.look.1 {
                Tok::Plus => {
                    self.advance()?;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Tok::Minus => {
                    self.advance()?;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RingElt> {
        let mut acc = self.factor()?;
        while self.look.1 == Tok::Star {
            self.advance()?;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RingElt> {
        let base = self.atom()?;
        if self.look.1 == Tok::Caret {
            self.advance()?;
            let (pos, tok) = self.advance()?;
            let Tok::Int(n) = tok else {
                return Err(Error::ParseError { pos, msg: "exponent must be an integer".into() });
            };
            let e: u64 = n.try_into().map_err(|_| Error::ParseError {
                pos,
                msg: "exponent out of range".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RingElt> {
        let (pos, tok) = self.advance()?;
        match tok {
            Tok::Int(n) => {
                let scalar = self.ctx.scalar_kind().unwrap();
                if scalar == ScalarRing::Rat && self.look.1 == Tok::Slash {
                    self.advance()?;
                    let (dpos, dtok) = self.advance()?;
                    let Tok::Int(d) = dtok else {
                        return Err(Error::ParseError {
                            pos: dpos,
                            msg: "expected a denominator".into(),
                        });
                    };
                    if d.is_zero() {
                        return Err(Error::ParseError {
                            pos: dpos,
                            msg: "zero denominator".into(),
                        });
                    }
                    return Ok(self.ctx.elt_from_scalar(Scalar::Rat(BigRational::new(n, d))));
                }
                Ok(self.ctx.elt_from_scalar(scalar.from_bigint(&n)))
            }
            Tok::Ident(name) => self.ctx.var(&name).map_err(|_| Error::ParseError {
                pos,
                msg: format!("unknown variable {name:?}"),
            }),
            Tok::LParen => {
                let inner = self.expr()?;
                let (pos, tok) = self.advance()?;
                if tok != Tok::RParen {
                    return Err(Error::ParseError { pos, msg: "expected ')'".into() });
                }
                Ok(inner)
            }
            other => Err(Error::ParseError { pos, msg: format!("unexpected token {other:?}") }),
        }
    }
}

/// Parse an element of `ctx` from text. Polynomial-like contexts use the
/// polynomial grammar; scalar contexts take a signed integer, the rationals
/// also `a/b`.
pub fn parse_elt(src: &str, ctx: &RingCtx) -> Result<RingElt> {
    if ctx.is_poly_like() {
        let mut p = Parser::new(src, ctx)?;
        let e = p.expr()?;
        let (pos, tok) = p.look.clone();
        if tok != Tok::End {
            return Err(Error::ParseError { pos, msg: format!("trailing input {tok:?}") });
        }
        return Ok(e);
    }
    let scalar = ctx.scalar_kind().unwrap();
    let mut lex = Lexer::new(src);
    let mut sign = 1i64;
    let (mut pos, mut tok) = lex.next_tok()?;
    if tok == Tok::Minus {
        sign = -1;
        (pos, tok) = lex.next_tok()?;
    }
    let Tok::Int(n) = tok else {
        return Err(Error::ParseError { pos, msg: "expected an integer".into() });
    };
    let num = if sign < 0 { -n } else { n };
    let (pos, tok) = lex.next_tok()?;
    match tok {
        Tok::End => Ok(ctx.elt_from_scalar(scalar.from_bigint(&num))),
        Tok::Slash => {
            let (pos, tok) = lex.next_tok()?;
            let Tok::Int(d) = tok else {
                return Err(Error::ParseError { pos, msg: "expected a denominator".into() });
            };
            let (pos, tok) = lex.next_tok()?;
            if tok != Tok::End {
                return Err(Error::ParseError { pos, msg: "trailing input".into() });
            }
            let numer = ctx.elt_from_scalar(scalar.from_bigint(&num));
            let denom = ctx.elt_from_scalar(scalar.from_bigint(&d));
            let dinv = denom.inv().map_err(|_| Error::ParseError {
                pos,
                msg: "denominator is not a unit".into(),
            })?;
            Ok(&numer * &dinv)
        }
        other => Err(Error::ParseError { pos, msg: format!("trailing input {other:?}") }),
    }
}
