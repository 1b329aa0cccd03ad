use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::lexer::{lex, Spanned, Tok};
use super::{Expr, QexprError, Var};
use crate::fps::{Count, PochSpec};

const ATOM_START: &[&str] = &[
    "integer", "'q'", "'z'", "'('", "'poch'", "'qbin'", "name", "'-'",
];

pub fn parse(text: &str) -> Result<Expr, QexprError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn at(&self) -> usize {
        self.toks[self.pos].at
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> QexprError {
        QexprError::Syntax {
            offset: self.at(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, label: &str) -> Result<(), QexprError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.error(&[label]))
        }
    }

    fn expect_end(&self) -> Result<(), QexprError> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => Err(self.error(&["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"])),
        }
    }

    fn is_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == name)
    }

    fn expr(&mut self) -> Result<Expr, QexprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, QexprError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, QexprError> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let negative = self.eat(&Tok::Minus);
        let at = self.at();
        let e = self.int()?;
        if negative {
            if e.is_one() {
                return Ok(Expr::Div(
                    Box::new(Expr::Int(BigInt::one())),
                    Box::new(base),
                ));
            }
            return Err(QexprError::Syntax {
                offset: at,
                expected: vec!["exponent 1 after '^-'".into()],
                found: format!("integer {e}"),
            });
        }
        Ok(Expr::Pow(Box::new(base), small(&e, at)?))
    }

    fn int(&mut self) -> Result<BigInt, QexprError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(v)
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn small_int(&mut self) -> Result<u32, QexprError> {
        let at = self.at();
        let v = self.int()?;
        small(&v, at)
    }

    fn atom(&mut self) -> Result<Expr, QexprError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr::Int(v))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "q" => Ok(Expr::Var(Var::Q)),
                    "z" => Ok(Expr::Var(Var::Z)),
                    "poch" => self.poch(),
                    "qbin" => self.qbin(),
                    _ => {
                        let mut args = Vec::new();
                        if self.eat(&Tok::LParen) {
                            loop {
                                args.push(self.expr()?);
                                if self.eat(&Tok::RParen) {
                                    break;
                                }
                                self.expect(Tok::Comma, "',' or ')'")?;
                            }
                        }
                        Ok(Expr::Named(name, args))
                    }
                }
            }
            _ => Err(self.error(ATOM_START)),
        }
    }

    fn qbin(&mut self) -> Result<Expr, QexprError> {
        self.expect(Tok::LParen, "'('")?;
        let n = self.small_int()?;
        self.expect(Tok::Comma, "','")?;
        let k = self.small_int()?;
        self.expect(Tok::RParen, "')'")?;
        Ok(Expr::QBin(n, k))
    }

    /// `poch(mono; q^s; n | inf)`
    fn poch(&mut self) -> Result<Expr, QexprError> {
        self.expect(Tok::LParen, "'('")?;
        let (negative, a_zexp, a_qpow) = self.mono()?;
        self.expect(Tok::Semi, "';'")?;
        if !self.is_ident("q") {
            return Err(self.error(&["'q'"]));
        }
        self.bump();
        let step = if self.eat(&Tok::Caret) {
            self.small_int()?
        } else {
            1
        };
        self.expect(Tok::Semi, "';'")?;
        let count = if self.is_ident("inf") {
            self.bump();
            Count::Infinite
        } else if matches!(self.peek(), Tok::Int(_)) {
            Count::Finite(self.small_int()? as usize)
        } else {
            return Err(self.error(&["integer", "'inf'"]));
        };
        self.expect(Tok::RParen, "')'")?;
        Ok(Expr::Poch(PochSpec::new(
            negative,
            a_zexp as usize,
            a_qpow as usize,
            step as usize,
            count,
        )))
    }

    /// `['-'] (1 | [z[^e]] [q[^p]])`, also accepting the run-together `zq`.
    fn mono(&mut self) -> Result<(bool, u32, u32), QexprError> {
        let negative = self.eat(&Tok::Minus);
        if let Tok::Int(v) = self.peek().clone() {
            if v.is_one() {
                self.bump();
                return Ok((negative, 0, 0));
            }
            return Err(self.error(&["1", "'z'", "'q'"]));
        }
        let mut zexp = 0;
        let mut qexp = 0;
        let mut seen = false;
        if self.is_ident("zq") {
            self.bump();
            zexp = 1;
            seen = true;
            qexp = if self.eat(&Tok::Caret) {
                self.small_int()?
            } else {
                1
            };
        } else {
            if self.is_ident("z") {
                self.bump();
                zexp = if self.eat(&Tok::Caret) {
                    self.small_int()?
                } else {
                    1
                };
                seen = true;
                self.eat(&Tok::Star);
            }
            if self.is_ident("q") {
                self.bump();
                qexp = if self.eat(&Tok::Caret) {
                    self.small_int()?
                } else {
                    1
                };
                seen = true;
            }
        }
        if !seen {
            return Err(self.error(&["1", "'z'", "'q'"]));
        }
        Ok((negative, zexp, qexp))
    }
}

fn small(v: &BigInt, at: usize) -> Result<u32, QexprError> {
    v.to_u32().ok_or(QexprError::Overflow {
        offset: at,
        value: v.to_string(),
    })
}
