use num_rational::Ratio;

use super::lexer::{tokenize, Tok, Token};
use super::{Expr, Shorthand, Span};
use crate::error::{Error, Result};
use crate::observables::Observable;

/// Parses one expression; the whole input must be consumed.
pub fn parse(src: &str) -> Result<Expr> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    p.expect(Tok::Eof, &["`+`", "`-`", "`*`", "`^`", "end of input"])?;
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

const ATOM_START: &[&str] = &["`-`", "identifier", "number", "`(`"];

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, t: &Token, expected: &[&str]) -> Error {
        Error::Parse {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn error(&self, expected: &[&str]) -> Error {
        self.error_at(self.peek(), expected)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<Token> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn expect_sym(&mut self, tok: Tok) -> Result<Token> {
        let want = format!("`{}`", tok.symbol());
        self.expect(tok, &[want.as_str()])
    }

    fn nat(&mut self) -> Result<u64> {
        match self.peek().tok {
            Tok::Nat(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.error(&["number"])),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
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

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat(&Tok::Star) {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let negated = self.eat(&Tok::Minus);
        let mut e = self.atom()?;
        if negated {
            e = Expr::Neg(Box::new(e));
        }
        if self.eat(&Tok::Caret) {
            let n = self.exponent()?;
            e = Expr::Pow(Box::new(e), n);
        }
        Ok(e)
    }

    fn exponent(&mut self) -> Result<u32> {
        let t = self.peek().clone();
        let n = self.nat()?;
        u32::try_from(n).map_err(|_| self.error_at(&t, &["exponent below 2^32"]))
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Nat(n) => {
                self.bump();
                let num = *n as i128;
                if self.eat(&Tok::Slash) {
                    let dt = self.peek().clone();
                    let d = self.nat()?;
                    if d == 0 {
                        return Err(self.error_at(&dt, &["nonzero denominator"]));
                    }
                    Ok(Expr::Num(Ratio::new(num, d as i128)))
                } else {
                    Ok(Expr::Num(Ratio::from_integer(num)))
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, &["`)`", "`+`", "`-`", "`*`"])?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                self.ident(name.clone(), &t)
            }
            _ => Err(self.error(ATOM_START)),
        }
    }

    fn indices(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        if !self.eat(&Tok::LBracket) {
            return Ok(out);
        }
        loop {
            let t = self.peek().clone();
            let n = self.nat()?;
            if n > 3 {
                return Err(self.error_at(&t, &["index 0..3"]));
            }
            out.push(n as usize);
            if self.eat(&Tok::RBracket) {
                return Ok(out);
            }
            self.expect(Tok::Comma, &["`,`", "`]`"])?;
        }
    }

    fn arity_error(&self, t: &Token, name: &str, arity: usize) -> Error {
        let what = match arity {
            0 => format!("`{name}` without indices"),
            1 => format!("`{name}` with 1 index"),
            n => format!("`{name}` with {n} indices"),
        };
        self.error_at(t, &[what.as_str()])
    }

    fn ident(&mut self, name: String, t: &Token) -> Result<Expr> {
        if self.peek().tok == Tok::LParen {
            return self.call(&name, t);
        }
        let idx = self.indices()?;
        let plain = |e: Expr, this: &Self| {
            if idx.is_empty() {
                Ok(e)
            } else {
                Err(this.arity_error(t, &name, 0))
            }
        };
        match name.as_str() {
            "i" => return plain(Expr::I, self),
            "hbar" => return plain(Expr::Hbar, self),
            "alpha" => {
                return if idx.len() == 1 {
                    Ok(Expr::Alpha(idx[0]))
                } else {
                    Err(self.arity_error(t, "alpha", 1))
                }
            }
            _ => {}
        }
        if let Some(h) = Shorthand::from_name(&name) {
            return plain(Expr::Shorthand(h), self);
        }
        if let Ok(obs) = name.parse::<Observable>() {
            if idx.len() != obs.arity() {
                return Err(self.arity_error(t, &name, obs.arity()));
            }
            return Ok(Expr::Obs(obs, idx));
        }
        Err(self.error_at(
            t,
            &[
                "observable",
                "shorthand",
                "function",
                "`i`",
                "`hbar`",
                "`alpha`",
            ],
        ))
    }

    fn call(&mut self, name: &str, t: &Token) -> Result<Expr> {
        self.expect_sym(Tok::LParen)?;
        let e = match name {
            "comm" | "dot" => {
                let a = self.expr()?;
                self.expect(Tok::Comma, &["`,`"])?;
                let b = self.expr()?;
                let (a, b) = (Box::new(a), Box::new(b));
                if name == "comm" {
                    Expr::Comm(a, b)
                } else {
                    Expr::Dot(a, b)
                }
            }
            "adj" => Expr::Adj(Box::new(self.expr()?)),
            "pow" => {
                let a = self.expr()?;
                self.expect(Tok::Comma, &["`,`"])?;
                let n = self.exponent()?;
                Expr::Pow(Box::new(a), n)
            }
            "conj" => {
                let a = self.expr()?;
                let order = if self.eat(&Tok::Semicolon) {
                    match &self.peek().tok {
                        Tok::Ident(k) if k == "order" => {
                            self.bump();
                        }
                        _ => return Err(self.error(&["`order`"])),
                    }
                    self.expect_sym(Tok::Equals)?;
                    Some(self.exponent()?)
                } else {
                    None
                };
                Expr::Conj(
                    Box::new(a),
                    order,
                    Span {
                        line: t.line,
                        column: t.column,
                    },
                )
            }
            _ => return Err(self.error_at(t, &["`comm`", "`dot`", "`adj`", "`conj`", "`pow`"])),
        };
        self.expect(Tok::RParen, &["`)`"])?;
        Ok(e)
    }
}
