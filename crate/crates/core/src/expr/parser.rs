//! Recursive-descent parser.
//!
//! Grammar, loosest to tightest binding (see the README for the full EBNF):
//!
//! ```text
//! expr   := term   { ("+" | "-") term }
//! term   := factor { ("*" | "/") factor }
//! factor := "-" factor | power
//! power  := atom [ "^" factor ]
//! atom   := number | "i" | "pi" | variable | function "(" expr ")" | "(" expr ")"
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-x^2`
//! parses as `-(x^2)` while `x^-2` is accepted.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::ast::{BinOp, Expr, Func};
use super::lexer::{tokenize, Tok};

/// Parse `source` into an expression whose free variables are restricted to
/// `variables`. The literals `i` and `pi` and the built-in function names are
/// reserved and resolved before variable lookup.
pub fn parse<T: Real>(source: &str, variables: &[&str]) -> Result<Expr<T>> {
    if source.trim().is_empty() {
        return Err(Error::Syntax {
            offset: 0,
            message: "empty expression".into(),
        });
    }
    let tokens = tokenize(source)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end_offset: source.len(),
        variables,
    };
    let expr = parser.expr()?;
    if let Some((_, offset)) = parser.peek() {
        return Err(Error::Syntax {
            offset,
            message: "unexpected trailing input".into(),
        });
    }
    Ok(expr)
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    end_offset: usize,
    variables: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<(Tok, usize)> {
        self.tokens.get(self.pos).cloned()
    }

    fn advance(&mut self) -> Option<(Tok, usize)> {
        let tok = self.tokens.get(self.pos).cloned();
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, o)| *o)
            .unwrap_or(self.end_offset)
    }

    fn expr<T: Real>(&mut self) -> Result<Expr<T>> {
        let mut lhs = self.term()?;
        while let Some((tok, _)) = self.peek() {
            let op = match tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => break,
            };
            self.advance();
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term<T: Real>(&mut self) -> Result<Expr<T>> {
        let mut lhs = self.factor()?;
        while let Some((tok, _)) = self.peek() {
            let op = match tok {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => break,
            };
            self.advance();
            let rhs = self.factor()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor<T: Real>(&mut self) -> Result<Expr<T>> {
        if let Some((Tok::Minus, _)) = self.peek() {
            self.advance();
            let inner = self.factor()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power<T: Real>(&mut self) -> Result<Expr<T>> {
        let base = self.atom()?;
        if let Some((Tok::Caret, _)) = self.peek() {
            self.advance();
            let exponent = self.factor()?;
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom<T: Real>(&mut self) -> Result<Expr<T>> {
        let offset = self.offset();
        let Some((tok, _)) = self.advance() else {
            return Err(Error::Syntax {
                offset,
                message: "unexpected end of input".into(),
            });
        };
        match tok {
            Tok::Num(value) => Ok(Expr::Const(Complex::new(T::of(value), T::zero()))),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Tok::Ident(name) => self.ident(name, offset),
            other => Err(Error::Syntax {
                offset,
                message: format!("unexpected token `{other:?}`"),
            }),
        }
    }

    fn ident<T: Real>(&mut self, name: String, offset: usize) -> Result<Expr<T>> {
        if name == "i" {
            return Ok(Expr::Const(Complex::i()));
        }
        if name == "pi" {
            return Ok(Expr::Const(Complex::new(T::PI(), T::zero())));
        }
        if let Some(func) = Func::from_name(&name) {
            return match self.peek() {
                Some((Tok::LParen, _)) => {
                    self.advance();
                    let arg = self.expr()?;
                    self.expect_rparen()?;
                    Ok(Expr::Call(func, Box::new(arg)))
                }
                _ => Err(Error::Syntax {
                    offset,
                    message: format!("function `{name}` requires an argument list"),
                }),
            };
        }
        if self.variables.contains(&name.as_str()) {
            return Ok(Expr::Var(name));
        }
        if matches!(self.peek(), Some((Tok::LParen, _))) {
            return Err(Error::UnknownFunction(name));
        }
        Err(Error::UnknownVariable(name))
    }

    fn expect_rparen(&mut self) -> Result<()> {
        let offset = self.offset();
        match self.advance() {
            Some((Tok::RParen, _)) => Ok(()),
            _ => Err(Error::Syntax {
                offset,
                message: "expected `)`".into(),
            }),
        }
    }
}
