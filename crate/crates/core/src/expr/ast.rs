//! Expression tree and precedence-aware printing.

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex;

use crate::scalar::Real;

/// Binary operators, in increasing binding strength `+- < */ < ^`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

/// Built-in functions. All take one argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Log,
    Sqrt,
    Atan,
    Abs,
    Re,
    Im,
    Step,
}

impl Func {
    pub fn name(&self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Atan => "atan",
            Func::Abs => "abs",
            Func::Re => "re",
            Func::Im => "im",
            Func::Step => "step",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "sqrt" => Func::Sqrt,
            "atan" => Func::Atan,
            "abs" => Func::Abs,
            "re" => Func::Re,
            "im" => Func::Im,
            "step" => Func::Step,
            _ => return None,
        })
    }

    /// Whether the function is complex-differentiable where defined.
    /// `abs`, `re`, `im`, and `step` are not and are rejected wherever
    /// holomorphy is required.
    pub fn is_analytic(&self) -> bool {
        !matches!(self, Func::Abs | Func::Re | Func::Im | Func::Step)
    }
}

/// A parsed expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr<T> {
    Const(Complex<T>),
    Var(String),
    Neg(Box<Expr<T>>),
    Bin(BinOp, Box<Expr<T>>, Box<Expr<T>>),
    Call(Func, Box<Expr<T>>),
}

impl<T: Real> Expr<T> {
    pub fn constant(re: T) -> Self {
        Expr::Const(Complex::new(re, T::zero()))
    }

    pub fn var(name: &str) -> Self {
        Expr::Var(name.to_string())
    }

    /// Free variables, sorted.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(name) => {
                out.insert(name.clone());
            }
            Expr::Neg(inner) | Expr::Call(_, inner) => inner.collect_vars(out),
            Expr::Bin(_, lhs, rhs) => {
                lhs.collect_vars(out);
                rhs.collect_vars(out);
            }
        }
    }

    /// The first non-analytic function node, if any.
    pub fn find_non_analytic(&self) -> Option<Func> {
        match self {
            Expr::Const(_) | Expr::Var(_) => None,
            Expr::Neg(inner) => inner.find_non_analytic(),
            Expr::Bin(_, lhs, rhs) => {
                lhs.find_non_analytic().or_else(|| rhs.find_non_analytic())
            }
            Expr::Call(func, inner) => {
                if func.is_analytic() {
                    inner.find_non_analytic()
                } else {
                    Some(*func)
                }
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Const(_) | Expr::Var(_) | Expr::Call(..) => 5,
            Expr::Bin(BinOp::Pow, ..) => 4,
            Expr::Neg(_) => 3,
            Expr::Bin(BinOp::Mul, ..) | Expr::Bin(BinOp::Div, ..) => 2,
            Expr::Bin(BinOp::Add, ..) | Expr::Bin(BinOp::Sub, ..) => 1,
        }
    }

    fn write(&self, out: &mut String) {
        match self {
            Expr::Const(c) => {
                if c.im == T::zero() {
                    out.push_str(&format!("{}", c.re));
                } else if c.re == T::zero() && c.im == T::one() {
                    out.push('i');
                } else {
                    // composite constant; reparses as an arithmetic expression
                    out.push_str(&format!("({}+{}*i)", c.re, c.im));
                }
            }
            Expr::Var(name) => out.push_str(name),
            Expr::Neg(inner) => {
                out.push('-');
                // unary minus binds tighter than * and / but looser than ^
                self.write_child(inner, inner.precedence() <= 3, out);
            }
            Expr::Bin(op, lhs, rhs) => {
                let prec = self.precedence();
                let (sym, left_paren, right_paren) = match op {
                    BinOp::Add => ("+", lhs.precedence() < prec, rhs.precedence() <= prec),
                    BinOp::Sub => ("-", lhs.precedence() < prec, rhs.precedence() <= prec),
                    BinOp::Mul => ("*", lhs.precedence() < prec, rhs.precedence() <= prec),
                    BinOp::Div => ("/", lhs.precedence() < prec, rhs.precedence() <= prec),
                    BinOp::Pow => ("^", lhs.precedence() <= prec, rhs.precedence() < prec),
                };
                self.write_child(lhs, left_paren, out);
                out.push_str(sym);
                self.write_child(rhs, right_paren, out);
            }
            Expr::Call(func, inner) => {
                out.push_str(func.name());
                out.push('(');
                inner.write(out);
                out.push(')');
            }
        }
    }

    fn write_child(&self, child: &Expr<T>, paren: bool, out: &mut String) {
        if paren {
            out.push('(');
            child.write(out);
            out.push(')');
        } else {
            child.write(out);
        }
    }
}

impl<T: Real> fmt::Display for Expr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.write(&mut out);
        f.write_str(&out)
    }
}
