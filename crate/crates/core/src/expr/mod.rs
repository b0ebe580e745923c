//! Expression language for catalog observables.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ['-'] atom ['^' nat]
//! atom   := ident ['[' idx {',' idx} ']'] | nat ['/' nat] | '(' expr ')'
//!         | func '(' args ')'
//! ```
//!
//! Functions are `comm(a, b)`, `dot(a, b)`, `adj(a)`, `pow(a, n)` and
//! `conj(a)` / `conj(a; order=N)`. Indices are always lower and there is no
//! implicit summation; contracted quantities have their own names
//! ([`Shorthand`]).

mod eval;
mod lexer;
mod parser;

use std::fmt;

pub use eval::{EvalConfig, Evaluator};
pub use parser::parse;

use crate::observables::Observable;
use crate::scalars::Rational;

/// Source position, 1-based. Positions never take part in comparisons, so
/// reparsing a rendering gives an equal tree.
#[derive(Clone, Copy, Debug, Default)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

impl Eq for Span {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shorthand {
    /// `P^mu P_mu`
    P2,
    /// `W^mu W_mu`
    W2,
    /// `x^mu x_mu`
    X2Canonical,
    /// `X^mu X_mu`
    X2Hermitian,
    /// `alpha^mu alpha_mu`
    Alpha2,
    /// `1 / P^2`
    Minv2,
    /// `alpha^mu x_mu`
    AlphaX,
    /// `alpha^mu X_mu`
    AlphaXh,
    /// `alpha^mu C_mu`
    AlphaC,
    /// `1 - 2 alpha^mu x_mu + alpha^2 x^2`
    LambdaInv,
}

impl Shorthand {
    pub const ALL: [Shorthand; 10] = [
        Shorthand::P2,
        Shorthand::W2,
        Shorthand::X2Canonical,
        Shorthand::X2Hermitian,
        Shorthand::Alpha2,
        Shorthand::Minv2,
        Shorthand::AlphaX,
        Shorthand::AlphaXh,
        Shorthand::AlphaC,
        Shorthand::LambdaInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Shorthand::P2 => "P2",
            Shorthand::W2 => "W2",
            Shorthand::X2Canonical => "x2",
            Shorthand::X2Hermitian => "X2",
            Shorthand::Alpha2 => "alpha2",
            Shorthand::Minv2 => "Minv2",
            Shorthand::AlphaX => "ax",
            Shorthand::AlphaXh => "aX",
            Shorthand::AlphaC => "aC",
            Shorthand::LambdaInv => "lambdainv",
        }
    }

    pub fn from_name(s: &str) -> Option<Shorthand> {
        Shorthand::ALL.into_iter().find(|h| h.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Obs(Observable, Vec<usize>),
    Shorthand(Shorthand),
    /// Nonnegative rational literal.
    Num(Rational),
    I,
    Hbar,
    /// `alpha^mu`.
    Alpha(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Comm(Box<Expr>, Box<Expr>),
    Dot(Box<Expr>, Box<Expr>),
    Adj(Box<Expr>),
    Conj(Box<Expr>, Option<u32>, Span),
}

const PREC_SUM: u8 = 1;
const PREC_PRODUCT: u8 = 2;
const PREC_FACTOR: u8 = 3;
const PREC_ATOM: u8 = 4;

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => PREC_SUM,
            Expr::Mul(..) => PREC_PRODUCT,
            Expr::Neg(..) | Expr::Pow(..) => PREC_FACTOR,
            _ => PREC_ATOM,
        }
    }

    /// The same identity with one sign flipped at the top level: `+` and
    /// `-` swap, and so do the commutator and symmetric product. `None` when
    /// there is no operator to flip.
    pub fn sign_flipped(&self) -> Option<Expr> {
        Some(match self {
            Expr::Add(a, b) => Expr::Sub(a.clone(), b.clone()),
            Expr::Sub(a, b) => Expr::Add(a.clone(), b.clone()),
            Expr::Comm(a, b) => Expr::Dot(a.clone(), b.clone()),
            Expr::Dot(a, b) => Expr::Comm(a.clone(), b.clone()),
            Expr::Neg(a) => Expr::Neg(Box::new(a.sign_flipped()?)),
            Expr::Mul(a, b) => match b.sign_flipped() {
                Some(fb) => Expr::Mul(a.clone(), Box::new(fb)),
                None => Expr::Mul(Box::new(a.sign_flipped()?), b.clone()),
            },
            _ => return None,
        })
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Obs(o, idx) => {
                write!(f, "{o}")?;
                write_indices(f, idx)
            }
            Expr::Shorthand(h) => write!(f, "{}", h.name()),
            Expr::Num(r) => write!(f, "{r}"),
            Expr::I => write!(f, "i"),
            Expr::Hbar => write!(f, "hbar"),
            Expr::Alpha(mu) => write!(f, "alpha[{mu}]"),
            Expr::Add(a, b) => {
                a.write_at(f, PREC_SUM)?;
                write!(f, " + ")?;
                b.write_at(f, PREC_PRODUCT)
            }
            Expr::Sub(a, b) => {
                a.write_at(f, PREC_SUM)?;
                write!(f, " - ")?;
                b.write_at(f, PREC_PRODUCT)
            }
            Expr::Mul(a, b) => {
                a.write_at(f, PREC_PRODUCT)?;
                write!(f, "*")?;
                b.write_at(f, PREC_FACTOR)
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.write_at(f, PREC_ATOM)
            }
            Expr::Pow(a, n) => {
                match a.as_ref() {
                    Expr::Neg(inner) => {
                        write!(f, "-")?;
                        inner.write_at(f, PREC_ATOM)?;
                    }
                    other => other.write_at(f, PREC_ATOM)?,
                }
                write!(f, "^{n}")
            }
            Expr::Comm(a, b) => write!(f, "comm({a}, {b})"),
            Expr::Dot(a, b) => write!(f, "dot({a}, {b})"),
            Expr::Adj(a) => write!(f, "adj({a})"),
            Expr::Conj(a, None, _) => write!(f, "conj({a})"),
            Expr::Conj(a, Some(n), _) => write!(f, "conj({a}; order={n})"),
        }
    }
}

fn write_indices(f: &mut fmt::Formatter<'_>, idx: &[usize]) -> fmt::Result {
    if idx.is_empty() {
        return Ok(());
    }
    write!(f, "[")?;
    for (k, i) in idx.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{i}")?;
    }
    write!(f, "]")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
