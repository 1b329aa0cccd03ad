//! A small expression language over truncated series.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' int)? | '-' factor
//! atom   := int | 'q' | 'z' | '(' expr ')' | poch | qbin | name args?
//! poch   := 'poch' '(' mono ';' 'q' ('^' int)? ';' (int | 'inf') ')'
//! mono   := ('-')? ('z' ('^' int)?)? ('q' ('^' int)?)? | int
//! qbin   := 'qbin' '(' int ',' int ')'
//! ```
//!
//! `x^-1` is accepted as `1/x`. Builtin names: `dsum`, `dsum_ge(k)`,
//! `pent`, `sqtheta`, `geo(z^a, q^b)`.

mod eval;
mod lexer;
mod parser;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::fps::{Count, FpsError, PochSpec, ZPoly};

pub use eval::eval;
pub use parser::parse;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Poch(PochSpec),
    QBin(u32, u32),
    Named(String, Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QexprError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("integer {value} at byte {offset} is out of range")]
    Overflow { offset: usize, value: String },
    #[error("divisor has constant term {0}, which is not a unit")]
    NonUnitDivisor(ZPoly),
    #[error("invalid Pochhammer product: {0}")]
    InvalidPochSpec(&'static str),
    #[error("unknown name '{0}'")]
    UnknownName(String),
    #[error("bad arguments to '{name}': {reason}")]
    BadArguments { name: String, reason: &'static str },
    #[error(transparent)]
    Series(FpsError),
}

impl QexprError {
    /// Byte offset into the source, for errors raised while parsing.
    pub fn offset(&self) -> Option<usize> {
        match self {
            QexprError::Syntax { offset, .. } | QexprError::Overflow { offset, .. } => {
                Some(*offset)
            }
            _ => None,
        }
    }
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Var(Var::Q) => f.write_str("q"),
            Expr::Var(Var::Z) => f.write_str("z"),
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.write_at(f, 3)
            }
            Expr::Add(a, b) => binary(f, a, " + ", b, 1),
            Expr::Sub(a, b) => binary(f, a, " - ", b, 1),
            Expr::Mul(a, b) => binary(f, a, "*", b, 2),
            Expr::Div(a, b) => binary(f, a, "/", b, 2),
            Expr::Pow(e, n) => {
                e.write_at(f, 5)?;
                write!(f, "^{n}")
            }
            Expr::Poch(spec) => write_poch(f, spec),
            Expr::QBin(n, k) => write!(f, "qbin({n}, {k})"),
            Expr::Named(name, args) => {
                f.write_str(name)?;
                if !args.is_empty() {
                    f.write_str("(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        a.write_at(f, 0)?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

/// Left operands bind at the operator's level; right operands one tighter,
/// so the printed text re-parses to the same tree.
fn binary(f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, level: u8) -> fmt::Result {
    a.write_at(f, level)?;
    f.write_str(op)?;
    b.write_at(f, level + 1)
}

fn write_poch(f: &mut fmt::Formatter<'_>, spec: &PochSpec) -> fmt::Result {
    f.write_str("poch(")?;
    if spec.negative {
        f.write_str("-")?;
    }
    match (spec.a_zexp, spec.a_qpow) {
        (0, 0) => f.write_str("1")?,
        (e, p) => {
            match e {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{e}")?,
            }
            match p {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{p}")?,
            }
        }
    }
    match spec.step_qpow {
        1 => f.write_str("; q; ")?,
        s => write!(f, "; q^{s}; ")?,
    }
    match spec.count {
        Count::Infinite => f.write_str("inf)"),
        Count::Finite(n) => write!(f, "{n})"),
    }
}

/// Canonical text; parsing it gives back the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
