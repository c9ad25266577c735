use std::fmt;

use crate::basis::Kind;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// `a_n` or `b_m`; `a_0` is allowed and denotes zero.
    Symbol(Kind, u64),
    Rational(Rational),
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    /// `c * x` with a literal coefficient.
    Scalar(Rational, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    /// `x o y`
    Novikov(Box<Expr>, Box<Expr>),
    /// `[x, y]`
    Bracket(Box<Expr>, Box<Expr>),
    /// `D0(x)`
    D0(Box<Expr>),
    /// `der(a; x)`, the derivation `a·D0` applied to `x`
    Der(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Binding strength: 0 sums, 1 products, 2 Novikov, 3 operands.
    fn level(&self) -> u8 {
        match self {
            Expr::Sum(..) | Expr::Difference(..) | Expr::Neg(_) => 0,
            Expr::Product(..) | Expr::Scalar(..) => 1,
            Expr::Novikov(..) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min_level: u8) -> fmt::Result {
        if self.level() < min_level {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Symbol(kind, n) => write!(f, "{}_{n}", kind.as_str()),
            Expr::Rational(r) => f.write_str(&rational::to_display_string(r)),
            Expr::Neg(x) => {
                write!(f, "-")?;
                x.fmt_at(f, 1)
            }
            Expr::Sum(l, r) | Expr::Difference(l, r) => {
                l.fmt_at(f, 0)?;
                write!(f, " {} ", if matches!(self, Expr::Sum(..)) { '+' } else { '-' })?;
                r.fmt_at(f, 1)
            }
            Expr::Scalar(c, x) => {
                write!(f, "{} * ", rational::to_display_string(c))?;
                x.fmt_factor(f)
            }
            Expr::Product(l, r) => {
                l.fmt_product_operand(f, 1)?;
                write!(f, " * ")?;
                r.fmt_product_operand(f, 2)
            }
            Expr::Novikov(l, r) => {
                l.fmt_at(f, 3)?;
                write!(f, " o ")?;
                r.fmt_at(f, 3)
            }
            Expr::Bracket(l, r) => {
                write!(f, "[")?;
                l.fmt_at(f, 0)?;
                write!(f, ", ")?;
                r.fmt_at(f, 0)?;
                write!(f, "]")
            }
            Expr::D0(x) => {
                write!(f, "D0(")?;
                x.fmt_at(f, 0)?;
                write!(f, ")")
            }
            Expr::Der(a, x) => {
                write!(f, "der(")?;
                a.fmt_at(f, 0)?;
                write!(f, "; ")?;
                x.fmt_at(f, 0)?;
                write!(f, ")")
            }
        }
    }

    /// A bare rational next to `*` would read back as a scalar prefix, so it
    /// is parenthesized.
    fn fmt_product_operand(&self, f: &mut fmt::Formatter<'_>, min_level: u8) -> fmt::Result {
        match self {
            Expr::Rational(r) => write!(f, "({})", rational::to_display_string(r)),
            Expr::Scalar(..) if min_level == 2 => self.fmt_at(f, 1),
            _ => self.fmt_at(f, min_level),
        }
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rational(r) => write!(f, "({})", rational::to_display_string(r)),
            Expr::Scalar(..) => self.fmt_at(f, 1),
            _ => self.fmt_at(f, 2),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}
