use thiserror::Error;

use super::Expr;
use crate::basis::{BasisSymbol, Kind};
use crate::derivation::{d0, MultiplierDerivation};
use crate::element::Element;
use crate::novikov::{circ, lie_bracket};
use crate::realization::{phi, t_circ, FunctionRepr, RangeError};
use crate::MAX_INDEX;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("intermediate result reaches index {index}, above the limit {MAX_INDEX}")]
    IndexLimit { index: u64 },
    #[error(transparent)]
    Range(#[from] RangeError),
}

fn guard(x: Element) -> Result<Element, EvalError> {
    match x.max_index() {
        Some(index) if index > MAX_INDEX => Err(EvalError::IndexLimit { index }),
        _ => Ok(x),
    }
}

fn guard_fn(f: FunctionRepr) -> Result<FunctionRepr, EvalError> {
    match f.max_index() {
        Some(index) if index > MAX_INDEX => Err(EvalError::IndexLimit { index }),
        _ => Ok(f),
    }
}

fn symbol(kind: Kind, n: u64) -> Element {
    BasisSymbol::new(kind, n).map_or_else(Element::zero, Element::basis)
}

/// Evaluates in the algebra: `*` is the product, `o` and `[,]` use `param`
/// as the Novikov parameter.
pub fn evaluate(e: &Expr, param: &Element) -> Result<Element, EvalError> {
    let ev = |x: &Expr| evaluate(x, param);
    let out = match e {
        Expr::Symbol(kind, n) => symbol(*kind, *n),
        Expr::Rational(c) => Element::scalar(c.clone()),
        Expr::Neg(x) => -ev(x)?,
        Expr::Sum(l, r) => &ev(l)? + &ev(r)?,
        Expr::Difference(l, r) => &ev(l)? - &ev(r)?,
        Expr::Scalar(c, x) => ev(x)?.scale(c),
        Expr::Product(l, r) => ev(l)?.product(&ev(r)?),
        Expr::Novikov(l, r) => circ(&ev(l)?, &ev(r)?, param),
        Expr::Bracket(l, r) => lie_bracket(&ev(l)?, &ev(r)?, param),
        Expr::D0(x) => d0(&ev(x)?),
        Expr::Der(a, x) => MultiplierDerivation::new(ev(a)?).apply(&ev(x)?),
    };
    guard(out)
}

/// Evaluates the same tree on the function side: leaves go through `phi`,
/// `*` is the pointwise product, `D0` is `d/dx`.
pub fn evaluate_function(e: &Expr, param: &FunctionRepr) -> Result<FunctionRepr, EvalError> {
    let ev = |x: &Expr| evaluate_function(x, param);
    let out = match e {
        Expr::Symbol(kind, n) => phi(&symbol(*kind, *n)),
        Expr::Rational(c) => FunctionRepr::one().scale(c),
        Expr::Neg(x) => FunctionRepr::zero().sub(&ev(x)?),
        Expr::Sum(l, r) => ev(l)?.add(&ev(r)?),
        Expr::Difference(l, r) => ev(l)?.sub(&ev(r)?),
        Expr::Scalar(c, x) => ev(x)?.scale(c),
        Expr::Product(l, r) => ev(l)?.t_mul(&ev(r)?),
        Expr::Novikov(l, r) => t_circ(&ev(l)?, &ev(r)?, param),
        Expr::Bracket(l, r) => {
            let (f, g) = (ev(l)?, ev(r)?);
            t_circ(&f, &g, param).sub(&t_circ(&g, &f, param))
        }
        Expr::D0(x) => ev(x)?.t_derivative(),
        Expr::Der(a, x) => ev(a)?.t_mul(&ev(x)?.t_derivative()),
    };
    guard_fn(out)
}

/// Floating-point value of the tree at `x`, multiplying evaluated factors
/// pointwise. Derivatives are taken exactly on the function side and then
/// evaluated.
pub fn evaluate_numeric(e: &Expr, param: &FunctionRepr, x: f64) -> Result<f64, EvalError> {
    let ev = |y: &Expr| evaluate_numeric(y, param, x);
    let deriv = |y: &Expr| -> Result<f64, EvalError> { Ok(evaluate_function(y, param)?.t_derivative().eval(x)?) };
    Ok(match e {
        Expr::Symbol(..) | Expr::Rational(_) => evaluate_function(e, param)?.eval(x)?,
        Expr::Neg(y) => -ev(y)?,
        Expr::Sum(l, r) => ev(l)? + ev(r)?,
        Expr::Difference(l, r) => ev(l)? - ev(r)?,
        Expr::Scalar(c, y) => num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN) * ev(y)?,
        Expr::Product(l, r) => ev(l)? * ev(r)?,
        Expr::Novikov(l, r) => ev(l)? * param.eval(x)? * deriv(r)?,
        Expr::Bracket(l, r) => {
            let p = param.eval(x)?;
            ev(l)? * p * deriv(r)? - ev(r)? * p * deriv(l)?
        }
        Expr::D0(y) => deriv(y)?,
        Expr::Der(a, y) => ev(a)? * deriv(y)?,
    })
}
