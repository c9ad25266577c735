//! Elements of the commutative associative algebra and its product.
//!
//! The product of basis vectors is
//!
//! ```text
//! a_m a_n = 1/2 (b_{m+n} - b_{m-n})
//! b_m b_n = 1/2 (b_{m+n} + b_{m-n})
//! a_m b_n = b_n a_m = 1/2 (a_{m+n} + a_{m-n})
//! ```
//!
//! with negative indices folded back by `b_{-m} = b_m` and `a_{-m} = -a_m`
//! (so `a_0 = 0`). Folding happens per generated term, before coefficients
//! are merged.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::{BasisSymbol, Kind};
use crate::rational::{self, Rational};

/// A finite linear combination of basis vectors with exact coefficients.
///
/// Canonical by construction: no zero coefficients are stored and iteration
/// follows the canonical term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "ElementJson", try_from = "ElementJson")]
pub struct Element {
    terms: BTreeMap<BasisSymbol, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    /// `b_0`, the unity.
    pub fn one() -> Self {
        Element::basis(BasisSymbol::b(0))
    }

    pub fn basis(s: BasisSymbol) -> Self {
        Element::term(Rational::one(), s)
    }

    pub fn term(coeff: Rational, s: BasisSymbol) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(s, coeff);
        }
        Element { terms }
    }

    /// A scalar `c` embedded as `c·b_0`.
    pub fn scalar(c: Rational) -> Self {
        Element::term(c, BasisSymbol::b(0))
    }

    /// `a_n` for any signed `n`: `a_n` for `n >= 1`, `-a_{-n}` for `n <= -1`,
    /// zero for `n = 0`.
    pub fn canonical_a(n: i64) -> Self {
        let mut acc = Accumulator::default();
        acc.push(Kind::A, n as i128, Rational::one());
        acc.finish()
    }

    /// `b_{|m|}`.
    pub fn canonical_b(m: i64) -> Self {
        let mut acc = Accumulator::default();
        acc.push(Kind::B, m as i128, Rational::one());
        acc.finish()
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, BasisSymbol)>,
    {
        let mut acc = Accumulator::default();
        for (c, s) in terms {
            acc.push(s.kind(), s.index() as i128, c);
        }
        acc.finish()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (ascending index, `b` before `a`).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&BasisSymbol, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &BasisSymbol) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn max_index(&self) -> Option<u64> {
        self.terms.keys().map(|s| s.index()).max()
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(s, v)| (*s, v * c)).collect() }
    }

    fn add_scaled(&mut self, other: &Element, sign: &Rational) {
        for (s, c) in &other.terms {
            let v = self.terms.entry(*s).or_insert_with(Rational::zero);
            *v += c * sign;
            if v.is_zero() {
                self.terms.remove(s);
            }
        }
    }

    /// The product of the algebra, extended bilinearly from the basis table.
    pub fn product(&self, other: &Element) -> Element {
        let mut acc = Accumulator::default();
        let half = rational::half();
        for (s, cs) in &self.terms {
            for (t, ct) in &other.terms {
                let c = cs * ct * &half;
                let (m, n) = (s.index() as i128, t.index() as i128);
                match (s.kind(), t.kind()) {
                    (Kind::A, Kind::A) => {
                        acc.push(Kind::B, m + n, c.clone());
                        acc.push(Kind::B, m - n, -c);
                    }
                    (Kind::B, Kind::B) => {
                        acc.push(Kind::B, m + n, c.clone());
                        acc.push(Kind::B, m - n, c);
                    }
                    (Kind::A, Kind::B) => {
                        acc.push(Kind::A, m + n, c.clone());
                        acc.push(Kind::A, m - n, c);
                    }
                    (Kind::B, Kind::A) => {
                        acc.push(Kind::A, n + m, c.clone());
                        acc.push(Kind::A, n - m, c);
                    }
                }
            }
        }
        acc.finish()
    }

    /// Human-readable form, highest index first, e.g. `1/2*b_5 - 1/2*b_1`.
    pub fn pretty(&self) -> String {
        self.to_string()
    }
}

/// `x(yz) - (xy)z`.
pub fn associator(x: &Element, y: &Element, z: &Element) -> Element {
    &x.product(&y.product(z)) - &x.product(y).product(z)
}

/// Collects signed-index terms, folding `b_{-m} = b_m`, `a_{-m} = -a_m` and
/// `a_0 = 0` before merging coefficients.
#[derive(Default)]
pub(crate) struct Accumulator {
    terms: BTreeMap<BasisSymbol, Rational>,
}

impl Accumulator {
    pub(crate) fn push(&mut self, kind: Kind, index: i128, coeff: Rational) {
        let (index, coeff) = match kind {
            Kind::B => (index.unsigned_abs(), coeff),
            Kind::A if index < 0 => (index.unsigned_abs(), -coeff),
            Kind::A => (index as u128, coeff),
        };
        let index = u64::try_from(index).expect("basis index exceeds u64");
        let Some(s) = BasisSymbol::new(kind, index) else {
            return;
        };
        *self.terms.entry(s).or_insert_with(Rational::zero) += coeff;
    }

    pub(crate) fn finish(mut self) -> Element {
        self.terms.retain(|_, c| !c.is_zero());
        Element { terms: self.terms }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if magnitude.is_one() {
                write!(f, "{s}")?;
            } else {
                write!(f, "{}*{s}", rational::to_display_string(&magnitude))?;
            }
        }
        Ok(())
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element { terms: self.terms.iter().map(|(s, c)| (*s, -c)).collect() }
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.product(rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Element {
            type Output = Element;
            fn $f(self, rhs: Element) -> Element {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}

impl From<BasisSymbol> for Element {
    fn from(s: BasisSymbol) -> Self {
        Element::basis(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementJsonError {
    #[error("unknown basis kind `{0}` (expected \"a\" or \"b\")")]
    UnknownKind(String),
    #[error(transparent)]
    Coefficient(#[from] rational::RationalParseError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub kind: String,
    pub index: u64,
    pub coeff: String,
}

impl From<Element> for ElementJson {
    fn from(e: Element) -> Self {
        ElementJson {
            terms: e
                .terms
                .iter()
                .map(|(s, c)| TermJson {
                    kind: s.kind().as_str().to_string(),
                    index: s.index(),
                    coeff: rational::to_exact_string(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<ElementJson> for Element {
    type Error = ElementJsonError;

    fn try_from(json: ElementJson) -> Result<Self, Self::Error> {
        let mut acc = Accumulator::default();
        for t in json.terms {
            let kind = match t.kind.as_str() {
                "a" => Kind::A,
                "b" => Kind::B,
                other => return Err(ElementJsonError::UnknownKind(other.to_string())),
            };
            acc.push(kind, t.index as i128, rational::parse_rational(&t.coeff)?);
        }
        Ok(acc.finish())
    }
}
