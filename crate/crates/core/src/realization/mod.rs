//! The algebra spanned by `sinh(nx)` (`n >= 1`) and `cosh(mx)` (`m >= 0`,
//! with `cosh(0x) = 1`) under pointwise multiplication, and the relabeling
//! `phi: a_n -> sinh(nx), b_m -> cosh(mx)` from [`Element`].
//!
//! Functions are kept as exact coefficient tables so that transported
//! identities compare as data. [`FunctionRepr::eval`] gives the floating-point
//! value for numeric cross-checks.

mod independence;
mod iso;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::{BasisSymbol, Kind};
use crate::element::{Element, ElementJsonError};
use crate::rational::{self, Rational};

pub use independence::{numeric_rank_independence, vandermonde_independence, RankError, PIVOT_THRESHOLD};
pub use iso::{check_isomorphism, IsoCheck, IsoConfig, IsoFailure, IsoReport, NumericWitness, DEFAULT_SAMPLES};

/// Largest `index·|x|` accepted by [`FunctionRepr::eval`].
pub const EVAL_GUARD: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("sample x = {x} with index {index} exceeds the evaluation guard index·|x| <= 30")]
pub struct RangeError {
    pub x: f64,
    pub index: u64,
}

/// `Σ s_n sinh(nx) + Σ c_m cosh(mx)` with exact coefficients and no zero
/// entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "FunctionReprJson", try_from = "FunctionReprJson")]
pub struct FunctionRepr {
    sinh_terms: BTreeMap<u64, Rational>,
    cosh_terms: BTreeMap<u64, Rational>,
}

impl FunctionRepr {
    pub fn zero() -> Self {
        FunctionRepr::default()
    }

    /// The constant function 1, i.e. `cosh(0x)`.
    pub fn one() -> Self {
        FunctionRepr::cosh(0)
    }

    pub fn sinh(n: u64) -> Self {
        let mut f = FunctionRepr::default();
        f.push_sinh(n as i128, Rational::one());
        f
    }

    pub fn cosh(m: u64) -> Self {
        let mut f = FunctionRepr::default();
        f.push_cosh(m as i128, Rational::one());
        f
    }

    pub fn is_zero(&self) -> bool {
        self.sinh_terms.is_empty() && self.cosh_terms.is_empty()
    }

    pub fn sinh_terms(&self) -> &BTreeMap<u64, Rational> {
        &self.sinh_terms
    }

    pub fn cosh_terms(&self) -> &BTreeMap<u64, Rational> {
        &self.cosh_terms
    }

    pub fn max_index(&self) -> Option<u64> {
        self.sinh_terms.keys().chain(self.cosh_terms.keys()).copied().max()
    }

    /// Adds `c·sinh(kx)`, folding `sinh(-kx) = -sinh(kx)` and `sinh(0) = 0`.
    fn push_sinh(&mut self, k: i128, c: Rational) {
        if k == 0 {
            return;
        }
        let c = if k < 0 { -c } else { c };
        let k = u64::try_from(k.unsigned_abs()).expect("sinh index exceeds u64");
        add_entry(&mut self.sinh_terms, k, c);
    }

    /// Adds `c·cosh(kx)`, folding `cosh(-kx) = cosh(kx)`.
    fn push_cosh(&mut self, k: i128, c: Rational) {
        let k = u64::try_from(k.unsigned_abs()).expect("cosh index exceeds u64");
        add_entry(&mut self.cosh_terms, k, c);
    }

    pub fn scale(&self, c: &Rational) -> FunctionRepr {
        if c.is_zero() {
            return FunctionRepr::zero();
        }
        FunctionRepr {
            sinh_terms: self.sinh_terms.iter().map(|(k, v)| (*k, v * c)).collect(),
            cosh_terms: self.cosh_terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn add(&self, other: &FunctionRepr) -> FunctionRepr {
        let mut out = self.clone();
        for (k, c) in &other.sinh_terms {
            add_entry(&mut out.sinh_terms, *k, c.clone());
        }
        for (k, c) in &other.cosh_terms {
            add_entry(&mut out.cosh_terms, *k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FunctionRepr) -> FunctionRepr {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Pointwise product, via the product-to-sum identities
    ///
    /// ```text
    /// sinh(mx) sinh(nx) = 1/2 [cosh((m+n)x) - cosh((m-n)x)]
    /// cosh(mx) cosh(nx) = 1/2 [cosh((m+n)x) + cosh((m-n)x)]
    /// sinh(mx) cosh(nx) = 1/2 [sinh((m+n)x) + sinh((m-n)x)]
    /// ```
    pub fn t_mul(&self, other: &FunctionRepr) -> FunctionRepr {
        let mut out = FunctionRepr::default();
        let half = rational::half();
        for (&m, p) in &self.sinh_terms {
            let m = m as i128;
            for (&n, q) in &other.sinh_terms {
                let (n, c) = (n as i128, p * q * &half);
                out.push_cosh(m + n, c.clone());
                out.push_cosh(m - n, -c);
            }
            for (&n, q) in &other.cosh_terms {
                let (n, c) = (n as i128, p * q * &half);
                out.push_sinh(m + n, c.clone());
                out.push_sinh(m - n, c);
            }
        }
        for (&m, p) in &self.cosh_terms {
            let m = m as i128;
            for (&n, q) in &other.sinh_terms {
                // cosh(mx) sinh(nx) = sinh(nx) cosh(mx)
                let (n, c) = (n as i128, p * q * &half);
                out.push_sinh(n + m, c.clone());
                out.push_sinh(n - m, c);
            }
            for (&n, q) in &other.cosh_terms {
                let (n, c) = (n as i128, p * q * &half);
                out.push_cosh(m + n, c.clone());
                out.push_cosh(m - n, c);
            }
        }
        out.prune();
        out
    }

    /// `d/dx`: `sinh(nx) -> n cosh(nx)`, `cosh(mx) -> m sinh(mx)`.
    pub fn t_derivative(&self) -> FunctionRepr {
        let mut out = FunctionRepr::default();
        for (&n, c) in &self.sinh_terms {
            out.push_cosh(n as i128, c * Rational::from_integer(n.into()));
        }
        for (&m, c) in &self.cosh_terms {
            out.push_sinh(m as i128, c * Rational::from_integer(m.into()));
        }
        out.prune();
        out
    }

    /// Floating-point value at `x`. Every term must satisfy `index·|x| <= 30`.
    pub fn eval(&self, x: f64) -> Result<f64, RangeError> {
        if let Some(index) = self.max_index() {
            if index as f64 * x.abs() > EVAL_GUARD {
                return Err(RangeError { x, index });
            }
        }
        // s·sinh(nx) + c·cosh(nx) = (c+s)/2·e^{nx} + (c-s)/2·e^{-nx}, with the
        // combined coefficients formed exactly. Terms like cosh(nx) - sinh(nx)
        // then cost nothing instead of losing e^{n|x|} ulps to cancellation.
        let mut sum = NeumaierSum::default();
        let zero = Rational::zero();
        let half = crate::rational::half();
        let indices: std::collections::BTreeSet<u64> =
            self.sinh_terms.keys().chain(self.cosh_terms.keys()).copied().collect();
        for n in indices {
            let s = self.sinh_terms.get(&n).unwrap_or(&zero);
            let c = self.cosh_terms.get(&n).unwrap_or(&zero);
            if n == 0 {
                sum.add(to_f64(c));
                continue;
            }
            let t = n as f64 * x;
            sum.add(to_f64(&((c + s) * &half)) * t.exp());
            sum.add(to_f64(&((c - s) * &half)) * (-t).exp());
        }
        Ok(sum.value())
    }

    fn prune(&mut self) {
        self.sinh_terms.retain(|_, c| !c.is_zero());
        self.cosh_terms.retain(|_, c| !c.is_zero());
    }

    /// Terms in canonical order: ascending index, `cosh` before `sinh`.
    fn ordered_terms(&self) -> Vec<(Kind, u64, &Rational)> {
        let mut out: Vec<_> = self
            .cosh_terms
            .iter()
            .map(|(k, c)| (Kind::B, *k, c))
            .chain(self.sinh_terms.iter().map(|(k, c)| (Kind::A, *k, c)))
            .collect();
        out.sort_by_key(|(kind, k, _)| (*k, *kind));
        out
    }
}

fn add_entry(map: &mut BTreeMap<u64, Rational>, k: u64, c: Rational) {
    let v = map.entry(k).or_insert_with(Rational::zero);
    *v += c;
    if v.is_zero() {
        map.remove(&k);
    }
}

fn to_f64(c: &Rational) -> f64 {
    c.to_f64().expect("coefficient not representable as f64")
}

/// Compensated summation; the terms of an evaluated product can be large and
/// of opposite sign.
#[derive(Default)]
struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.compensation += (self.sum - t) + v;
        } else {
            self.compensation += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// `a_n -> sinh(nx)`, `b_m -> cosh(mx)`, coefficients unchanged.
pub fn phi(x: &Element) -> FunctionRepr {
    let mut out = FunctionRepr::default();
    for (s, c) in x.terms() {
        match s.kind() {
            Kind::A => out.push_sinh(s.index() as i128, c.clone()),
            Kind::B => out.push_cosh(s.index() as i128, c.clone()),
        }
    }
    out
}

pub fn phi_inv(f: &FunctionRepr) -> Element {
    let sinh = f.sinh_terms.iter().map(|(&n, c)| (c.clone(), BasisSymbol::a(n)));
    let cosh = f.cosh_terms.iter().map(|(&m, c)| (c.clone(), BasisSymbol::b(m)));
    Element::from_terms(sinh.chain(cosh))
}

pub fn t_mul(f: &FunctionRepr, g: &FunctionRepr) -> FunctionRepr {
    f.t_mul(g)
}

pub fn t_derivative(f: &FunctionRepr) -> FunctionRepr {
    f.t_derivative()
}

pub fn eval(f: &FunctionRepr, x: f64) -> Result<f64, RangeError> {
    f.eval(x)
}

/// The Novikov product on the function side, `f·p·(dg/dx)`.
pub fn t_circ(f: &FunctionRepr, g: &FunctionRepr, p: &FunctionRepr) -> FunctionRepr {
    f.t_mul(p).t_mul(&g.t_derivative())
}

impl fmt::Display for FunctionRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.ordered_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (kind, k, c)) in terms.into_iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let name = match kind {
                Kind::A => "sinh",
                Kind::B => "cosh",
            };
            let arg = if k == 1 { "x".to_string() } else { format!("{k}x") };
            match (kind, k, magnitude.is_one()) {
                (Kind::B, 0, _) => f.write_str(&rational::to_display_string(&magnitude))?,
                (_, _, true) => write!(f, "{name}({arg})")?,
                (_, _, false) => write!(f, "{}*{name}({arg})", rational::to_display_string(&magnitude))?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionReprJson {
    pub terms: Vec<FunctionTermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionTermJson {
    pub kind: String,
    pub index: u64,
    pub coeff: String,
}

impl From<FunctionRepr> for FunctionReprJson {
    fn from(f: FunctionRepr) -> Self {
        let terms = f
            .ordered_terms()
            .into_iter()
            .map(|(kind, index, c)| FunctionTermJson {
                kind: if kind == Kind::A { "sinh" } else { "cosh" }.to_string(),
                index,
                coeff: rational::to_exact_string(c),
            })
            .collect();
        FunctionReprJson { terms }
    }
}

impl TryFrom<FunctionReprJson> for FunctionRepr {
    type Error = ElementJsonError;

    fn try_from(json: FunctionReprJson) -> Result<Self, Self::Error> {
        let mut out = FunctionRepr::default();
        for t in json.terms {
            let c = rational::parse_rational(&t.coeff)?;
            match t.kind.as_str() {
                "sinh" => out.push_sinh(t.index as i128, c),
                "cosh" => out.push_cosh(t.index as i128, c),
                other => return Err(ElementJsonError::UnknownKind(other.to_string())),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_i64, ratio};

    fn a(n: u64) -> Element {
        Element::basis(BasisSymbol::a(n))
    }

    fn b(m: u64) -> Element {
        Element::basis(BasisSymbol::b(m))
    }

    #[test]
    fn phi_relabels() {
        assert_eq!(phi(&b(0)), FunctionRepr::one());
        assert_eq!(phi(&a(3)), FunctionRepr::sinh(3));
        let x = &b(5).scale(&ratio(1, 2)) - &b(1).scale(&ratio(1, 2));
        let expected = FunctionRepr::cosh(5).scale(&ratio(1, 2)).sub(&FunctionRepr::cosh(1).scale(&ratio(1, 2)));
        assert_eq!(phi(&x), expected);
        assert_eq!(phi_inv(&phi(&x)), x);
    }

    #[test]
    fn product_to_sum_examples() {
        let expected = FunctionRepr::cosh(5).scale(&ratio(1, 2)).sub(&FunctionRepr::cosh(1).scale(&ratio(1, 2)));
        assert_eq!(FunctionRepr::sinh(2).t_mul(&FunctionRepr::sinh(3)), expected);
        let f = FunctionRepr::sinh(4).add(&FunctionRepr::cosh(2).scale(&ratio(-2, 3)));
        assert_eq!(FunctionRepr::one().t_mul(&f), f);
        let expected = FunctionRepr::cosh(2).scale(&ratio(1, 2)).add(&FunctionRepr::one().scale(&ratio(1, 2)));
        assert_eq!(FunctionRepr::cosh(1).t_mul(&FunctionRepr::cosh(1)), expected);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(FunctionRepr::sinh(3).t_derivative(), FunctionRepr::cosh(3).scale(&from_i64(3)));
        assert!(FunctionRepr::one().t_derivative().is_zero());
        assert_eq!(FunctionRepr::cosh(5).t_derivative(), FunctionRepr::sinh(5).scale(&from_i64(5)));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(FunctionRepr::one().eval(0.37).unwrap(), 1.0);
        assert_eq!(FunctionRepr::sinh(1).eval(0.0).unwrap(), 0.0);
        let f = phi(&(&a(2) * &a(3)));
        let lhs = f.eval(0.1).unwrap();
        let rhs = 0.2f64.sinh() * 0.3f64.sinh();
        assert!((lhs - rhs).abs() <= 1e-15, "{lhs} vs {rhs}");
    }

    #[test]
    fn eval_cancelling_pair() {
        // 3cosh(7x) - 3sinh(7x) = 3e^{-7x}
        let f = FunctionRepr::cosh(7).scale(&from_i64(3)).sub(&FunctionRepr::sinh(7).scale(&from_i64(3)));
        let want = 3.0 * (-9.1f64).exp();
        assert!((f.eval(1.3).unwrap() - want).abs() <= 1e-15 * want);
    }

    #[test]
    fn eval_guard() {
        let f = FunctionRepr::cosh(20);
        assert!(f.eval(1.5).is_ok());
        assert_eq!(f.eval(-1.6), Err(RangeError { x: -1.6, index: 20 }));
        assert!(FunctionRepr::zero().eval(1e6).is_ok());
    }

    #[test]
    fn display() {
        let f = phi(&(&(&b(2).scale(&ratio(1, 2)) + &b(0).scale(&ratio(1, 2))) - &a(1)));
        assert_eq!(f.to_string(), "1/2*cosh(2x) - sinh(x) + 1/2");
        assert_eq!(FunctionRepr::zero().to_string(), "0");
        assert_eq!(FunctionRepr::one().scale(&from_i64(-1)).to_string(), "-1");
    }

    #[test]
    fn json_mirrors_element_schema() {
        let f = phi(&(&a(1) + &b(1).scale(&ratio(3, 4))));
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"kind":"cosh","index":1,"coeff":"3/4"},{"kind":"sinh","index":1,"coeff":"1/1"}]}"#
        );
        assert_eq!(serde_json::from_str::<FunctionRepr>(&json).unwrap(), f);
        assert!(serde_json::from_str::<FunctionRepr>(r#"{"terms":[{"kind":"tanh","index":1,"coeff":"1"}]}"#).is_err());
    }
}
