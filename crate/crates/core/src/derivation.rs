//! The derivation `D0` and the family of multiplied derivations `a·D0`.
//!
//! `D0(a_n) = n b_n`, `D0(b_n) = n a_n`. Every `a·D0` is again a derivation,
//! and the family is closed under the commutator:
//! `[a·D0, b·D0] = (a·D0(b) - b·D0(a))·D0`.

use serde::{Deserialize, Serialize};

use crate::basis::{BasisSymbol, Kind};
use crate::element::Element;
use crate::rational::Rational;

/// `D0`, extended linearly.
pub fn d0(x: &Element) -> Element {
    Element::from_terms(x.terms().filter(|(s, _)| s.index() > 0).map(|(s, c)| {
        let n = s.index();
        let image = match s.kind() {
            Kind::A => BasisSymbol::b(n),
            Kind::B => BasisSymbol::a(n),
        };
        (c * Rational::from_integer(n.into()), image)
    }))
}

/// The derivation `a·D0`, stored as its multiplier `a`. `D0` itself is the
/// multiplier `b_0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiplierDerivation {
    pub multiplier: Element,
}

impl MultiplierDerivation {
    pub fn new(multiplier: Element) -> Self {
        MultiplierDerivation { multiplier }
    }

    pub fn d0() -> Self {
        MultiplierDerivation::new(Element::one())
    }

    /// `a·D0(x)`: differentiate first, then multiply.
    pub fn apply(&self, x: &Element) -> Element {
        self.multiplier.product(&d0(x))
    }

    /// The commutator `[self, other]`, which is again of the form `c·D0`.
    pub fn bracket(&self, other: &MultiplierDerivation) -> MultiplierDerivation {
        let (a, b) = (&self.multiplier, &other.multiplier);
        MultiplierDerivation::new(&a.product(&d0(b)) - &b.product(&d0(a)))
    }

    /// `D(xy) - D(x)y - xD(y)`; zero exactly when the Leibniz rule holds on
    /// this pair.
    pub fn leibniz_residual(&self, x: &Element, y: &Element) -> Element {
        let whole = self.apply(&x.product(y));
        let left = self.apply(x).product(y);
        let right = x.product(&self.apply(y));
        &(&whole - &left) - &right
    }
}

pub fn apply(d: &MultiplierDerivation, x: &Element) -> Element {
    d.apply(x)
}

pub fn derivation_bracket(d1: &MultiplierDerivation, d2: &MultiplierDerivation) -> MultiplierDerivation {
    d1.bracket(d2)
}

pub fn leibniz_residual(d: &MultiplierDerivation, x: &Element, y: &Element) -> Element {
    d.leibniz_residual(x, y)
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

    fn md(x: Element) -> MultiplierDerivation {
        MultiplierDerivation::new(x)
    }

    #[test]
    fn d0_on_basis() {
        assert_eq!(d0(&a(3)), b(3).scale(&from_i64(3)));
        assert!(d0(&b(0)).is_zero());
        let x = &a(1).scale(&ratio(1, 2)) + &b(5);
        let expected = &b(1).scale(&ratio(1, 2)) + &a(5).scale(&from_i64(5));
        assert_eq!(d0(&x), expected);
    }

    #[test]
    fn apply_examples() {
        assert_eq!(MultiplierDerivation::d0().apply(&a(4)), b(4).scale(&from_i64(4)));
        // a_1·D0(b_1) = a_1·a_1 = 1/2 b_2 - 1/2 b_0
        let expected = &b(2).scale(&ratio(1, 2)) - &b(0).scale(&ratio(1, 2));
        assert_eq!(md(a(1)).apply(&b(1)), expected);
        assert!(md(&a(3) + &b(2)).apply(&b(0)).is_zero());
    }

    #[test]
    fn bracket_examples() {
        let x = &a(2) - &b(3).scale(&ratio(1, 3));
        assert!(md(x.clone()).bracket(&md(x)).multiplier.is_zero());
        assert_eq!(md(a(1)).bracket(&md(b(1))).multiplier, -b(0));
        assert_eq!(MultiplierDerivation::d0().bracket(&md(a(1))).multiplier, b(1));
    }

    /// Compares the bracket's action against the composition difference on
    /// low basis vectors.
    #[test]
    fn bracket_matches_commutator_of_actions() {
        let pairs = [(a(1), b(1)), (b(0), a(1)), (&a(2) + &b(1), b(3).scale(&ratio(-1, 2)))];
        for (p, q) in pairs {
            let (d1, d2) = (md(p), md(q));
            let br = d1.bracket(&d2);
            for s in BasisSymbol::up_to(5) {
                let s = Element::basis(s);
                let composed = &d1.apply(&d2.apply(&s)) - &d2.apply(&d1.apply(&s));
                assert_eq!(br.apply(&s), composed);
            }
        }
    }

    #[test]
    fn leibniz_examples() {
        let d = MultiplierDerivation::d0();
        assert!(d.leibniz_residual(&a(2), &a(3)).is_zero());
        assert!(md(a(1)).leibniz_residual(&b(2), &b(4)).is_zero());
        assert!(md(&a(5) - &b(2)).leibniz_residual(&b(0), &b(0)).is_zero());
    }

    #[test]
    fn multiplication_by_a_1_is_not_a_derivation() {
        let mul_by = |y: &Element| a(1).product(y);
        let (p, q) = (b(1), a(2));
        let residual = &(&mul_by(&p.product(&q)) - &mul_by(&p).product(&q)) - &p.product(&mul_by(&q));
        assert!(!residual.is_zero());
    }

    #[test]
    fn json_uses_multiplier_key() {
        let json = serde_json::to_string(&MultiplierDerivation::d0()).unwrap();
        assert_eq!(json, r#"{"multiplier":{"terms":[{"kind":"b","index":0,"coeff":"1/1"}]}}"#);
    }
}
