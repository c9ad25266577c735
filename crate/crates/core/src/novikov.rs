//! The Novikov product `x ∘ y = x·a·D0(y)` for a parameter `a`, the adjoining
//! Lie bracket `[x, y] = x∘y - y∘x`, the closed-form tables at `a = b_0`, and
//! residual checkers for the Novikov, Hamilton and Jacobi identities.

use crate::basis::{BasisSymbol, Kind};
use crate::derivation::d0;
use crate::element::{Accumulator, Element};
use crate::rational::{self, Rational};

/// `x·(a·D0(y))`.
pub fn circ(x: &Element, y: &Element, a: &Element) -> Element {
    x.product(&a.product(&d0(y)))
}

/// `circ(x, y, a) - circ(y, x, a)`.
pub fn lie_bracket(x: &Element, y: &Element, a: &Element) -> Element {
    &circ(x, y, a) - &circ(y, x, a)
}

/// The factored form `a·(x·D0(y) - y·D0(x))` of the bracket.
pub fn factored_bracket(x: &Element, y: &Element, a: &Element) -> Element {
    a.product(&(&x.product(&d0(y)) - &y.product(&d0(x))))
}

/// `s ∘ t` at `a = b_0`, straight from the table
///
/// ```text
/// a_n ∘ a_m = m/2 (a_{n+m} + a_{n-m})
/// b_n ∘ b_m = m/2 (a_{n+m} + a_{m-n})
/// a_n ∘ b_m = m/2 (b_{n+m} - b_{n-m})
/// b_n ∘ a_m = m/2 (b_{n+m} + b_{n-m})
/// ```
pub fn closed_circ(s: BasisSymbol, t: BasisSymbol) -> Element {
    let (n, m) = (s.index() as i128, t.index() as i128);
    let c = rational::ratio(1, 2) * Rational::from_integer(m.into());
    let mut acc = Accumulator::default();
    match (s.kind(), t.kind()) {
        (Kind::A, Kind::A) => {
            acc.push(Kind::A, n + m, c.clone());
            acc.push(Kind::A, n - m, c);
        }
        (Kind::B, Kind::B) => {
            acc.push(Kind::A, n + m, c.clone());
            acc.push(Kind::A, m - n, c);
        }
        (Kind::A, Kind::B) => {
            acc.push(Kind::B, n + m, c.clone());
            acc.push(Kind::B, n - m, -c);
        }
        (Kind::B, Kind::A) => {
            acc.push(Kind::B, n + m, c.clone());
            acc.push(Kind::B, n - m, c);
        }
    }
    acc.finish()
}

/// `[s, t]` at `a = b_0`, straight from the table
///
/// ```text
/// [a_n, a_m] = (m-n)/2 a_{n+m} + (m+n)/2 a_{n-m}
/// [b_n, b_m] = (m-n)/2 a_{n+m} - (m+n)/2 a_{n-m}
/// [a_n, b_m] = (m-n)/2 b_{n+m} - (n+m)/2 b_{n-m}
/// [b_n, a_m] = (m-n)/2 b_{n+m} + (m+n)/2 b_{n-m}
/// ```
pub fn closed_bracket(s: BasisSymbol, t: BasisSymbol) -> Element {
    let (n, m) = (s.index() as i128, t.index() as i128);
    let half = |k: i128| rational::ratio(1, 2) * Rational::from_integer(k.into());
    let (first, second) = (half(m - n), half(m + n));
    let mut acc = Accumulator::default();
    match (s.kind(), t.kind()) {
        (Kind::A, Kind::A) => {
            acc.push(Kind::A, n + m, first);
            acc.push(Kind::A, n - m, second);
        }
        (Kind::B, Kind::B) => {
            acc.push(Kind::A, n + m, first);
            acc.push(Kind::A, n - m, -second);
        }
        (Kind::A, Kind::B) => {
            acc.push(Kind::B, n + m, first);
            acc.push(Kind::B, n - m, -second);
        }
        (Kind::B, Kind::A) => {
            acc.push(Kind::B, n + m, first);
            acc.push(Kind::B, n - m, second);
        }
    }
    acc.finish()
}

/// `x∘(y∘z) - (x∘y)∘z - y∘(x∘z) + (y∘x)∘z`; zero iff left symmetry holds on
/// the triple.
pub fn left_symmetry_residual(x: &Element, y: &Element, z: &Element, a: &Element) -> Element {
    let lhs = &circ(x, &circ(y, z, a), a) - &circ(&circ(x, y, a), z, a);
    let rhs = &circ(y, &circ(x, z, a), a) - &circ(&circ(y, x, a), z, a);
    &lhs - &rhs
}

/// `(x∘y)∘z - (x∘z)∘y`.
pub fn right_commutativity_residual(x: &Element, y: &Element, z: &Element, a: &Element) -> Element {
    &circ(&circ(x, y, a), z, a) - &circ(&circ(x, z, a), y, a)
}

/// The two Hamilton-operator conditions:
///
/// 1. `(x∘y)∘z - (x∘z)∘y`
/// 2. `(x∘y)∘z + z∘(x∘y) - (z∘y)∘x - x∘(z∘y)`
pub fn hamilton_residuals(x: &Element, y: &Element, z: &Element, a: &Element) -> (Element, Element) {
    let xy = circ(x, y, a);
    let zy = circ(z, y, a);
    let xy_z = circ(&xy, z, a);
    let first = &xy_z - &circ(&circ(x, z, a), y, a);
    let second = &(&(&xy_z + &circ(z, &xy, a)) - &circ(&zy, x, a)) - &circ(x, &zy, a);
    (first, second)
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
pub fn jacobi_residual(x: &Element, y: &Element, z: &Element, a: &Element) -> Element {
    let t1 = lie_bracket(&lie_bracket(x, y, a), z, a);
    let t2 = lie_bracket(&lie_bracket(y, z, a), x, a);
    let t3 = lie_bracket(&lie_bracket(z, x, a), y, a);
    &(&t1 + &t2) + &t3
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
    fn circ_examples() {
        assert_eq!(circ(&a(1), &a(2), &b(0)), &a(3) - &a(1));
        let x = &a(4) + &b(2);
        assert!(circ(&x, &b(0), &a(3)).is_zero());
        assert_eq!(circ(&b(0), &a(1), &a(1)), a(2).scale(&ratio(1, 2)));
    }

    #[test]
    fn closed_circ_examples() {
        let s = |k: u64| BasisSymbol::a(k);
        let t = |k: u64| BasisSymbol::b(k);
        assert_eq!(closed_circ(t(2), t(1)), (&a(3) - &a(1)).scale(&ratio(1, 2)));
        assert_eq!(closed_circ(s(1), t(2)), &b(3) - &b(1));
        assert_eq!(closed_circ(t(1), s(2)), &b(3) + &b(1));
    }

    #[test]
    fn bracket_examples() {
        let x = &a(2) - &b(1);
        assert!(lie_bracket(&x, &x, &a(1)).is_zero());
        let expected = &a(3).scale(&ratio(1, 2)) - &a(1).scale(&ratio(3, 2));
        assert_eq!(lie_bracket(&a(1), &a(2), &b(0)), expected);
        let expected = &a(3).scale(&ratio(1, 2)) + &a(1).scale(&ratio(3, 2));
        assert_eq!(lie_bracket(&b(1), &b(2), &b(0)), expected);
    }

    #[test]
    fn closed_bracket_examples() {
        let expected = &b(3).scale(&ratio(1, 2)) - &b(1).scale(&ratio(3, 2));
        assert_eq!(closed_bracket(BasisSymbol::a(1), BasisSymbol::b(2)), expected);
        assert_eq!(closed_bracket(BasisSymbol::b(2), BasisSymbol::a(2)), b(0).scale(&from_i64(2)));
        assert!(closed_bracket(BasisSymbol::a(3), BasisSymbol::a(3)).is_zero());
    }

    #[test]
    fn residual_examples() {
        let z = &a(3) + &b(1);
        assert!(left_symmetry_residual(&a(2), &a(2), &z, &a(1)).is_zero());
        assert!(left_symmetry_residual(&a(1), &b(1), &a(2), &b(0)).is_zero());
        assert!(left_symmetry_residual(&a(1), &b(2), &a(3), &a(1)).is_zero());

        assert!(right_commutativity_residual(&z, &a(2), &a(2), &b(3)).is_zero());
        assert!(right_commutativity_residual(&b(1), &a(2), &b(3), &b(0)).is_zero());
        assert!(right_commutativity_residual(&a(2), &a(1), &b(1), &a(2)).is_zero());

        let (h1, _) = hamilton_residuals(&a(4), &b(2), &b(2), &a(1));
        assert!(h1.is_zero());
        let (h1, h2) = hamilton_residuals(&a(1), &a(2), &a(3), &b(0));
        assert!(h1.is_zero() && h2.is_zero());
        let (h1, h2) = hamilton_residuals(&b(1), &a(1), &b(2), &a(1));
        assert!(h1.is_zero() && h2.is_zero());

        assert!(jacobi_residual(&z, &z, &a(1), &b(2)).is_zero());
        assert!(jacobi_residual(&a(1), &a(2), &b(1), &b(0)).is_zero());
        assert!(jacobi_residual(&a(1), &b(2), &b(3), &a(2)).is_zero());
    }

    #[test]
    fn right_commutativity_residual_is_not_vacuous() {
        // x ⋆ y = D0(x)·y is not right-commutative
        let star = |x: &Element, y: &Element| d0(x).product(y);
        let (x, y, z) = (a(1), a(2), b(1));
        let r = &star(&star(&x, &y), &z) - &star(&star(&x, &z), &y);
        assert!(!r.is_zero());
    }

    #[test]
    fn bracket_equals_factored_form() {
        let xs = [a(1), b(2), &a(3) - &b(1), b(0)];
        let params = [b(0), a(1), &a(2) + &b(3)];
        for x in &xs {
            for y in &xs {
                for p in &params {
                    assert_eq!(lie_bracket(x, y, p), factored_bracket(x, y, p));
                }
            }
        }
    }
}
