//! Exact arithmetic for an infinite-dimensional commutative associative algebra
//! spanned by `b_0, a_1, b_1, a_2, b_2, ...`, the Novikov algebras obtained from
//! it through the multiplied derivations `a·D0`, their adjoining Lie algebras,
//! and the realization of all of it inside the span of `sinh(nx)`, `cosh(mx)`.
//!
//! Every identity the construction relies on is exposed as a residual function
//! returning an [`Element`], so a failed check carries the offending value.
//!
//! ```
//! use novikov::{Element, Kind, BasisSymbol};
//!
//! let a2 = Element::basis(BasisSymbol::a(2));
//! let a3 = Element::basis(BasisSymbol::a(3));
//! assert_eq!((&a2 * &a3).to_string(), "1/2*b_5 - 1/2*b_1");
//! # let _ = Kind::A;
//! ```

pub mod basis;
pub mod check;
pub mod cli;
pub mod derivation;
pub mod element;
pub mod expr;
pub mod novikov;
pub mod random;
pub mod rational;
pub mod realization;

pub use basis::{BasisSymbol, Kind};
pub use derivation::{d0, MultiplierDerivation};
pub use element::{associator, Element};
pub use novikov::{circ, closed_bracket, closed_circ, lie_bracket};
pub use rational::Rational;
pub use realization::FunctionRepr;

/// Largest basis index accepted by the parser and produced by expression
/// evaluation. The algebra itself imposes no bound.
pub const MAX_INDEX: u64 = 1_000_000;
