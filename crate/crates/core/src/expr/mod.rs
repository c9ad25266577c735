//! Surface syntax for elements and the operations on them.
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := rational '*' factor
//!          | operand ['o' operand]
//! operand := 'a_' uint | 'b_' uint | rational
//!          | '(' expr ')' | '[' expr ',' expr ']'
//!          | 'D0' '(' expr ')' | 'der' '(' expr ';' expr ')'
//! rational := uint ['/' uint]
//! ```
//!
//! `o` is the Novikov product and does not chain: `x o y o z` is rejected,
//! write `(x o y) o z` or `x o (y o z)`. A rational `c` on its own denotes
//! `c·b_0`.

mod ast;
mod eval;
mod parse;

pub use ast::Expr;
pub use eval::{evaluate, evaluate_function, evaluate_numeric, EvalError};
pub use parse::{parse, ParseError};
