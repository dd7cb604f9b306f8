//! Formula syntax: AST, ASCII grammar, printer and canonicalization.
//!
//! Surface syntax uses `~ & | -> <->` with `forall` / `exists` binders.
//! Predicates take parenthesized arguments (`F(x)`, `Prf(x,z)`); bare
//! identifiers are propositional atoms. Numerals are arbitrary-precision
//! decimal literals.
//!
//! ```
//! use vacuity::syntax::{parse_formula, render, canonicalize};
//!
//! let f = parse_formula("forall x. (F(x) -> G(x))").unwrap();
//! assert_eq!(render(&canonicalize(&f)), "~(exists x. (F(x) & ~G(x)))");
//! ```

mod ast;
mod canon;
mod parser;
mod render;

pub use ast::{Formula, Term};
pub use canon::canonicalize;
pub use parser::{lex, parse_formula, Lexeme, Spanned};
pub use render::{render, render_with, RenderStyle};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("unexpected character {ch:?} at position {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("expected {expected} at position {pos}, found {found}")]
    Unexpected {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("predicate {name} used with arity {first} and arity {second}")]
    ArityConflict {
        name: String,
        first: usize,
        second: usize,
    },
    #[error("substitution term must be a numeral, got variable {0}")]
    NonNumeralSubstitution(String),
}
