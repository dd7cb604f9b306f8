//! First-order formulas over finite interpretations, under classical and
//! presuppositional semantics.
//!
//! Under the presuppositional reading, `~(exists x. (a & b))` is neither true
//! nor false when either term `a` or `b` is satisfied by no element. Other
//! negated existentials are classical, existentials aggregate their
//! instances by strong Kleene disjunction, and the connectives follow the
//! propositional rules of [`crate::prop3`].

mod eval;
mod interpretation;
mod models;
mod validity;

pub use eval::{
    eval3_fol, eval3_fol_explain, eval_classical_fol, sat_set, vacuity_verdict, CompiledFormula,
    Evaluation, GapReason, Mode,
};
pub use interpretation::{Interpretation, ModelFile, Relation};
pub use models::{element_name, enumerate_models, ModelSpace, Signature, DEFAULT_MODEL_CAP};
pub use validity::{
    check_validity, check_validity_with, Semantics, ValidityOptions, Verdict, Witness,
    DEFAULT_MAX_DOMAIN,
};

use thiserror::Error;

use crate::prop3::PropError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FolError {
    #[error("domain must be nonempty")]
    EmptyDomain,
    #[error("element {0} appears twice in the domain")]
    DuplicateElement(String),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("predicate {predicate} has arity {expected}, used with {found} arguments")]
    ArityMismatch {
        predicate: String,
        expected: usize,
        found: usize,
    },
    #[error("predicate {0} is not interpreted")]
    MissingPredicate(String),
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("predicate {predicate} has too many tuples to store")]
    TooLarge { predicate: String },
    #[error("more than {cap} models at domain size {size}")]
    CapExceeded { size: usize, cap: u64 },
    #[error("invalid model file: {0}")]
    InvalidModel(String),
    #[error("syntax: {0}")]
    Syntax(String),
    #[error(transparent)]
    Prop(#[from] PropError),
}
