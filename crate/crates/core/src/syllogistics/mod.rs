//! Categorical forms, their three translations, and exhaustive audits of
//! the square of opposition and of the 256 syllogistic moods.

mod forms;
mod moods;
mod square;

pub use forms::{
    eval_categorical, presupposition_terms, translate, CategoricalForm, Letter, Scheme,
};
pub use moods::{
    audit_moods, classical_catalog, traditional_catalog, CatalogDiff, Mood, MoodAudit, MoodVerdict,
    TRADITIONAL,
};
pub use square::{
    audit_square, expected_failures, ClauseResult, LawGroup, LawResult, SquareReport,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyllogismError {
    #[error("subject and predicate must differ, both are {0}")]
    SameTerms(String),
    #[error("unknown categorical letter {0:?}")]
    BadLetter(char),
    #[error("unknown scheme {0:?}, expected table1, table2 or presup")]
    BadScheme(String),
}
