//! Presuppositional (truth-value gap) semantics for propositional and
//! first-order formulas, with audits of the Aristotelian square and the
//! syllogistic moods, and a toy Gödel-numbered system for inspecting the
//! diagonal sentence instance by instance.

pub mod fol3;
pub mod goedel;
pub mod prop3;
pub mod syllogistics;
pub mod syntax;

pub use prop3::TruthValue3;
pub use syntax::{parse_formula, render, Formula, Term};
