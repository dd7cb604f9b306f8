//! A toy decidable system with Gödel numbering, the diagonal construction
//! of `G`, and its instance-by-instance evaluation under the vacuity rule.
//!
//! `Prf` and `Diag` are primitive predicates interpreted by the decidable
//! relations [`ToySystem::check_proof`] and [`diag`]. Provability is exact:
//! the closure under modus ponens is finite and computed outright.
//!
//! ```
//! use vacuity::goedel::{build_fixed_point, diag, ToySystem};
//!
//! let sys = ToySystem::default_system();
//! let fp = build_fixed_point(&sys).unwrap();
//! assert_eq!(diag(&fp.k), Some(fp.g_code.clone()));
//! assert!(!fp.g_provable);
//! ```

mod codec;
mod fixed_point;
mod instances;
mod report;
mod system;

pub use codec::{
    decode, decode_formula, encode, formula_from_tokens, formula_tokens, goedel_number,
    token_index, ALPHABET, BASE, SEPARATOR,
};
pub use fixed_point::{build_fixed_point, FixedPoint, U_TEXT};
pub use instances::{
    default_sample, describe_instance, eval_g_unrolled, eval_instance_k, eval_j, instance_formula,
    InstanceReport, JReport, KTerm, Unrolling,
};
pub use report::{closure_summary, FixedPointSummary, GoedelReport, TheoremSummary};
pub use system::{compute_closure, diag, SystemFile, Theorem, ToySystem};

use num_bigint::BigUint;
use thiserror::Error;

use crate::fol3::FolError;
use crate::syntax::render;

pub const DEFAULT_MAX_N: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoedelError {
    #[error("token {0:?} is not in the alphabet")]
    UnknownToken(String),
    #[error("0 codes no token sequence")]
    ZeroCode,
    #[error("the empty token sequence has no code")]
    EmptySequence,
    #[error("symbol {0:?} cannot be written in the alphabet")]
    Unexpressible(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("axiom {0} is not a sentence")]
    OpenAxiom(String),
    #[error("bad system file: {0}")]
    Json(String),
    #[error("construction self-check failed: {0}")]
    SelfCheck(String),
    #[error(transparent)]
    Fol(#[from] FolError),
}

/// Everything about a system at once: closure, fixed point, unrolling over
/// the default sample up to `max_n`, and `J`.
pub fn full_report(sys: &ToySystem, max_n: u64) -> Result<GoedelReport, GoedelError> {
    let fp = build_fixed_point(sys)?;
    let sample: Vec<BigUint> = default_sample(&fp, sys, max_n);
    let unrolling = eval_g_unrolled(&fp, sys, &sample)?;
    let j = eval_j(&fp, sys, &unrolling);
    Ok(GoedelReport {
        axioms: sys.axioms().iter().map(render).collect(),
        closure: closure_summary(sys),
        fixed_point: FixedPointSummary::new(&fp),
        unrolling,
        j,
    })
}
