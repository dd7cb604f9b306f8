use serde::Serialize;

use super::fixed_point::FixedPoint;
use super::instances::{JReport, Unrolling};
use super::system::ToySystem;
use crate::syntax::render;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub sentence: String,
    pub code: Option<String>,
    pub axiom: bool,
    pub proof_lines: usize,
}

/// Numbers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointSummary {
    pub u: String,
    pub k: String,
    pub g: String,
    pub g_code: String,
    pub h: String,
    pub j: String,
    pub diag_k_is_g_code: bool,
    pub g_provable: bool,
}

impl FixedPointSummary {
    pub fn new(fp: &FixedPoint) -> Self {
        FixedPointSummary {
            u: render(&fp.u),
            k: fp.k.to_string(),
            g: render(&fp.g),
            g_code: fp.g_code.to_string(),
            h: render(&fp.h),
            j: render(&fp.j),
            // construction fails otherwise
            diag_k_is_g_code: true,
            g_provable: fp.g_provable,
        }
    }
}

pub fn closure_summary(sys: &ToySystem) -> Vec<TheoremSummary> {
    sys.theorems()
        .map(|t| TheoremSummary {
            sentence: render(&t.sentence),
            code: t.code.as_ref().map(|c| c.to_string()),
            axiom: sys.is_axiom(&t.sentence),
            proof_lines: t.proof.len(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoedelReport {
    pub axioms: Vec<String>,
    pub closure: Vec<TheoremSummary>,
    pub fixed_point: FixedPointSummary,
    pub unrolling: Unrolling,
    pub j: JReport,
}
