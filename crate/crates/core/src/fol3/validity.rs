use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::eval::{CompiledFormula, Mode};
use super::models::{ModelSpace, Signature, DEFAULT_MODEL_CAP};
use super::{FolError, GapReason, ModelFile};
use crate::prop3::TruthValue3;
use crate::syntax::render;
use crate::Formula;

/// Default largest domain size for validity checks; 2^3 elements realise every
/// cell of a three-predicate monadic signature.
pub const DEFAULT_MAX_DOMAIN: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    Classical,
    Presup,
}

impl Semantics {
    pub(crate) fn mode(self) -> Mode {
        match self {
            Semantics::Classical => Mode::Classical,
            Semantics::Presup => Mode::Gap,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Countermodel {
        model: ModelFile,
        premises: Vec<TruthValue3>,
        conclusion: TruthValue3,
    },
    Gap(GapReason),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: TruthValue3,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub models_checked: u64,
    pub max_domain: usize,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.value.is_true()
    }

    pub fn countermodel(&self) -> Option<&ModelFile> {
        match &self.witness {
            Some(Witness::Countermodel { model, .. }) => Some(model),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidityOptions {
    pub max_domain: usize,
    pub cap: u64,
}

impl Default for ValidityOptions {
    fn default() -> Self {
        ValidityOptions {
            max_domain: DEFAULT_MAX_DOMAIN,
            cap: DEFAULT_MODEL_CAP,
        }
    }
}

/// Truth preservation over every model with 1..=`max_domain` elements: the
/// argument is valid iff no model makes every premise `T` while the
/// conclusion is not `T`. The first countermodel in enumeration order is
/// returned otherwise.
pub fn check_validity(
    premises: &[Formula],
    conclusion: &Formula,
    signature: &Signature,
    max_domain: usize,
    semantics: Semantics,
) -> Result<Verdict, FolError> {
    check_validity_with(
        premises,
        conclusion,
        signature,
        semantics,
        ValidityOptions {
            max_domain,
            ..ValidityOptions::default()
        },
    )
}

pub fn check_validity_with(
    premises: &[Formula],
    conclusion: &Formula,
    signature: &Signature,
    semantics: Semantics,
    options: ValidityOptions,
) -> Result<Verdict, FolError> {
    for f in premises.iter().chain([conclusion]) {
        if let Some(v) = f.free_variables().into_iter().next() {
            return Err(FolError::UnboundVariable(format!("{v} in {}", render(f))));
        }
        signature.admits(f)?;
    }
    // fail on the cap before doing any work
    let spaces = (1..=options.max_domain)
        .map(|size| ModelSpace::with_cap(signature, size, options.cap))
        .collect::<Result<Vec<_>, _>>()?;

    let mode = semantics.mode();
    let mut checked = 0u64;
    for space in &spaces {
        let compiled = premises
            .iter()
            .map(|p| CompiledFormula::compile(p, space.base(), mode))
            .collect::<Result<Vec<_>, _>>()?;
        let goal = CompiledFormula::compile(conclusion, space.base(), mode)?;
        let found = space.for_each(|_, m| {
            checked += 1;
            if compiled.iter().all(|p| p.eval3(m).is_true()) {
                let c = goal.eval3(m);
                if !c.is_true() {
                    return ControlFlow::Break(Witness::Countermodel {
                        model: m.to_model_file(),
                        premises: compiled.iter().map(|p| p.eval3(m)).collect(),
                        conclusion: c,
                    });
                }
            }
            ControlFlow::Continue(())
        });
        if let Some(w) = found {
            return Ok(Verdict {
                value: TruthValue3::F,
                witness: Some(w),
                models_checked: checked,
                max_domain: options.max_domain,
            });
        }
    }
    Ok(Verdict {
        value: TruthValue3::T,
        witness: None,
        models_checked: checked,
        max_domain: options.max_domain,
    })
}
