use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::codec::{decode, encode, formula_from_tokens, formula_tokens, goedel_number, SEPARATOR};
use super::GoedelError;
use crate::syntax::{parse_formula, render, Formula, Term};

const DEFAULT_SYSTEM: &str = include_str!("../../data/default_system.json");

/// On-disk form of a system: axioms in the formula grammar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub axioms: Vec<String>,
}

/// A provable sentence with its canonical proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem {
    pub sentence: Formula,
    /// Proof lines, the last being `sentence`.
    pub proof: Vec<Formula>,
    /// Gödel numbers of the sentence and of the proof, when expressible.
    pub code: Option<BigUint>,
    pub proof_code: Option<BigUint>,
}

/// Finitely many axioms closed under modus ponens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToySystem {
    axioms: Vec<Formula>,
    theorems: BTreeMap<Formula, Theorem>,
    by_code: BTreeMap<BigUint, Formula>,
}

fn merge(a: &[Formula], b: &[Formula], last: &Formula) -> Vec<Formula> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(a.len() + b.len() + 1);
    for f in a.iter().chain(b).chain(std::iter::once(last)) {
        if seen.insert(f) {
            out.push(f.clone());
        }
    }
    out
}

fn proof_code(lines: &[Formula]) -> Option<BigUint> {
    let mut tokens = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        if i > 0 {
            tokens.push(SEPARATOR);
        }
        tokens.extend(formula_tokens(line).ok()?);
    }
    encode(&tokens).ok()
}

/// Least superset of `axioms` closed under modus ponens, each member with a
/// shortest proof assembled from the proofs of its premises.
pub fn compute_closure(axioms: &[Formula]) -> BTreeMap<Formula, Vec<Formula>> {
    let mut proofs: BTreeMap<Formula, Vec<Formula>> = BTreeMap::new();
    for a in axioms {
        proofs.insert(a.clone(), vec![a.clone()]);
    }
    loop {
        let mut updates = Vec::new();
        for (imp, imp_proof) in &proofs {
            let Formula::Implies(a, b) = imp else {
                continue;
            };
            let Some(a_proof) = proofs.get(a.as_ref()) else {
                continue;
            };
            let candidate = merge(a_proof, imp_proof, b);
            match proofs.get(b.as_ref()) {
                Some(old) if old.len() <= candidate.len() => {}
                _ => updates.push((b.as_ref().clone(), candidate)),
            }
        }
        if updates.is_empty() {
            return proofs;
        }
        for (b, proof) in updates {
            match proofs.get(&b) {
                Some(old) if old.len() <= proof.len() => {}
                _ => {
                    proofs.insert(b, proof);
                }
            }
        }
    }
}

impl ToySystem {
    pub fn new(axioms: Vec<Formula>) -> Result<Self, GoedelError> {
        if let Some(open) = axioms.iter().find(|a| !a.is_closed()) {
            return Err(GoedelError::OpenAxiom(render(open)));
        }
        let mut theorems = BTreeMap::new();
        let mut by_code = BTreeMap::new();
        for (sentence, proof) in compute_closure(&axioms) {
            let code = goedel_number(&sentence).ok();
            if let Some(c) = &code {
                by_code.insert(c.clone(), sentence.clone());
            }
            let theorem = Theorem {
                proof_code: code.as_ref().and_then(|_| proof_code(&proof)),
                code,
                sentence: sentence.clone(),
                proof,
            };
            theorems.insert(sentence, theorem);
        }
        Ok(ToySystem {
            axioms,
            theorems,
            by_code,
        })
    }

    pub fn from_file(file: &SystemFile) -> Result<Self, GoedelError> {
        let axioms = file
            .axioms
            .iter()
            .map(|a| parse_formula(a).map_err(|e| GoedelError::Syntax(format!("{a:?}: {e}"))))
            .collect::<Result<_, _>>()?;
        ToySystem::new(axioms)
    }

    pub fn from_json(text: &str) -> Result<Self, GoedelError> {
        let file: SystemFile =
            serde_json::from_str(text).map_err(|e| GoedelError::Json(e.to_string()))?;
        ToySystem::from_file(&file)
    }

    /// The shipped three-axiom system.
    pub fn default_system() -> Self {
        ToySystem::from_json(DEFAULT_SYSTEM).expect("shipped system is well formed")
    }

    pub fn default_json() -> &'static str {
        DEFAULT_SYSTEM
    }

    pub fn to_file(&self) -> SystemFile {
        SystemFile {
            axioms: self.axioms.iter().map(render).collect(),
        }
    }

    pub fn axioms(&self) -> &[Formula] {
        &self.axioms
    }

    pub fn is_axiom(&self, f: &Formula) -> bool {
        self.axioms.contains(f)
    }

    /// Closure members in formula order.
    pub fn theorems(&self) -> impl Iterator<Item = &Theorem> {
        self.theorems.values()
    }

    pub fn closure_size(&self) -> usize {
        self.theorems.len()
    }

    pub fn is_theorem(&self, f: &Formula) -> bool {
        self.theorems.contains_key(f)
    }

    pub fn theorem(&self, f: &Formula) -> Option<&Theorem> {
        self.theorems.get(f)
    }

    /// Codes of all expressible closure members, ascending.
    pub fn closure_codes(&self) -> impl Iterator<Item = &BigUint> {
        self.by_code.keys()
    }

    /// The code of the canonical proof of the sentence coded by `z`, if it
    /// is provable. `{x : Prf(x, z)}` is nonempty exactly when this is some.
    pub fn prf_witness(&self, z: &BigUint) -> Option<BigUint> {
        let f = self.by_code.get(z)?;
        self.theorems[f].proof_code.clone()
    }

    /// Code of the sentence that `x` proves, if `x` codes a proof.
    pub fn proves(&self, x: &BigUint) -> Option<BigUint> {
        let tokens = decode(x).ok()?;
        let mut lines: Vec<Formula> = Vec::new();
        for segment in tokens.split(|t| *t == SEPARATOR) {
            let line = formula_from_tokens(segment)?;
            if !line.is_closed() {
                return None;
            }
            let justified = self.is_axiom(&line)
                || lines.iter().any(|a| {
                    lines
                        .iter()
                        .any(|imp| *imp == Formula::implies(a.clone(), line.clone()))
                });
            if !justified {
                return None;
            }
            lines.push(line);
        }
        goedel_number(lines.last()?).ok()
    }

    /// The relation `Prf(x, z)`.
    pub fn check_proof(&self, x: &BigUint, z: &BigUint) -> bool {
        self.proves(x).as_ref() == Some(z)
    }
}

/// The relation `Diag`: the code of the formula coded by `y` with the
/// numeral of `y` put for its only free variable.
pub fn diag(y: &BigUint) -> Option<BigUint> {
    let f = super::codec::decode_formula(y)?;
    let free = f.free_variables();
    if free.len() != 1 {
        return None;
    }
    let v = free.iter().next().expect("one variable");
    let g = f.substitute(v, &Term::Numeral(y.clone())).ok()?;
    goedel_number(&g).ok()
}
