//! Browser bindings: each function takes plain strings and returns a JSON
//! document, `{"error": ...}` on bad input.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use vacuity::fol3::{eval3_fol_explain, eval_classical_fol, Interpretation};
use vacuity::goedel::{full_report, ToySystem};
use vacuity::prop3::{classical_eval, truth_table3};
use vacuity::{parse_formula, render};

fn error(message: impl ToString) -> String {
    json!({ "error": message.to_string() }).to_string()
}

fn table(formula: &str) -> Result<Value, String> {
    let f = parse_formula(formula).map_err(|e| e.to_string())?;
    let t = truth_table3(&f).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for r in &t.rows {
        let v = t
            .atoms
            .iter()
            .cloned()
            .zip(r.assignment.iter().copied())
            .collect();
        let classical = classical_eval(&f, &v).map_err(|e| e.to_string())?;
        rows.push(json!({
            "assignment": r.assignment,
            "classical": classical,
            "value": r.value,
        }));
    }
    Ok(json!({
        "formula": render(&f),
        "atoms": t.atoms,
        "rows": rows,
        "truth_relevant_tautology": t.all(vacuity::TruthValue3::T),
    }))
}

/// Truth table under classical and gap semantics.
#[wasm_bindgen]
pub fn truth_table(formula: &str) -> String {
    table(formula).map_or_else(error, |v| v.to_string())
}

fn model_eval(model: &str, formula: &str) -> Result<Value, String> {
    let m = Interpretation::from_json(model).map_err(|e| e.to_string())?;
    let f = parse_formula(formula).map_err(|e| e.to_string())?;
    let classical = eval_classical_fol(&f, &m).map_err(|e| e.to_string())?;
    let gap = eval3_fol_explain(&f, &m).map_err(|e| e.to_string())?;
    Ok(json!({
        "formula": render(&f),
        "classical": vacuity::TruthValue3::from(classical),
        "presup": gap.value,
        "reason": gap.gap.map(|g| g.to_string()),
    }))
}

/// A sentence in a model given as `{"domain": [...], "predicates": {...}}`.
#[wasm_bindgen]
pub fn evaluate_in_model(model: &str, formula: &str) -> String {
    model_eval(model, formula).map_or_else(error, |v| v.to_string())
}

/// Fixed point, unrolling and `J` for a system file, or the shipped system
/// when `system` is blank.
#[wasm_bindgen]
pub fn godel_report(system: &str, max_n: u32) -> String {
    let sys = if system.trim().is_empty() {
        Ok(ToySystem::default_system())
    } else {
        ToySystem::from_json(system)
    };
    sys.and_then(|s| full_report(&s, u64::from(max_n)))
        .map_or_else(error, |r| {
            serde_json::to_string(&r).expect("report serializes")
        })
}

#[wasm_bindgen]
pub fn default_system() -> String {
    ToySystem::default_json().to_string()
}
