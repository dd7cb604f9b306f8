use num_bigint::BigUint;

use super::codec::goedel_number;
use super::system::{diag, ToySystem};
use super::GoedelError;
use crate::syntax::{parse_formula, Formula, Term};

pub const U_TEXT: &str = "~(exists x. exists z. (Prf(x,z) & Diag(y,z)))";

/// The diagonal construction over a toy system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    /// `~(exists x. exists z. (Prf(x,z) & Diag(y,z)))`, free in `y`.
    pub u: Formula,
    /// Code of `u`.
    pub k: BigUint,
    /// `u` with the numeral of `k` for `y`.
    pub g: Formula,
    pub g_code: BigUint,
    /// `~(exists x. Prf(x, <G>))`.
    pub h: Formula,
    /// `G <-> H`.
    pub j: Formula,
    /// Whether `G` is in the deductive closure.
    pub g_provable: bool,
}

pub fn build_fixed_point(sys: &ToySystem) -> Result<FixedPoint, GoedelError> {
    let u = parse_formula(U_TEXT).expect("U parses");
    let k = goedel_number(&u)?;
    let g = u
        .substitute("y", &Term::Numeral(k.clone()))
        .expect("numeral substitution");
    let g_code = goedel_number(&g)?;
    match diag(&k) {
        Some(d) if d == g_code => {}
        other => {
            return Err(GoedelError::SelfCheck(format!(
                "diag(k) = {} but <G> = {g_code}",
                other.map_or("none".to_string(), |d| d.to_string())
            )))
        }
    }
    if !g.is_closed() {
        return Err(GoedelError::SelfCheck("G has a free variable".into()));
    }
    let h = Formula::not(Formula::exists(
        "x",
        Formula::pred("Prf", vec![Term::var("x"), Term::Numeral(g_code.clone())]),
    ));
    let j = Formula::iff(g.clone(), h.clone());
    let g_provable = sys.is_theorem(&g);
    if g_provable != sys.prf_witness(&g_code).is_some() {
        return Err(GoedelError::SelfCheck(
            "closure membership and proof witness disagree for G".into(),
        ));
    }
    Ok(FixedPoint {
        u,
        k,
        g,
        g_code,
        h,
        j,
        g_provable,
    })
}
