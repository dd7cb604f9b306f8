use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use super::fixed_point::FixedPoint;
use super::system::{diag, ToySystem};
use super::GoedelError;
use crate::fol3::{eval3_fol, vacuity_verdict, Interpretation};
use crate::prop3::{eval3_assign, TruthValue3};
use crate::syntax::{render, Formula, Term};

fn decimal<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

/// A term of `K_n = ~(exists x. (Prf(x,n) & Diag(k,n)))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum KTerm {
    #[serde(rename = "Prf-term")]
    Prf,
    #[serde(rename = "Diag-term")]
    Diag,
}

impl KTerm {
    pub fn label(self) -> &'static str {
        match self {
            KTerm::Prf => "Prf-term",
            KTerm::Diag => "Diag-term",
        }
    }

    /// The universal reading of `K_n` made vacuous when this term is empty.
    pub fn direction(self) -> &'static str {
        match self {
            KTerm::Prf => "(x)(Prf(x,n) -> ~Diag(k,n))",
            KTerm::Diag => "(x)(Diag(k,n) -> ~Prf(x,n))",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    #[serde(serialize_with = "decimal")]
    pub n: BigUint,
    pub verdict: TruthValue3,
    pub empty_terms: Vec<KTerm>,
    /// Universal forms of `K_n` whose antecedent is empty.
    pub vacuous_directions: Vec<String>,
    /// The form singled out by the case split on `n = <G>`.
    pub case_direction: String,
    pub is_g: bool,
}

/// `K_n` as a formula over numerals.
pub fn instance_formula(fp: &FixedPoint, n: &BigUint) -> Formula {
    let n = Term::Numeral(n.clone());
    Formula::not(Formula::exists(
        "x",
        Formula::and(
            Formula::pred("Prf", vec![Term::var("x"), n.clone()]),
            Formula::pred("Diag", vec![Term::Numeral(fp.k.clone()), n]),
        ),
    ))
}

/// `K_n` under the vacuity rule, with the term emptiness decided exactly.
pub fn eval_instance_k(fp: &FixedPoint, sys: &ToySystem, n: &BigUint) -> InstanceReport {
    let prf = sys.prf_witness(n).is_some();
    let diag_holds = diag(&fp.k).as_ref() == Some(n);
    // Diag(k,n) does not mention x, so the joint term is the Prf-term or nothing
    let verdict = vacuity_verdict(prf, diag_holds, prf && diag_holds);
    let empty_terms: Vec<KTerm> = [(KTerm::Prf, prf), (KTerm::Diag, diag_holds)]
        .into_iter()
        .filter(|&(_, nonempty)| !nonempty)
        .map(|(t, _)| t)
        .collect();
    let is_g = *n == fp.g_code;
    InstanceReport {
        n: n.clone(),
        verdict,
        vacuous_directions: empty_terms
            .iter()
            .map(|t| t.direction().to_string())
            .collect(),
        empty_terms,
        case_direction: if is_g { KTerm::Prf } else { KTerm::Diag }
            .direction()
            .to_string(),
        is_g,
    }
}

/// `{1..=max_n}` with the closure codes and `<G>`, ascending.
pub fn default_sample(fp: &FixedPoint, sys: &ToySystem, max_n: u64) -> Vec<BigUint> {
    let mut s: BTreeSet<BigUint> = (1..=max_n).map(BigUint::from).collect();
    s.extend(sys.closure_codes().cloned());
    s.insert(fp.g_code.clone());
    s.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Unrolling {
    /// `G` read as the conjunction of `K_n` over all `n`.
    pub overall: TruthValue3,
    pub reason: String,
    /// Classical value of `G` as written, nested quantifiers and all.
    pub as_written_classical: bool,
    /// `G` unrolled on `x` first, keeping `exists z` inside.
    pub x_first: TruthValue3,
    pub instances: Vec<InstanceReport>,
    /// Whether every sampled verdict was reproduced by the finite-model
    /// evaluator.
    pub model_check_agrees: bool,
}

/// Unrolls `G` into its instances `K_n`.
///
/// The overall verdict covers every `n`, not only the sample: for `n` other
/// than `<G>` the Diag-term is empty, and at `<G>` the Prf-term is empty
/// unless `G` is provable.
pub fn eval_g_unrolled(
    fp: &FixedPoint,
    sys: &ToySystem,
    sample: &[BigUint],
) -> Result<Unrolling, GoedelError> {
    let instances: Vec<InstanceReport> =
        sample.iter().map(|n| eval_instance_k(fp, sys, n)).collect();
    let at_g = eval_instance_k(fp, sys, &fp.g_code);
    let (overall, reason) = match at_g.verdict {
        TruthValue3::N => (
            TruthValue3::N,
            "every instance has an empty term: Diag-term for n != <G>, Prf-term at <G>".to_string(),
        ),
        v => (
            TruthValue3::N & v,
            "G is provable: the instance at <G> has both terms nonempty".to_string(),
        ),
    };
    // as written: some (x, z) with Prf(x,z) and Diag(k,z) exists iff <G> is provable
    let as_written_classical = !fp.g_provable;
    // x first: ~exists z. (Prf(m,z) & Diag(k,z)); the Diag-term is {<G>}, and
    // the Prf-term is empty for m = 1, which codes no proof
    let x_first = if fp.g_provable {
        TruthValue3::F
    } else {
        TruthValue3::N
    };
    let model_check_agrees = model_check(fp, sys, &instances)?;
    Ok(Unrolling {
        overall,
        reason,
        as_written_classical,
        x_first,
        instances,
        model_check_agrees,
    })
}

/// Re-evaluates the sampled instances with the first-order evaluator over a
/// finite model of the sample codes, `k`, and the proof witnesses.
fn model_check(
    fp: &FixedPoint,
    sys: &ToySystem,
    instances: &[InstanceReport],
) -> Result<bool, GoedelError> {
    let mut elements: BTreeSet<BigUint> = instances.iter().map(|r| r.n.clone()).collect();
    elements.insert(fp.k.clone());
    let witnesses: Vec<BigUint> = instances
        .iter()
        .filter_map(|r| sys.prf_witness(&r.n))
        .collect();
    elements.extend(witnesses);
    let elements: Vec<BigUint> = elements.into_iter().collect();
    let names: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
    let mut m = Interpretation::new(names.clone())?;
    let proves: Vec<Option<BigUint>> = elements.iter().map(|x| sys.proves(x)).collect();
    let diags: Vec<Option<BigUint>> = elements.iter().map(diag).collect();
    let pairs = |rel: &[Option<BigUint>]| -> Vec<Vec<String>> {
        let mut out = Vec::new();
        for (i, image) in rel.iter().enumerate() {
            let Some(image) = image else { continue };
            if let Ok(j) = elements.binary_search(image) {
                out.push(vec![names[i].clone(), names[j].clone()]);
            }
        }
        out
    };
    m.set_predicate("Prf", 2, pairs(&proves))?;
    m.set_predicate("Diag", 2, pairs(&diags))?;
    for r in instances {
        if eval3_fol(&instance_formula(fp, &r.n), &m)? != r.verdict {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JReport {
    pub g_gap: TruthValue3,
    pub h_gap: TruthValue3,
    pub j_gap: TruthValue3,
    pub g_classical: bool,
    pub h_classical: bool,
    pub j_classical: bool,
    /// `K` is the instance of `G` at `<G>`.
    pub k: InstanceReport,
}

impl JReport {
    pub fn equivalence_fails(&self) -> bool {
        !self.j_gap.is_true()
    }
}

/// `J = G <-> H` under both semantics. `H` has a single term, so no gap rule
/// applies to it and its value is classical.
pub fn eval_j(fp: &FixedPoint, sys: &ToySystem, unrolled: &Unrolling) -> JReport {
    let h = sys.prf_witness(&fp.g_code).is_none();
    let g = unrolled.overall;
    let shape = Formula::iff(Formula::atom("G"), Formula::atom("H"));
    let assignment = [("G".to_string(), g), ("H".to_string(), h.into())]
        .into_iter()
        .collect();
    let j_gap = eval3_assign(&shape, &assignment).expect("two assigned atoms");
    let g_classical = unrolled.as_written_classical;
    JReport {
        g_gap: g,
        h_gap: h.into(),
        j_gap,
        g_classical,
        h_classical: h,
        j_classical: g_classical == h,
        k: eval_instance_k(fp, sys, &fp.g_code),
    }
}

/// Renders a report row for `K_n`.
pub fn describe_instance(fp: &FixedPoint, r: &InstanceReport) -> String {
    let terms: Vec<&str> = r.empty_terms.iter().map(|t| t.label()).collect();
    let empty = if terms.is_empty() {
        "no empty term".to_string()
    } else {
        format!("{} empty", terms.join(", "))
    };
    format!(
        "{}: {} ({empty}){}",
        render(&instance_formula(fp, &r.n)),
        r.verdict,
        if r.is_g { " <- n = <G>" } else { "" }
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goedel::build_fixed_point;
    use crate::goedel::codec::goedel_number;
    use crate::syntax::parse_formula;
    use TruthValue3::*;

    fn setup() -> (ToySystem, FixedPoint) {
        let sys = ToySystem::default_system();
        let fp = build_fixed_point(&sys).unwrap();
        (sys, fp)
    }

    #[test]
    fn instance_at_g() {
        let (sys, fp) = setup();
        let r = eval_instance_k(&fp, &sys, &fp.g_code);
        assert_eq!(r.verdict, N);
        assert_eq!(r.empty_terms, [KTerm::Prf]);
        assert_eq!(r.case_direction, "(x)(Prf(x,n) -> ~Diag(k,n))");
        assert_eq!(
            r.vacuous_directions,
            std::slice::from_ref(&r.case_direction)
        );
    }

    #[test]
    fn small_instances() {
        let (sys, fp) = setup();
        let r = eval_instance_k(&fp, &sys, &BigUint::from(1u32));
        assert_eq!(r.verdict, N);
        assert!(r.empty_terms.contains(&KTerm::Diag));
        let axiom = goedel_number(&parse_formula("~Diag(0,0)").unwrap()).unwrap();
        let r = eval_instance_k(&fp, &sys, &axiom);
        assert_eq!(
            (r.verdict, r.empty_terms.as_slice()),
            (N, &[KTerm::Diag][..])
        );
        assert_eq!(r.vacuous_directions, ["(x)(Diag(k,n) -> ~Prf(x,n))"]);
    }

    #[test]
    fn unrolling_and_j() {
        let (sys, fp) = setup();
        let sample = default_sample(&fp, &sys, 64);
        assert_eq!(sample.len(), 64 + 5 + 1);
        let u = eval_g_unrolled(&fp, &sys, &sample).unwrap();
        assert_eq!(u.overall, N);
        assert!(u.as_written_classical);
        assert_eq!(u.x_first, N);
        assert!(u.instances.iter().all(|r| r.verdict == N));
        assert!(u.model_check_agrees);
        let j = eval_j(&fp, &sys, &u);
        assert_eq!((j.g_gap, j.h_gap, j.j_gap), (N, T, N));
        assert!(j.g_classical && j.h_classical && j.j_classical);
        assert!(j.equivalence_fails());
        assert_eq!(j.k.empty_terms, [KTerm::Prf]);
    }

    #[test]
    fn provable_g_is_false() {
        let sys0 = ToySystem::default_system();
        let g = build_fixed_point(&sys0).unwrap().g;
        let sys = ToySystem::new(vec![g]).unwrap();
        let fp = build_fixed_point(&sys).unwrap();
        assert!(fp.g_provable);
        let r = eval_instance_k(&fp, &sys, &fp.g_code);
        assert_eq!((r.verdict, r.empty_terms.len()), (F, 0));
        let u = eval_g_unrolled(&fp, &sys, &default_sample(&fp, &sys, 8)).unwrap();
        assert_eq!(u.overall, F);
        assert!(!u.as_written_classical);
        assert!(u.model_check_agrees);
        let j = eval_j(&fp, &sys, &u);
        assert_eq!((j.h_gap, j.j_gap), (F, T));
    }
}
