mod common;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use proptest::prelude::*;

use common::*;
use vacuity::fol3::{
    check_validity, eval3_fol, eval_classical_fol, Interpretation, ModelSpace, Semantics, Signature,
};
use vacuity::goedel::{decode, decode_formula, encode, goedel_number, ToySystem};
use vacuity::prop3::{classical_eval, eval3, Valuation};
use vacuity::syllogistics::{
    audit_moods, eval_categorical, presupposition_terms, CategoricalForm, Letter, Scheme,
};
use vacuity::syntax::{canonicalize, render_with, RenderStyle};
use vacuity::{parse_formula, render, Formula, TruthValue3};

fn valuations(atoms: &[String]) -> Vec<Valuation> {
    (0..1u32 << atoms.len())
        .map(|bits| {
            atoms
                .iter()
                .enumerate()
                .map(|(i, a)| (a.clone(), bits >> i & 1 == 1))
                .collect()
        })
        .collect()
}

fn all_valuations() -> Vec<Valuation> {
    let atoms: Vec<String> = ATOMS.iter().map(|s| s.to_string()).collect();
    valuations(&atoms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn render_parse_round_trip(f in prop_oneof![prop_formula(), fol_open(), expressible_formula()]) {
        prop_assert_eq!(parse_formula(&render(&f)).unwrap(), f.clone());
        prop_assert_eq!(parse_formula(&render_with(&f, RenderStyle::Full)).unwrap(), f);
    }

    #[test]
    fn canonicalize_is_idempotent(f in prop_oneof![prop_formula(), fol_open()]) {
        let c = canonicalize(&f);
        prop_assert_eq!(canonicalize(&c), c);
    }

    #[test]
    fn bound_renaming_is_invisible(f in fol_sentence(), m in fol_model()) {
        let g = ["x", "y", "z"]
            .iter()
            .zip(["u", "v", "w"])
            .fold(f.clone(), |acc, (v, w)| rename_bound(&acc, v, w));
        prop_assert_eq!(eval3_fol(&f, &m).unwrap(), eval3_fol(&g, &m).unwrap());
        prop_assert_eq!(eval_classical_fol(&f, &m).unwrap(), eval_classical_fol(&g, &m).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn prop_gap_or_agree(f in prop_formula()) {
        for v in all_valuations() {
            let c = classical_eval(&f, &v).unwrap();
            let g = eval3(&f, &v).unwrap();
            prop_assert!(g == TruthValue3::N || g == c.into(), "{} at {:?}", render(&f), v);
        }
    }

    #[test]
    fn fol_gap_or_agree(f in fol_sentence(), m in fol_model()) {
        let c = eval_classical_fol(&f, &m).unwrap();
        let g = eval3_fol(&f, &m).unwrap();
        prop_assert!(g == TruthValue3::N || g == c.into(), "{}", render(&f));
    }

    #[test]
    fn codec_sequences_round_trip(s in token_sequence()) {
        let n = encode(&s).unwrap();
        prop_assert_eq!(decode(&n).unwrap(), s);
    }

    #[test]
    fn codec_naturals_round_trip(n in prop_oneof![
        (1u64..).prop_map(BigUint::from),
        proptest::collection::vec(any::<u32>(), 1..8)
            .prop_map(BigUint::new)
            .prop_filter("positive", |n| *n != BigUint::from(0u32)),
    ]) {
        prop_assert_eq!(encode(&decode(&n).unwrap()).unwrap(), n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    #[test]
    fn canonical_prop_truth(f in prop_formula()) {
        let c = canonicalize(&f);
        for v in all_valuations() {
            prop_assert_eq!(classical_eval(&f, &v).unwrap(), classical_eval(&c, &v).unwrap());
        }
    }

    #[test]
    fn canonical_fol_truth(f in fol_sentence()) {
        let c = canonicalize(&f);
        for n in 1..=2 {
            for m in ModelSpace::new(&fol_signature(), n).unwrap().iter() {
                prop_assert_eq!(eval_classical_fol(&f, &m).unwrap(), eval_classical_fol(&c, &m).unwrap());
            }
        }
    }

    #[test]
    fn canonical_fol_truth_monadic_three(f in monadic_sentence()) {
        let c = canonicalize(&f);
        for m in ModelSpace::new(&Signature::unary(["F", "G"]), 3).unwrap().iter() {
            prop_assert_eq!(eval_classical_fol(&f, &m).unwrap(), eval_classical_fol(&c, &m).unwrap());
        }
    }

    #[test]
    fn goedel_number_is_injective(f in expressible_formula(), g in expressible_formula()) {
        let (a, b) = (goedel_number(&f).unwrap(), goedel_number(&g).unwrap());
        prop_assert_eq!(decode_formula(&a), Some(f.clone()));
        prop_assert_eq!(a == b, f == g);
    }

    #[test]
    fn non_members_have_no_witness(n in any::<u64>(), f in expressible_formula()) {
        let sys = ToySystem::default_system();
        for z in [BigUint::from(n), goedel_number(&f).unwrap()] {
            let member = sys.closure_codes().any(|c| *c == z);
            prop_assert_eq!(sys.prf_witness(&z).is_some(), member);
        }
    }
}

#[test]
fn canonicalization_exhaustive_small_formulas() {
    // every formula over P, Q of connective depth at most 2
    let mut level: Vec<Formula> = vec![Formula::atom("P"), Formula::atom("Q")];
    for _ in 0..2 {
        let mut next = level.clone();
        for a in &level {
            next.push(Formula::not(a.clone()));
            for b in &level {
                next.push(Formula::and(a.clone(), b.clone()));
                next.push(Formula::or(a.clone(), b.clone()));
                next.push(Formula::implies(a.clone(), b.clone()));
                next.push(Formula::iff(a.clone(), b.clone()));
            }
        }
        next.sort();
        next.dedup();
        level = next;
    }
    assert!(level.len() > 1000);
    let atoms = vec!["P".to_string(), "Q".to_string()];
    for f in &level {
        let c = canonicalize(f);
        for v in valuations(&atoms) {
            assert_eq!(
                classical_eval(f, &v).unwrap(),
                classical_eval(&c, &v).unwrap()
            );
            let g = eval3(f, &v).unwrap();
            assert!(g == TruthValue3::N || g == classical_eval(f, &v).unwrap().into());
        }
    }
}

#[test]
fn witnesses_are_sound() {
    let sys = ToySystem::default_system();
    for t in sys.theorems() {
        let z = t.code.clone().unwrap();
        let x = sys.prf_witness(&z).unwrap();
        assert!(sys.check_proof(&x, &z), "{}", render(&t.sentence));
    }
}

fn two_element_models() -> Vec<Interpretation> {
    let sig = Signature::unary(["F", "G"]);
    (1..=3)
        .flat_map(|n| ModelSpace::new(&sig, n).unwrap().iter().collect::<Vec<_>>())
        .collect()
}

#[test]
fn presupposition_characterization() {
    for m in two_element_models() {
        for l in Letter::ALL {
            let form = CategoricalForm::new(l, "F", "G").unwrap();
            let (s, p) = presupposition_terms(&form);
            let empty = |t: &Formula| vacuity::fol3::sat_set(t, "x", &m).unwrap().is_empty();
            let v = eval_categorical(&form, &m, Scheme::Presup).unwrap();
            let t1 = eval_categorical(&form, &m, Scheme::Table1).unwrap();
            if empty(&s) || empty(&p) {
                assert_eq!(v, TruthValue3::N);
            } else {
                assert_eq!(v, t1);
            }
        }
    }
}

#[test]
fn universal_presup_matches_first_order_gap_rule() {
    for m in two_element_models() {
        for l in [Letter::A, Letter::E] {
            let form = CategoricalForm::new(l, "F", "G").unwrap();
            let f = vacuity::syllogistics::translate(&form, Scheme::Presup);
            assert_eq!(
                eval3_fol(&f, &m).unwrap(),
                eval_categorical(&form, &m, Scheme::Presup).unwrap()
            );
        }
    }
}

#[test]
fn contradictory_duality() {
    let v = |l, m: &Interpretation, s| {
        eval_categorical(&CategoricalForm::new(l, "F", "G").unwrap(), m, s).unwrap()
    };
    for m in two_element_models() {
        for s in [Scheme::Table2, Scheme::Presup] {
            assert_eq!(v(Letter::O, &m, s), !v(Letter::A, &m, s));
            assert_eq!(v(Letter::I, &m, s), !v(Letter::E, &m, s));
        }
    }
}

#[test]
fn truth_and_falsity_align_with_table2() {
    for m in two_element_models() {
        for l in Letter::ALL {
            let form = CategoricalForm::new(l, "F", "G").unwrap();
            let p = eval_categorical(&form, &m, Scheme::Presup).unwrap();
            let t2 = eval_categorical(&form, &m, Scheme::Table2).unwrap();
            if p != TruthValue3::N {
                assert_eq!(p, t2, "{form}");
            }
        }
    }
}

#[test]
fn presup_valid_moods_are_table2_valid() {
    let p = audit_moods(Scheme::Presup, 4).unwrap();
    let t = audit_moods(Scheme::Table2, 4).unwrap();
    for m in &p.valid {
        assert!(t.valid.contains(m), "{m}");
    }
}

/// Independent monadic semantics: a model is a nonempty set of occupied
/// cells, one per combination of `F` and `G`.
fn cell_eval(f: &Formula, cells: &[u8], env: &mut BTreeMap<String, u8>) -> bool {
    match f {
        Formula::Pred(p, args) => {
            let vacuity::Term::Var(v) = &args[0] else {
                unreachable!()
            };
            let c = env[v];
            if p == "F" {
                c & 1 == 1
            } else {
                c & 2 == 2
            }
        }
        Formula::Not(a) => !cell_eval(a, cells, env),
        Formula::And(a, b) => cell_eval(a, cells, env) && cell_eval(b, cells, env),
        Formula::Or(a, b) => cell_eval(a, cells, env) || cell_eval(b, cells, env),
        Formula::Implies(a, b) => !cell_eval(a, cells, env) || cell_eval(b, cells, env),
        Formula::Iff(a, b) => cell_eval(a, cells, env) == cell_eval(b, cells, env),
        Formula::Exists(v, body) | Formula::ForAll(v, body) => {
            let exists = matches!(f, Formula::Exists(..));
            let saved = env.get(v).copied();
            let mut result = !exists;
            for &c in cells {
                env.insert(v.clone(), c);
                if cell_eval(body, cells, env) == exists {
                    result = exists;
                    break;
                }
            }
            match saved {
                Some(s) => env.insert(v.clone(), s),
                None => env.remove(v),
            };
            result
        }
        Formula::Atom(_) => unreachable!(),
    }
}

fn cell_valid(premises: &[Formula], conclusion: &Formula) -> bool {
    (1u8..16).all(|occupied| {
        let cells: Vec<u8> = (0..4).filter(|c| occupied >> c & 1 == 1).collect();
        let mut env = BTreeMap::new();
        !premises.iter().all(|p| cell_eval(p, &cells, &mut env))
            || cell_eval(conclusion, &cells, &mut env)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn small_model_completeness(
        premises in proptest::collection::vec(monadic_sentence(), 0..3),
        conclusion in monadic_sentence(),
    ) {
        let sig = Signature::unary(["F", "G"]);
        let v = check_validity(&premises, &conclusion, &sig, 4, Semantics::Classical).unwrap();
        prop_assert_eq!(v.is_valid(), cell_valid(&premises, &conclusion));
    }
}
