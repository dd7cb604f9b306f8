#![allow(dead_code)]

use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::strategy::BoxedStrategy;

use vacuity::fol3::{Interpretation, ModelSpace, Signature};
use vacuity::goedel::ALPHABET;
use vacuity::{Formula, Term};

pub const ATOMS: [&str; 4] = ["P", "Q", "R", "S"];
pub const VARS: [&str; 3] = ["x", "y", "z"];

fn connectives(leaf: BoxedStrategy<Formula>, depth: u32) -> BoxedStrategy<Formula> {
    leaf.prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
    .boxed()
}

/// Propositional formulas over at most four atoms.
pub fn prop_formula() -> BoxedStrategy<Formula> {
    let leaf = proptest::sample::select(ATOMS.to_vec())
        .prop_map(Formula::atom)
        .boxed();
    connectives(leaf, 5)
}

fn var() -> impl Strategy<Value = String> {
    proptest::sample::select(VARS.to_vec()).prop_map(str::to_string)
}

/// Formulas over unary `F`, `G` and binary `R`, possibly open.
pub fn fol_open() -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        var().prop_map(|v| Formula::unary("F", v)),
        var().prop_map(|v| Formula::unary("G", v)),
        (var(), var()).prop_map(|(a, b)| Formula::pred("R", vec![Term::var(a), Term::var(b)])),
    ]
    .boxed();
    leaf.prop_recursive(5, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
            (var(), inner.clone()).prop_map(|(v, b)| Formula::exists(v, b)),
            (var(), inner).prop_map(|(v, b)| Formula::forall(v, b)),
        ]
    })
    .boxed()
}

/// Closes a formula by binding its free variables.
pub fn close(f: Formula, universal: bool) -> Formula {
    f.free_variables().into_iter().fold(f, |acc, v| {
        if universal {
            Formula::forall(v, acc)
        } else {
            Formula::exists(v, acc)
        }
    })
}

pub fn fol_sentence() -> BoxedStrategy<Formula> {
    (fol_open(), any::<bool>())
        .prop_map(|(f, u)| close(f, u))
        .boxed()
}

pub fn fol_signature() -> Signature {
    Signature::unary(["F", "G"]).with("R", 2)
}

/// A random model of [`fol_signature`] with 1..=3 elements.
pub fn fol_model() -> BoxedStrategy<Interpretation> {
    (1usize..=3, any::<u64>())
        .prop_map(|(n, seed)| {
            let space = ModelSpace::new(&fol_signature(), n).unwrap();
            space.model(seed % space.count())
        })
        .boxed()
}

/// Sentences over unary `F` and `G` only.
pub fn monadic_sentence() -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        var().prop_map(|v| Formula::unary("F", v)),
        var().prop_map(|v| Formula::unary("G", v)),
    ]
    .boxed();
    let open = leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (var(), inner.clone()).prop_map(|(v, b)| Formula::exists(v, b)),
            (var(), inner).prop_map(|(v, b)| Formula::forall(v, b)),
        ]
    });
    (open, any::<bool>()).prop_map(|(f, u)| close(f, u)).boxed()
}

pub fn numeral() -> impl Strategy<Value = BigUint> {
    prop_oneof![
        (0u64..20).prop_map(BigUint::from),
        any::<u64>().prop_map(BigUint::from),
        proptest::collection::vec(any::<u32>(), 1..6).prop_map(BigUint::new),
    ]
}

/// Formulas written only with the coding alphabet.
pub fn expressible_formula() -> BoxedStrategy<Formula> {
    let term = prop_oneof![var().prop_map(Term::Var), numeral().prop_map(Term::Numeral),];
    let leaf = (proptest::bool::ANY, term.clone(), term)
        .prop_map(|(prf, a, b)| Formula::pred(if prf { "Prf" } else { "Diag" }, vec![a, b]))
        .boxed();
    leaf.prop_recursive(5, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (var(), inner).prop_map(|(v, b)| Formula::exists(v, b)),
        ]
    })
    .boxed()
}

pub fn token_sequence() -> impl Strategy<Value = Vec<&'static str>> {
    proptest::collection::vec(proptest::sample::select(ALPHABET.to_vec()), 1..=64)
}

/// Renames every binder of `var` and its bound occurrences to `fresh`.
pub fn rename_bound(f: &Formula, var: &str, fresh: &str) -> Formula {
    let r = |g: &Formula| rename_bound(g, var, fresh);
    match f {
        Formula::Atom(_) | Formula::Pred(..) => f.clone(),
        Formula::Not(a) => Formula::not(r(a)),
        Formula::And(a, b) => Formula::and(r(a), r(b)),
        Formula::Or(a, b) => Formula::or(r(a), r(b)),
        Formula::Implies(a, b) => Formula::implies(r(a), r(b)),
        Formula::Iff(a, b) => Formula::iff(r(a), r(b)),
        Formula::Exists(v, body) | Formula::ForAll(v, body) => {
            let (v, body) = if v == var {
                (fresh.to_string(), rename_free(body, var, fresh))
            } else {
                (v.clone(), (**body).clone())
            };
            let body = r(&body);
            if matches!(f, Formula::Exists(..)) {
                Formula::exists(v, body)
            } else {
                Formula::forall(v, body)
            }
        }
    }
}

fn rename_free(f: &Formula, var: &str, fresh: &str) -> Formula {
    let r = |g: &Formula| rename_free(g, var, fresh);
    let t = |x: &Term| match x {
        Term::Var(v) if v == var => Term::var(fresh),
        other => other.clone(),
    };
    match f {
        Formula::Atom(_) => f.clone(),
        Formula::Pred(p, args) => Formula::pred(p.clone(), args.iter().map(t).collect()),
        Formula::Not(a) => Formula::not(r(a)),
        Formula::And(a, b) => Formula::and(r(a), r(b)),
        Formula::Or(a, b) => Formula::or(r(a), r(b)),
        Formula::Implies(a, b) => Formula::implies(r(a), r(b)),
        Formula::Iff(a, b) => Formula::iff(r(a), r(b)),
        Formula::Exists(v, _) | Formula::ForAll(v, _) if v == var => f.clone(),
        Formula::Exists(v, body) => Formula::exists(v.clone(), r(body)),
        Formula::ForAll(v, body) => Formula::forall(v.clone(), r(body)),
    }
}
