//! Three-valued propositional semantics for truth-relevant tautologies.
//!
//! Formulas are evaluated on their canonical `{~, &}` form. Conjunction and
//! negation follow strong Kleene, with one structural exception: a negated
//! conjunction one of whose conjuncts is classically unsatisfiable is a
//! truth-value gap (`N`) under every valuation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::{canonicalize, render, Formula};

/// Default bound on the number of atoms enumerated by truth tables.
pub const ATOM_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TruthValue3 {
    T,
    F,
    N,
}

impl TruthValue3 {
    pub fn is_true(self) -> bool {
        self == TruthValue3::T
    }

    /// Swaps `T` and `F`; fixes `N`.
    pub fn flip(self) -> Self {
        !self
    }

    /// Strong Kleene conjunction over any number of values (`T` when empty).
    pub fn all(values: impl IntoIterator<Item = TruthValue3>) -> Self {
        values.into_iter().fold(TruthValue3::T, |acc, v| acc & v)
    }

    /// Strong Kleene disjunction over any number of values (`F` when empty).
    pub fn any(values: impl IntoIterator<Item = TruthValue3>) -> Self {
        values.into_iter().fold(TruthValue3::F, |acc, v| acc | v)
    }
}

impl From<bool> for TruthValue3 {
    fn from(b: bool) -> Self {
        if b {
            TruthValue3::T
        } else {
            TruthValue3::F
        }
    }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue3::T => "T",
            TruthValue3::F => "F",
            TruthValue3::N => "N",
        })
    }
}

impl Not for TruthValue3 {
    type Output = Self;

    fn not(self) -> Self {
        match self {
            TruthValue3::T => TruthValue3::F,
            TruthValue3::F => TruthValue3::T,
            TruthValue3::N => TruthValue3::N,
        }
    }
}

impl BitAnd for TruthValue3 {
    type Output = Self;

    fn bitand(self, other: Self) -> Self {
        use TruthValue3::*;
        match (self, other) {
            (F, _) | (_, F) => F,
            (T, T) => T,
            _ => N,
        }
    }
}

impl BitOr for TruthValue3 {
    type Output = Self;

    fn bitor(self, other: Self) -> Self {
        use TruthValue3::*;
        match (self, other) {
            (T, _) | (_, T) => T,
            (F, F) => F,
            _ => N,
        }
    }
}

pub type Valuation = BTreeMap<String, bool>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropError {
    #[error("formula is not propositional: {0}")]
    NonPropositional(String),
    #[error("{atoms} atoms exceed the enumeration cap of {cap}")]
    AtomCap { atoms: usize, cap: usize },
    #[error("valuation does not assign atom {0}")]
    Unassigned(String),
}

fn require_propositional(f: &Formula) -> Result<(), PropError> {
    if f.is_propositional() {
        Ok(())
    } else {
        Err(PropError::NonPropositional(render(f)))
    }
}

/// Two-valued evaluation over the full connective set.
pub fn classical_eval(f: &Formula, v: &Valuation) -> Result<bool, PropError> {
    require_propositional(f)?;
    direct_eval(f, v)
}

fn direct_eval(f: &Formula, v: &Valuation) -> Result<bool, PropError> {
    Ok(match f {
        Formula::Atom(name) => *v
            .get(name)
            .ok_or_else(|| PropError::Unassigned(name.clone()))?,
        Formula::Not(a) => !direct_eval(a, v)?,
        Formula::And(a, b) => direct_eval(a, v)? && direct_eval(b, v)?,
        Formula::Or(a, b) => direct_eval(a, v)? || direct_eval(b, v)?,
        Formula::Implies(a, b) => !direct_eval(a, v)? || direct_eval(b, v)?,
        Formula::Iff(a, b) => direct_eval(a, v)? == direct_eval(b, v)?,
        Formula::Pred(..) | Formula::Exists(..) | Formula::ForAll(..) => {
            return Err(PropError::NonPropositional(render(f)))
        }
    })
}

/// Leaf of a `{~, &}` skeleton: any subformula that is neither a negation nor
/// a conjunction. Structurally equal leaves share one index.
#[derive(Default)]
struct Leaves<'a> {
    index: HashMap<&'a Formula, usize>,
}

impl<'a> Leaves<'a> {
    fn of(&mut self, f: &'a Formula) -> usize {
        let next = self.index.len();
        *self.index.entry(f).or_insert(next)
    }
}

enum Skeleton {
    Leaf(usize),
    Not(Box<Skeleton>),
    And(Box<Skeleton>, Box<Skeleton>),
}

impl Skeleton {
    fn build<'a>(f: &'a Formula, leaves: &mut Leaves<'a>) -> Skeleton {
        match f {
            Formula::Not(a) => Skeleton::Not(Box::new(Skeleton::build(a, leaves))),
            Formula::And(a, b) => Skeleton::And(
                Box::new(Skeleton::build(a, leaves)),
                Box::new(Skeleton::build(b, leaves)),
            ),
            other => Skeleton::Leaf(leaves.of(other)),
        }
    }

    fn eval(&self, bits: u64) -> bool {
        match self {
            Skeleton::Leaf(i) => bits >> i & 1 == 1,
            Skeleton::Not(a) => !a.eval(bits),
            Skeleton::And(a, b) => a.eval(bits) && b.eval(bits),
        }
    }
}

/// Unsatisfiability of a canonical formula's `{~, &}` skeleton, treating every
/// other node (atom, predicate, quantified subformula) as an independent
/// propositional operand.
pub(crate) fn skeleton_unsat(f: &Formula) -> Result<bool, PropError> {
    let mut leaves = Leaves::default();
    let skeleton = Skeleton::build(f, &mut leaves);
    let n = leaves.index.len();
    if n > ATOM_CAP {
        return Err(PropError::AtomCap {
            atoms: n,
            cap: ATOM_CAP,
        });
    }
    Ok((0..1u64 << n).all(|bits| !skeleton.eval(bits)))
}

/// True iff `f` is false under every valuation of its atoms.
pub fn is_unsat(f: &Formula) -> Result<bool, PropError> {
    require_propositional(f)?;
    skeleton_unsat(&canonicalize(f))
}

/// Evaluation program for a canonical formula with the vacuity rule resolved.
enum Program {
    Atom(String),
    Not(Box<Program>),
    And(Box<Program>, Box<Program>),
    Gap,
}

impl Program {
    fn compile(f: &Formula) -> Result<Program, PropError> {
        Ok(match f {
            Formula::Atom(name) => Program::Atom(name.clone()),
            Formula::Not(inner) => match inner.as_ref() {
                Formula::And(a, b) if skeleton_unsat(a)? || skeleton_unsat(b)? => Program::Gap,
                _ => Program::Not(Box::new(Program::compile(inner)?)),
            },
            Formula::And(a, b) => Program::And(
                Box::new(Program::compile(a)?),
                Box::new(Program::compile(b)?),
            ),
            other => return Err(PropError::NonPropositional(render(other))),
        })
    }

    fn eval(
        &self,
        lookup: &impl Fn(&str) -> Result<TruthValue3, PropError>,
    ) -> Result<TruthValue3, PropError> {
        Ok(match self {
            Program::Atom(name) => lookup(name)?,
            Program::Not(a) => !a.eval(lookup)?,
            Program::And(a, b) => a.eval(lookup)? & b.eval(lookup)?,
            Program::Gap => TruthValue3::N,
        })
    }
}

fn compile(f: &Formula) -> Result<Program, PropError> {
    require_propositional(f)?;
    Program::compile(&canonicalize(f))
}

pub fn eval3(f: &Formula, v: &Valuation) -> Result<TruthValue3, PropError> {
    let program = compile(f)?;
    program.eval(&|name| {
        v.get(name)
            .map(|&b| TruthValue3::from(b))
            .ok_or_else(|| PropError::Unassigned(name.to_string()))
    })
}

/// Like [`eval3`], but atoms may themselves carry `N`, e.g. when they stand
/// for sentences evaluated elsewhere.
pub fn eval3_assign(
    f: &Formula,
    values: &BTreeMap<String, TruthValue3>,
) -> Result<TruthValue3, PropError> {
    let program = compile(f)?;
    program.eval(&|name| {
        values
            .get(name)
            .copied()
            .ok_or_else(|| PropError::Unassigned(name.to_string()))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruthRow {
    pub assignment: Vec<bool>,
    pub value: TruthValue3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruthTable {
    pub atoms: Vec<String>,
    pub rows: Vec<TruthRow>,
}

impl TruthTable {
    pub fn all(&self, value: TruthValue3) -> bool {
        self.rows.iter().all(|r| r.value == value)
    }
}

/// Rows enumerate valuations in binary order, first atom most significant,
/// starting from all-false.
pub fn truth_table3(f: &Formula) -> Result<TruthTable, PropError> {
    let program = compile(f)?;
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    if atoms.len() > ATOM_CAP {
        return Err(PropError::AtomCap {
            atoms: atoms.len(),
            cap: ATOM_CAP,
        });
    }
    let n = atoms.len();
    let mut rows = Vec::with_capacity(1 << n);
    for bits in 0..1u64 << n {
        let assignment: Vec<bool> = (0..n).map(|i| bits >> (n - 1 - i) & 1 == 1).collect();
        let value = program.eval(&|name| {
            let i = atoms
                .iter()
                .position(|a| a == name)
                .expect("atom collected");
            Ok(TruthValue3::from(assignment[i]))
        })?;
        rows.push(TruthRow { assignment, value });
    }
    Ok(TruthTable { atoms, rows })
}

pub fn is_trt_tautology(f: &Formula) -> Result<bool, PropError> {
    Ok(truth_table3(f)?.all(TruthValue3::T))
}

/// Classical tautology check by enumeration, for comparison.
pub fn is_classical_tautology(f: &Formula) -> Result<bool, PropError> {
    require_propositional(f)?;
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    if atoms.len() > ATOM_CAP {
        return Err(PropError::AtomCap {
            atoms: atoms.len(),
            cap: ATOM_CAP,
        });
    }
    for bits in 0..1u64 << atoms.len() {
        let v: Valuation = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), bits >> i & 1 == 1))
            .collect();
        if !direct_eval(f, &v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;
    use TruthValue3::*;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn val(pairs: &[(&str, bool)]) -> Valuation {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn kleene_tables() {
        assert_eq!(T & N, N);
        assert_eq!(F & N, F);
        assert_eq!(T | N, T);
        assert_eq!(F | N, N);
        assert_eq!(!N, N);
        assert_eq!(TruthValue3::all([T, N, T]), N);
        assert_eq!(TruthValue3::all([N, F]), F);
        assert_eq!(TruthValue3::any([N, T]), T);
        assert_eq!(TruthValue3::any([]), F);
    }

    #[test]
    fn classical_examples() {
        let contra = p("P & ~P");
        assert!(!classical_eval(&contra, &val(&[("P", true)])).unwrap());
        assert!(!classical_eval(&contra, &val(&[("P", false)])).unwrap());
        let diaz = p("(P & ~P) -> Q");
        assert!(classical_eval(&diaz, &val(&[("P", true), ("Q", false)])).unwrap());
        assert!(classical_eval(&p("P"), &val(&[("P", true)])).unwrap());
    }

    #[test]
    fn unsat_examples() {
        assert!(is_unsat(&p("P & ~P")).unwrap());
        assert!(!is_unsat(&p("P")).unwrap());
        assert!(is_unsat(&p("~~(P & ~P)")).unwrap());
    }

    #[test]
    fn diaz_forms_are_gaps() {
        for s in ["(P & ~P) -> Q", "~(P & ~P) | Q", "~((P & ~P) & ~Q)"] {
            let f = p(s);
            for (pv, qv) in [(false, false), (false, true), (true, false), (true, true)] {
                assert_eq!(eval3(&f, &val(&[("P", pv), ("Q", qv)])).unwrap(), N, "{s}");
            }
            assert!(!is_trt_tautology(&f).unwrap());
            assert!(is_classical_tautology(&f).unwrap());
        }
    }

    #[test]
    fn positive_controls() {
        for s in ["P | ~P", "P -> P", "((P -> Q) & P) -> Q"] {
            assert!(is_trt_tautology(&p(s)).unwrap(), "{s}");
        }
    }

    #[test]
    fn vacuous_disjunct_absorbs_after_canonicalization() {
        // canonical form is ~(~R & ((P & ~P) & ~Q)); the second conjunct is
        // unsatisfiable, so the gap fires regardless of R
        let f = p("R | ((P & ~P) -> Q)");
        assert_eq!(canonicalize(&f), p("~(~R & ((P & ~P) & ~Q))"));
        assert!(truth_table3(&f).unwrap().all(N));
    }

    #[test]
    fn tables() {
        let t = truth_table3(&p("P")).unwrap();
        assert_eq!(t.atoms, vec!["P"]);
        assert_eq!(
            t.rows,
            vec![
                TruthRow {
                    assignment: vec![false],
                    value: F
                },
                TruthRow {
                    assignment: vec![true],
                    value: T
                },
            ]
        );
        let t = truth_table3(&p("(P & ~P) -> Q")).unwrap();
        assert_eq!(t.rows.len(), 4);
        assert!(t.all(N));
        let t = truth_table3(&p("P & Q")).unwrap();
        let values: Vec<_> = t.rows.iter().map(|r| r.value).collect();
        assert_eq!(values, vec![F, F, F, T]);
        assert_eq!(t.rows[1].assignment, vec![false, true]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            eval3(&p("F(x)"), &Valuation::new()),
            Err(PropError::NonPropositional(_))
        ));
        assert_eq!(
            eval3(&p("P"), &Valuation::new()),
            Err(PropError::Unassigned("P".into()))
        );
        let wide = (0..21)
            .map(|i| format!("A{i}"))
            .collect::<Vec<_>>()
            .join(" & ");
        assert_eq!(
            is_unsat(&p(&wide)),
            Err(PropError::AtomCap { atoms: 21, cap: 20 })
        );
    }

    #[test]
    fn gap_atoms_propagate() {
        let j = p("G <-> H");
        let values = BTreeMap::from([("G".to_string(), N), ("H".to_string(), T)]);
        assert_eq!(eval3_assign(&j, &values).unwrap(), N);
        let values = BTreeMap::from([("G".to_string(), T), ("H".to_string(), T)]);
        assert_eq!(eval3_assign(&j, &values).unwrap(), T);
    }
}
