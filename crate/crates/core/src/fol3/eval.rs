//! Compiled evaluation of first-order formulas over a finite interpretation.
//!
//! Formulas are compiled once against an interpretation's schema (domain and
//! predicate arities) and may then be evaluated against any interpretation
//! with the same schema, which is what model enumeration relies on.

use std::fmt;

use serde::Serialize;

use super::{FolError, Interpretation, Relation};
use crate::prop3::{skeleton_unsat, TruthValue3};
use crate::syntax::{canonicalize, render, Formula, Term};

/// Why a formula came out neither true nor false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GapReason {
    /// A term of a negated existential conjunction has an empty extension.
    EmptyTerm { term: String },
    /// A negated conjunction has a classically unsatisfiable conjunct.
    UnsatisfiableConjunct { conjunct: String },
}

impl fmt::Display for GapReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GapReason::EmptyTerm { term } => {
                write!(f, "presupposition failed: term {term} is empty")
            }
            GapReason::UnsatisfiableConjunct { conjunct } => {
                write!(f, "vacuous: conjunct {conjunct} is unsatisfiable")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub value: TruthValue3,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<GapReason>,
}

/// The rule for `~(exists x. (a & b))` under presupposition semantics: a gap
/// when either term is empty, otherwise the classical value.
pub fn vacuity_verdict(
    left_nonempty: bool,
    right_nonempty: bool,
    joint_nonempty: bool,
) -> TruthValue3 {
    if !left_nonempty || !right_nonempty {
        TruthValue3::N
    } else {
        TruthValue3::from(!joint_nonempty)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Classical,
    Gap,
}

#[derive(Debug, Clone)]
enum Arg {
    Slot(usize),
    Elem(usize),
}

#[derive(Debug, Clone)]
enum Node {
    Pred {
        rel: usize,
        args: Vec<Arg>,
    },
    Not(Box<Node>),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Implies(Box<Node>, Box<Node>),
    Iff(Box<Node>, Box<Node>),
    Exists {
        slot: usize,
        body: Box<Node>,
    },
    ForAll {
        slot: usize,
        body: Box<Node>,
    },
    /// `~(exists x. (left & right))` with both terms compiled classically.
    Vacuity {
        slot: usize,
        left: Box<Node>,
        right: Box<Node>,
        left_label: String,
        right_label: String,
    },
    /// Subformula evaluated classically even in gap mode.
    Opaque(Box<Node>),
    /// Negated conjunction with an unsatisfiable conjunct.
    GapNot {
        inner: Box<Node>,
        label: String,
    },
}

struct Compiler<'a> {
    interp: &'a Interpretation,
    mode: Mode,
    rels: Vec<String>,
    scope: Vec<(String, usize)>,
    next_slot: usize,
    max_slot: usize,
}

impl<'a> Compiler<'a> {
    fn relation(&mut self, name: &str, arity: usize) -> Result<usize, FolError> {
        let rel = self
            .interp
            .relation(name)
            .ok_or_else(|| FolError::MissingPredicate(name.to_string()))?;
        if let Some(expected) = rel.arity() {
            if expected != arity {
                return Err(FolError::ArityMismatch {
                    predicate: name.to_string(),
                    expected,
                    found: arity,
                });
            }
        }
        Ok(match self.rels.iter().position(|r| r == name) {
            Some(i) => i,
            None => {
                self.rels.push(name.to_string());
                self.rels.len() - 1
            }
        })
    }

    fn arg(&self, t: &Term) -> Result<Arg, FolError> {
        match t {
            Term::Var(v) => self
                .scope
                .iter()
                .rev()
                .find(|(name, _)| name == v)
                .map(|&(_, slot)| Arg::Slot(slot))
                .ok_or_else(|| FolError::UnboundVariable(v.clone())),
            Term::Numeral(n) => {
                let name = n.to_string();
                self.interp
                    .element_index(&name)
                    .map(Arg::Elem)
                    .ok_or(FolError::UnknownElement(name))
            }
        }
    }

    fn bind<T>(
        &mut self,
        var: &str,
        body: impl FnOnce(&mut Self) -> Result<T, FolError>,
    ) -> Result<(usize, T), FolError> {
        let slot = self.next_slot;
        self.next_slot += 1;
        self.max_slot = self.max_slot.max(self.next_slot);
        self.scope.push((var.to_string(), slot));
        let out = body(self);
        self.scope.pop();
        self.next_slot -= 1;
        Ok((slot, out?))
    }

    fn classical(&mut self, f: &Formula) -> Result<Node, FolError> {
        let bin =
            |c: &mut Self, a: &Formula, b: &Formula| -> Result<(Box<Node>, Box<Node>), FolError> {
                Ok((Box::new(c.classical(a)?), Box::new(c.classical(b)?)))
            };
        Ok(match f {
            Formula::Atom(name) => Node::Pred {
                rel: self.relation(name, 0)?,
                args: Vec::new(),
            },
            Formula::Pred(name, args) => Node::Pred {
                rel: self.relation(name, args.len())?,
                args: args.iter().map(|t| self.arg(t)).collect::<Result<_, _>>()?,
            },
            Formula::Not(a) => Node::Not(Box::new(self.classical(a)?)),
            Formula::And(a, b) => {
                let (a, b) = bin(self, a, b)?;
                Node::And(a, b)
            }
            Formula::Or(a, b) => {
                let (a, b) = bin(self, a, b)?;
                Node::Or(a, b)
            }
            Formula::Implies(a, b) => {
                let (a, b) = bin(self, a, b)?;
                Node::Implies(a, b)
            }
            Formula::Iff(a, b) => {
                let (a, b) = bin(self, a, b)?;
                Node::Iff(a, b)
            }
            Formula::Exists(v, body) => {
                let (slot, body) = self.bind(v, |c| c.classical(body))?;
                Node::Exists {
                    slot,
                    body: Box::new(body),
                }
            }
            Formula::ForAll(v, body) => {
                let (slot, body) = self.bind(v, |c| c.classical(body))?;
                Node::ForAll {
                    slot,
                    body: Box::new(body),
                }
            }
        })
    }

    /// Compiles a canonical formula for three-valued evaluation.
    fn gap(&mut self, f: &Formula) -> Result<Node, FolError> {
        Ok(match f {
            Formula::Atom(_) | Formula::Pred(..) => self.classical(f)?,
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Exists(v, body) => match body.as_ref() {
                    Formula::And(a, b) => {
                        let (slot, (left, right)) =
                            self.bind(v, |c| Ok((c.classical(a)?, c.classical(b)?)))?;
                        Node::Vacuity {
                            slot,
                            left: Box::new(left),
                            right: Box::new(right),
                            left_label: term_label(a, v),
                            right_label: term_label(b, v),
                        }
                    }
                    _ => Node::Opaque(Box::new(self.classical(f)?)),
                },
                Formula::And(a, b) => {
                    let unsat_a = skeleton_unsat(a)?;
                    if unsat_a || skeleton_unsat(b)? {
                        let culprit = if unsat_a { a } else { b };
                        Node::GapNot {
                            inner: Box::new(self.classical(inner)?),
                            label: render(culprit),
                        }
                    } else {
                        Node::Not(Box::new(self.gap(inner)?))
                    }
                }
                _ => Node::Not(Box::new(self.gap(inner)?)),
            },
            Formula::And(a, b) => Node::And(Box::new(self.gap(a)?), Box::new(self.gap(b)?)),
            Formula::Exists(v, body) => {
                let (slot, body) = self.bind(v, |c| c.gap(body))?;
                Node::Exists {
                    slot,
                    body: Box::new(body),
                }
            }
            // canonical input never contains these
            Formula::Or(..) | Formula::Implies(..) | Formula::Iff(..) | Formula::ForAll(..) => {
                self.gap(&canonicalize(f))?
            }
        })
    }
}

/// Short name for a presupposition term: `F` for `F(x)`, `~G` for `~G(x)`.
fn term_label(term: &Formula, var: &str) -> String {
    let simple = |f: &Formula| match f {
        Formula::Pred(name, args) if matches!(args.as_slice(), [Term::Var(v)] if v == var) => {
            Some(name.clone())
        }
        _ => None,
    };
    match term {
        Formula::Not(inner) => simple(inner).map(|n| format!("~{n}")),
        other => simple(other),
    }
    .unwrap_or_else(|| render(term))
}

/// A formula compiled against an interpretation schema.
#[derive(Debug, Clone)]
pub struct CompiledFormula {
    root: Node,
    mode: Mode,
    rels: Vec<String>,
    slot_count: usize,
    /// Initial slot values taken from the environment (and the probe variable).
    presets: Vec<(usize, Option<usize>)>,
    size: usize,
}

struct Ctx<'a> {
    rels: Vec<&'a Relation>,
    size: usize,
    slots: Vec<usize>,
}

impl CompiledFormula {
    /// Compiles `f` so that its free variables are read from `interp`'s
    /// environment, except `probe`, which is left for the caller to set.
    fn build(
        f: &Formula,
        interp: &Interpretation,
        mode: Mode,
        probe: Option<&str>,
    ) -> Result<Self, FolError> {
        let mut c = Compiler {
            interp,
            mode,
            rels: Vec::new(),
            scope: Vec::new(),
            next_slot: 0,
            max_slot: 0,
        };
        let mut presets = Vec::new();
        for v in f.free_variables() {
            let value = if Some(v.as_str()) == probe {
                None
            } else {
                Some(
                    *interp
                        .env()
                        .get(&v)
                        .ok_or_else(|| FolError::UnboundVariable(v.clone()))?,
                )
            };
            presets.push((c.next_slot, value));
            c.scope.push((v, c.next_slot));
            c.next_slot += 1;
        }
        c.max_slot = c.next_slot;
        let root = match c.mode {
            Mode::Classical => c.classical(f)?,
            Mode::Gap => c.gap(&canonicalize(f))?,
        };
        Ok(CompiledFormula {
            root,
            mode,
            rels: c.rels,
            slot_count: c.max_slot,
            presets,
            size: interp.size(),
        })
    }

    pub fn compile(f: &Formula, interp: &Interpretation, mode: Mode) -> Result<Self, FolError> {
        Self::build(f, interp, mode, None)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn ctx<'a>(&self, interp: &'a Interpretation) -> Ctx<'a> {
        assert_eq!(interp.size(), self.size, "interpretation schema changed");
        let rels = self
            .rels
            .iter()
            .map(|r| {
                interp
                    .relation(r)
                    .expect("relation present at compile time")
            })
            .collect();
        let mut slots = vec![0; self.slot_count];
        for &(slot, value) in &self.presets {
            if let Some(v) = value {
                slots[slot] = v;
            }
        }
        Ctx {
            rels,
            size: interp.size(),
            slots,
        }
    }

    pub fn eval_classical(&self, interp: &Interpretation) -> bool {
        let mut ctx = self.ctx(interp);
        classical(&self.root, &mut ctx)
    }

    /// Three-valued value; for formulas compiled in classical mode this is
    /// just the lifted classical value.
    pub fn eval3(&self, interp: &Interpretation) -> TruthValue3 {
        self.explain(interp).0
    }

    fn explain<'s>(&'s self, interp: &Interpretation) -> (TruthValue3, Option<Why<'s>>) {
        let mut ctx = self.ctx(interp);
        match self.mode {
            Mode::Classical => (TruthValue3::from(classical(&self.root, &mut ctx)), None),
            Mode::Gap => {
                let mut why = None;
                let v = gap(&self.root, &mut ctx, &mut why);
                (v, why)
            }
        }
    }

    pub fn evaluate(&self, interp: &Interpretation) -> Evaluation {
        let (value, why) = self.explain(interp);
        Evaluation {
            value,
            gap: if value == TruthValue3::N {
                why.map(Why::into_reason)
            } else {
                None
            },
        }
    }
}

#[derive(Clone, Copy)]
enum Why<'a> {
    Empty(&'a str),
    Unsat(&'a str),
}

impl Why<'_> {
    fn into_reason(self) -> GapReason {
        match self {
            Why::Empty(t) => GapReason::EmptyTerm {
                term: t.to_string(),
            },
            Why::Unsat(c) => GapReason::UnsatisfiableConjunct {
                conjunct: c.to_string(),
            },
        }
    }
}

#[inline]
fn pred_holds(rel: usize, args: &[Arg], ctx: &Ctx<'_>) -> bool {
    let mut index = 0;
    for a in args {
        let e = match *a {
            Arg::Slot(s) => ctx.slots[s],
            Arg::Elem(e) => e,
        };
        index = index * ctx.size + e;
    }
    ctx.rels[rel].contains_index(index)
}

fn classical(node: &Node, ctx: &mut Ctx<'_>) -> bool {
    match node {
        Node::Pred { rel, args } => pred_holds(*rel, args, ctx),
        Node::Not(a) => !classical(a, ctx),
        Node::And(a, b) => classical(a, ctx) && classical(b, ctx),
        Node::Or(a, b) => classical(a, ctx) || classical(b, ctx),
        Node::Implies(a, b) => !classical(a, ctx) || classical(b, ctx),
        Node::Iff(a, b) => classical(a, ctx) == classical(b, ctx),
        Node::Exists { slot, body } => (0..ctx.size).any(|d| {
            ctx.slots[*slot] = d;
            classical(body, ctx)
        }),
        Node::ForAll { slot, body } => (0..ctx.size).all(|d| {
            ctx.slots[*slot] = d;
            classical(body, ctx)
        }),
        Node::Vacuity {
            slot, left, right, ..
        } => !(0..ctx.size).any(|d| {
            ctx.slots[*slot] = d;
            classical(left, ctx) && classical(right, ctx)
        }),
        Node::Opaque(a) => classical(a, ctx),
        Node::GapNot { inner, .. } => !classical(inner, ctx),
    }
}

fn gap<'s>(node: &'s Node, ctx: &mut Ctx<'_>, why: &mut Option<Why<'s>>) -> TruthValue3 {
    use TruthValue3::*;
    match node {
        Node::Pred { rel, args } => TruthValue3::from(pred_holds(*rel, args, ctx)),
        Node::Not(a) => !gap(a, ctx, why),
        Node::And(a, b) => {
            let mut wa = None;
            let va = gap(a, ctx, &mut wa);
            if va == F {
                return F;
            }
            let mut wb = None;
            let vb = gap(b, ctx, &mut wb);
            let v = va & vb;
            if v == N {
                *why = if va == N { wa } else { wb };
            }
            v
        }
        Node::Exists { slot, body } => {
            let mut first_gap = None;
            let mut seen_gap = false;
            for d in 0..ctx.size {
                ctx.slots[*slot] = d;
                let mut w = None;
                match gap(body, ctx, &mut w) {
                    T => return T,
                    N if !seen_gap => {
                        seen_gap = true;
                        first_gap = w;
                    }
                    _ => {}
                }
            }
            if seen_gap {
                *why = first_gap;
                N
            } else {
                F
            }
        }
        Node::Vacuity {
            slot,
            left,
            right,
            left_label,
            right_label,
        } => {
            let (mut l, mut r, mut joint) = (false, false, false);
            for d in 0..ctx.size {
                ctx.slots[*slot] = d;
                let a = classical(left, ctx);
                let b = classical(right, ctx);
                l |= a;
                r |= b;
                joint |= a && b;
                if joint {
                    break;
                }
            }
            let v = vacuity_verdict(l, r, joint);
            if v == N {
                *why = Some(Why::Empty(if !l { left_label } else { right_label }));
            }
            v
        }
        Node::Opaque(a) => TruthValue3::from(classical(a, ctx)),
        Node::GapNot { label, .. } => {
            *why = Some(Why::Unsat(label));
            N
        }
        Node::Or(a, b) => gap(a, ctx, why) | gap(b, ctx, why),
        Node::Implies(a, b) => !gap(a, ctx, why) | gap(b, ctx, why),
        Node::Iff(..) | Node::ForAll { .. } => TruthValue3::from(classical(node, ctx)),
    }
}

/// Two-valued Tarskian evaluation of a formula closed under the environment.
pub fn eval_classical_fol(f: &Formula, interp: &Interpretation) -> Result<bool, FolError> {
    Ok(CompiledFormula::compile(f, interp, Mode::Classical)?.eval_classical(interp))
}

/// Presuppositional evaluation on the canonical form.
pub fn eval3_fol(f: &Formula, interp: &Interpretation) -> Result<TruthValue3, FolError> {
    Ok(CompiledFormula::compile(f, interp, Mode::Gap)?.eval3(interp))
}

/// [`eval3_fol`] plus the reason for a gap, if any.
pub fn eval3_fol_explain(f: &Formula, interp: &Interpretation) -> Result<Evaluation, FolError> {
    Ok(CompiledFormula::compile(f, interp, Mode::Gap)?.evaluate(interp))
}

/// Elements `d` for which `f` is classically true with `var := d`, in domain order.
pub fn sat_set(f: &Formula, var: &str, interp: &Interpretation) -> Result<Vec<String>, FolError> {
    let compiled = CompiledFormula::build(f, interp, Mode::Classical, Some(var))?;
    let probe = compiled
        .presets
        .iter()
        .find(|(_, v)| v.is_none())
        .map(|&(slot, _)| slot);
    let mut ctx = compiled.ctx(interp);
    Ok(interp
        .domain()
        .iter()
        .enumerate()
        .filter(|&(d, _)| {
            if let Some(slot) = probe {
                ctx.slots[slot] = d;
            }
            classical(&compiled.root, &mut ctx)
        })
        .map(|(_, name)| name.clone())
        .collect())
}
