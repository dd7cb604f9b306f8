use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use super::SyntaxError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Numeral(BigUint),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn numeral(value: impl Into<BigUint>) -> Self {
        Term::Numeral(value.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Pred(String, Vec<Term>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    ForAll(String, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn pred(name: impl Into<String>, args: Vec<Term>) -> Self {
        Formula::Pred(name.into(), args)
    }

    /// Unary predicate applied to a variable: `F(x)`.
    pub fn unary(name: impl Into<String>, var: impl Into<String>) -> Self {
        Formula::Pred(name.into(), vec![Term::Var(var.into())])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Self {
        Formula::Exists(var.into(), Box::new(body))
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Self {
        Formula::ForAll(var.into(), Box::new(body))
    }

    pub fn is_quantifier(&self) -> bool {
        matches!(self, Formula::Exists(..) | Formula::ForAll(..))
    }

    pub fn is_binary(&self) -> bool {
        matches!(
            self,
            Formula::And(..) | Formula::Or(..) | Formula::Implies(..) | Formula::Iff(..)
        )
    }

    /// True when the formula has no predicates with arguments and no quantifiers.
    pub fn is_propositional(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Pred(..) | Formula::Exists(..) | Formula::ForAll(..) => false,
            Formula::Not(a) => a.is_propositional(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.is_propositional() && b.is_propositional(),
        }
    }

    pub fn free_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(_) => {}
            Formula::Pred(_, args) => {
                for t in args {
                    if let Term::Var(v) = t {
                        if !bound.iter().any(|b| b == v) {
                            out.insert(v.clone());
                        }
                    }
                }
            }
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(v, body) | Formula::ForAll(v, body) => {
                bound.push(v.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Replaces every free occurrence of `var` by `term`, which must be a numeral.
    pub fn substitute(&self, var: &str, term: &Term) -> Result<Formula, SyntaxError> {
        match term {
            Term::Var(v) => Err(SyntaxError::NonNumeralSubstitution(v.clone())),
            Term::Numeral(_) => Ok(self.subst(var, term)),
        }
    }

    fn subst(&self, var: &str, term: &Term) -> Formula {
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Pred(name, args) => Formula::Pred(
                name.clone(),
                args.iter()
                    .map(|t| match t {
                        Term::Var(v) if v == var => term.clone(),
                        _ => t.clone(),
                    })
                    .collect(),
            ),
            Formula::Not(a) => Formula::not(a.subst(var, term)),
            Formula::And(a, b) => Formula::and(a.subst(var, term), b.subst(var, term)),
            Formula::Or(a, b) => Formula::or(a.subst(var, term), b.subst(var, term)),
            Formula::Implies(a, b) => Formula::implies(a.subst(var, term), b.subst(var, term)),
            Formula::Iff(a, b) => Formula::iff(a.subst(var, term), b.subst(var, term)),
            Formula::Exists(v, _) | Formula::ForAll(v, _) if v == var => self.clone(),
            Formula::Exists(v, body) => Formula::exists(v.clone(), body.subst(var, term)),
            Formula::ForAll(v, body) => Formula::forall(v.clone(), body.subst(var, term)),
        }
    }

    /// Arity of every predicate symbol; atoms count as arity 0.
    pub fn arities(&self) -> Result<BTreeMap<String, usize>, SyntaxError> {
        let mut map = BTreeMap::new();
        self.collect_arities(&mut map)?;
        Ok(map)
    }

    pub(crate) fn collect_arities(
        &self,
        map: &mut BTreeMap<String, usize>,
    ) -> Result<(), SyntaxError> {
        let mut record = |name: &str, arity: usize| match map.get(name) {
            Some(&first) if first != arity => Err(SyntaxError::ArityConflict {
                name: name.to_string(),
                first,
                second: arity,
            }),
            Some(_) => Ok(()),
            None => {
                map.insert(name.to_string(), arity);
                Ok(())
            }
        };
        match self {
            Formula::Atom(name) => record(name, 0),
            Formula::Pred(name, args) => record(name, args.len()),
            Formula::Not(a) | Formula::Exists(_, a) | Formula::ForAll(_, a) => {
                a.collect_arities(map)
            }
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_arities(map)?;
                b.collect_arities(map)
            }
        }
    }

    /// Propositional atom names, sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(n) = f {
                out.insert(n.clone());
            }
        });
        out
    }

    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        match self {
            Formula::Atom(_) | Formula::Pred(..) => {}
            Formula::Not(a) | Formula::Exists(_, a) | Formula::ForAll(_, a) => a.visit(f),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    #[test]
    fn free_variables_of_u() {
        let u = parse_formula("~(exists x. exists z. (Prf(x,z) & Diag(y,z)))").unwrap();
        assert_eq!(u.free_variables(), BTreeSet::from(["y".to_string()]));
        assert!(Formula::atom("P").free_variables().is_empty());
        let f = parse_formula("exists x. F(x) & G(y)").unwrap();
        assert_eq!(f.free_variables(), BTreeSet::from(["y".to_string()]));
    }

    #[test]
    fn substitute_only_free_occurrences() {
        let f = parse_formula("Diag(y,y) & exists y. Diag(y,z)").unwrap();
        let g = f.substitute("y", &Term::numeral(7u32)).unwrap();
        assert_eq!(g, parse_formula("Diag(7,7) & exists y. Diag(y,z)").unwrap());
        let p = Formula::atom("P");
        assert_eq!(p.substitute("x", &Term::numeral(5u32)).unwrap(), p);
        assert_eq!(
            p.substitute("x", &Term::var("y")),
            Err(SyntaxError::NonNumeralSubstitution("y".into()))
        );
    }

    #[test]
    fn substitute_u_gives_g() {
        let u = parse_formula("~(exists x. exists z. (Prf(x,z) & Diag(y,z)))").unwrap();
        let g = u.substitute("y", &Term::numeral(42u32)).unwrap();
        assert_eq!(
            g,
            parse_formula("~(exists x. exists z. (Prf(x,z) & Diag(42,z)))").unwrap()
        );
        assert!(g.is_closed());
    }
}
