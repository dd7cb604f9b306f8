use super::Formula;

/// Rewrites into the `{~, &, exists}` basis with no double negations.
///
/// `A -> B` becomes `~(A & ~B)`, `A | B` becomes `~(~A & ~B)`, `A <-> B`
/// becomes `~(A & ~B) & ~(B & ~A)` and `forall x. A` becomes
/// `~(exists x. ~A)`. Idempotent.
pub fn canonicalize(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Pred(..) => f.clone(),
        Formula::Not(a) => negate(canonicalize(a)),
        Formula::And(a, b) => Formula::and(canonicalize(a), canonicalize(b)),
        Formula::Or(a, b) => negate(Formula::and(
            negate(canonicalize(a)),
            negate(canonicalize(b)),
        )),
        Formula::Implies(a, b) => negate(Formula::and(canonicalize(a), negate(canonicalize(b)))),
        Formula::Iff(a, b) => {
            let (a, b) = (canonicalize(a), canonicalize(b));
            Formula::and(
                negate(Formula::and(a.clone(), negate(b.clone()))),
                negate(Formula::and(b, negate(a))),
            )
        }
        Formula::Exists(v, body) => Formula::exists(v.clone(), canonicalize(body)),
        Formula::ForAll(v, body) => negate(Formula::exists(v.clone(), negate(canonicalize(body)))),
    }
}

fn negate(f: Formula) -> Formula {
    match f {
        Formula::Not(inner) => *inner,
        other => Formula::not(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn canon(s: &str) -> Formula {
        canonicalize(&parse_formula(s).unwrap())
    }

    #[test]
    fn diaz_family_collapses() {
        let target = parse_formula("~((P & ~P) & ~Q)").unwrap();
        for s in ["(P & ~P) -> Q", "~(P & ~P) | Q", "~((P & ~P) & ~Q)"] {
            assert_eq!(canon(s), target, "{s}");
        }
    }

    #[test]
    fn universal_family_collapses() {
        let target = parse_formula("~(exists x. (F(x) & ~G(x)))").unwrap();
        for s in [
            "forall x. (F(x) -> G(x))",
            "forall x. (~F(x) | G(x))",
            "~(exists x. (F(x) & ~G(x)))",
        ] {
            assert_eq!(canon(s), target, "{s}");
        }
    }

    #[test]
    fn double_negation() {
        assert_eq!(canon("~~P"), Formula::atom("P"));
        assert_eq!(canon("~~~P"), Formula::not(Formula::atom("P")));
    }

    #[test]
    fn biconditional() {
        assert_eq!(
            canon("P <-> Q"),
            parse_formula("~(P & ~Q) & ~(Q & ~P)").unwrap()
        );
    }
}
