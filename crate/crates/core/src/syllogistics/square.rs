use serde::Serialize;

use super::forms::{eval_categorical, CategoricalForm, Letter, Scheme};
use crate::fol3::{FolError, Interpretation, ModelFile, ModelSpace, Signature};
use crate::prop3::TruthValue3;

use TruthValue3::{F, T};

/// The forms over the fixed terms (F, G) that the laws mention.
#[derive(Debug, Clone, Copy)]
struct Square {
    a: TruthValue3,
    e: TruthValue3,
    i: TruthValue3,
    o: TruthValue3,
    e_conv: TruthValue3,
    i_conv: TruthValue3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LawGroup {
    Contraries,
    Subcontraries,
    Contradictories,
    Subalternation,
    Conversion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub statement: String,
    pub holds: bool,
    /// Countermodel for a violated "no model" clause, or the witness of a
    /// satisfied "some model" clause.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: String,
    pub group: LawGroup,
    pub passed: bool,
    pub clauses: Vec<ClauseResult>,
}

impl LawResult {
    /// First countermodel among the failed clauses.
    pub fn countermodel(&self) -> Option<&ModelFile> {
        self.clauses
            .iter()
            .find(|c| !c.holds && c.model.is_some())
            .and_then(|c| c.model.as_ref())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareReport {
    pub scheme: Scheme,
    pub max_domain: usize,
    pub models_checked: u64,
    pub laws: Vec<LawResult>,
}

impl SquareReport {
    pub fn all_passed(&self) -> bool {
        self.laws.iter().all(|l| l.passed)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.laws
            .iter()
            .filter(|l| !l.passed)
            .map(|l| l.law.as_str())
            .collect()
    }

    pub fn law(&self, name: &str) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.law == name)
    }

    /// Whether exactly the laws in [`expected_failures`] failed.
    pub fn matches_expected(&self) -> bool {
        self.failed() == expected_failures(self.scheme)
    }
}

/// Laws that fail for a scheme: the ones needing a nonempty subject fail
/// without existential import, none fail otherwise.
pub fn expected_failures(scheme: Scheme) -> &'static [&'static str] {
    match scheme {
        Scheme::Table1 => &[
            "contraries(A,E)",
            "subcontraries(I,O)",
            "subalternation(A,I)",
            "subalternation(E,O)",
            "conversion(A per accidens)",
        ],
        Scheme::Table2 | Scheme::Presup => &[],
    }
}

type Pick = fn(&Square) -> (TruthValue3, TruthValue3);

enum Clause {
    /// No model gives the pair these values.
    Never(&'static str, Pick, TruthValue3, TruthValue3),
    /// Some model gives the pair these values.
    Sometimes(&'static str, Pick, TruthValue3, TruthValue3),
    /// Whenever the first is T, so is the second.
    Preserves(&'static str, Pick),
}

struct Law {
    name: &'static str,
    group: LawGroup,
    clauses: Vec<Clause>,
}

fn laws() -> Vec<Law> {
    use Clause::*;
    use LawGroup::*;
    vec![
        Law {
            name: "contraries(A,E)",
            group: Contraries,
            clauses: vec![
                Never("A and E are never both true", |s| (s.a, s.e), T, T),
                Sometimes("A and E are sometimes both false", |s| (s.a, s.e), F, F),
            ],
        },
        Law {
            name: "subcontraries(I,O)",
            group: Subcontraries,
            clauses: vec![
                Never("I and O are never both false", |s| (s.i, s.o), F, F),
                Sometimes("I and O are sometimes both true", |s| (s.i, s.o), T, T),
            ],
        },
        Law {
            name: "contradictories(A,O)",
            group: Contradictories,
            clauses: vec![
                Never("A and O are never both true", |s| (s.a, s.o), T, T),
                Never("A and O are never both false", |s| (s.a, s.o), F, F),
            ],
        },
        Law {
            name: "contradictories(E,I)",
            group: Contradictories,
            clauses: vec![
                Never("E and I are never both true", |s| (s.e, s.i), T, T),
                Never("E and I are never both false", |s| (s.e, s.i), F, F),
            ],
        },
        Law {
            name: "subalternation(A,I)",
            group: Subalternation,
            clauses: vec![Preserves("A true implies I true", |s| (s.a, s.i))],
        },
        Law {
            name: "subalternation(E,O)",
            group: Subalternation,
            clauses: vec![Preserves("E true implies O true", |s| (s.e, s.o))],
        },
        Law {
            name: "conversion(E)",
            group: Conversion,
            clauses: vec![Preserves("E(F,G) true implies E(G,F) true", |s| {
                (s.e, s.e_conv)
            })],
        },
        Law {
            name: "conversion(I)",
            group: Conversion,
            clauses: vec![Preserves("I(F,G) true implies I(G,F) true", |s| {
                (s.i, s.i_conv)
            })],
        },
        Law {
            name: "conversion(A per accidens)",
            group: Conversion,
            clauses: vec![Preserves("A(F,G) true implies I(G,F) true", |s| {
                (s.a, s.i_conv)
            })],
        },
    ]
}

fn square_values(m: &Interpretation, scheme: Scheme) -> Result<Square, FolError> {
    let f = |l, s: &str, p: &str| {
        eval_categorical(
            &CategoricalForm::new(l, s, p).expect("distinct terms"),
            m,
            scheme,
        )
    };
    Ok(Square {
        a: f(Letter::A, "F", "G")?,
        e: f(Letter::E, "F", "G")?,
        i: f(Letter::I, "F", "G")?,
        o: f(Letter::O, "F", "G")?,
        e_conv: f(Letter::E, "G", "F")?,
        i_conv: f(Letter::I, "G", "F")?,
    })
}

/// Checks the square of opposition and the conversions for the terms (F, G)
/// over every model with 1..=`max_domain` elements.
pub fn audit_square(scheme: Scheme, max_domain: usize) -> Result<SquareReport, FolError> {
    let signature = Signature::unary(["F", "G"]);
    let spaces = (1..=max_domain)
        .map(|n| ModelSpace::new(&signature, n))
        .collect::<Result<Vec<_>, _>>()?;
    let laws = laws();
    // per clause: first model that decides it (violation or witness)
    let mut decided: Vec<Vec<Option<Interpretation>>> =
        laws.iter().map(|l| vec![None; l.clauses.len()]).collect();
    let mut checked = 0;
    for space in &spaces {
        let mut err = None;
        space.for_each(|_, m| {
            checked += 1;
            let s = match square_values(m, scheme) {
                Ok(s) => s,
                Err(e) => {
                    err = Some(e);
                    return std::ops::ControlFlow::Break(());
                }
            };
            for (law, slots) in laws.iter().zip(decided.iter_mut()) {
                for (clause, slot) in law.clauses.iter().zip(slots.iter_mut()) {
                    if slot.is_some() {
                        continue;
                    }
                    let hit = match clause {
                        Clause::Never(_, pick, x, y) | Clause::Sometimes(_, pick, x, y) => {
                            pick(&s) == (*x, *y)
                        }
                        Clause::Preserves(_, pick) => {
                            let (p, q) = pick(&s);
                            p.is_true() && !q.is_true()
                        }
                    };
                    if hit {
                        *slot = Some(m.clone());
                    }
                }
            }
            std::ops::ControlFlow::Continue(())
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    let results = laws
        .iter()
        .zip(decided)
        .map(|(law, slots)| {
            let clauses: Vec<ClauseResult> = law
                .clauses
                .iter()
                .zip(slots)
                .map(|(clause, found)| {
                    let (statement, holds) = match clause {
                        Clause::Never(s, ..) | Clause::Preserves(s, _) => (*s, found.is_none()),
                        Clause::Sometimes(s, ..) => (*s, found.is_some()),
                    };
                    ClauseResult {
                        statement: statement.to_string(),
                        holds,
                        model: found.map(|m| m.to_model_file()),
                    }
                })
                .collect();
            LawResult {
                law: law.name.to_string(),
                group: law.group,
                passed: clauses.iter().all(|c| c.holds),
                clauses,
            }
        })
        .collect();
    Ok(SquareReport {
        scheme,
        max_domain,
        models_checked: checked,
        laws: results,
    })
}
