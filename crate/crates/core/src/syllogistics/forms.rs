use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SyllogismError;
use crate::fol3::{eval_classical_fol, sat_set, FolError, Interpretation};
use crate::prop3::TruthValue3;
use crate::syntax::Formula;

const VAR: &str = "x";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    A,
    E,
    I,
    O,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::E, Letter::I, Letter::O];

    /// Whether the form's classical core puts a negation on the predicate term.
    fn negates_predicate(self) -> bool {
        matches!(self, Letter::A | Letter::O)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::A => "A",
            Letter::E => "E",
            Letter::I => "I",
            Letter::O => "O",
        })
    }
}

impl TryFrom<char> for Letter {
    type Error = SyllogismError;

    fn try_from(c: char) -> Result<Self, Self::Error> {
        match c {
            'A' => Ok(Letter::A),
            'E' => Ok(Letter::E),
            'I' => Ok(Letter::I),
            'O' => Ok(Letter::O),
            other => Err(SyllogismError::BadLetter(other)),
        }
    }
}

/// Which translation of the categorical forms to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// Modern reading without existential import.
    Table1,
    /// Existential import built into the truth conditions.
    Table2,
    /// Existential import as a presupposition: failure yields `N`.
    Presup,
}

impl Scheme {
    pub const ALL: [Scheme; 3] = [Scheme::Table1, Scheme::Table2, Scheme::Presup];
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Table1 => "table1",
            Scheme::Table2 => "table2",
            Scheme::Presup => "presup",
        })
    }
}

impl FromStr for Scheme {
    type Err = SyllogismError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table1" => Ok(Scheme::Table1),
            "table2" => Ok(Scheme::Table2),
            "presup" => Ok(Scheme::Presup),
            other => Err(SyllogismError::BadScheme(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CategoricalForm {
    pub letter: Letter,
    pub subject: String,
    pub predicate: String,
}

impl CategoricalForm {
    pub fn new(
        letter: Letter,
        subject: impl Into<String>,
        predicate: impl Into<String>,
    ) -> Result<Self, SyllogismError> {
        let (subject, predicate) = (subject.into(), predicate.into());
        if subject == predicate {
            return Err(SyllogismError::SameTerms(subject));
        }
        Ok(CategoricalForm {
            letter,
            subject,
            predicate,
        })
    }

    /// Same letter with subject and predicate swapped.
    pub fn converse(&self) -> Self {
        CategoricalForm {
            letter: self.letter,
            subject: self.predicate.clone(),
            predicate: self.subject.clone(),
        }
    }

    fn subject_term(&self) -> Formula {
        Formula::unary(self.subject.clone(), VAR)
    }

    fn predicate_term(&self) -> Formula {
        let g = Formula::unary(self.predicate.clone(), VAR);
        if self.letter.negates_predicate() {
            Formula::not(g)
        } else {
            g
        }
    }
}

impl fmt::Display for CategoricalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.letter, self.subject, self.predicate)
    }
}

fn exists(body: Formula) -> Formula {
    Formula::exists(VAR, body)
}

/// The two terms whose nonemptiness the form presupposes: `(F, ~G)` for A and
/// O, `(F, G)` for E and I.
pub fn presupposition_terms(form: &CategoricalForm) -> (Formula, Formula) {
    (form.subject_term(), form.predicate_term())
}

/// First-order rendering of a categorical form.
///
/// Under `Presup` this is the modern formula; for A and E the gap rule of
/// [`crate::fol3::eval3_fol`] supplies the presupposition, while for I and O
/// it is carried by [`presupposition_terms`] (see [`eval_categorical`]).
pub fn translate(form: &CategoricalForm, scheme: Scheme) -> Formula {
    let core = Formula::and(form.subject_term(), form.predicate_term());
    let table1 = match form.letter {
        Letter::A | Letter::E => Formula::not(exists(core)),
        Letter::I | Letter::O => exists(core),
    };
    match scheme {
        Scheme::Table1 | Scheme::Presup => table1,
        Scheme::Table2 => {
            let (s, p) = presupposition_terms(form);
            match form.letter {
                Letter::A | Letter::E => Formula::and(Formula::and(table1, exists(s)), exists(p)),
                // O is taken as the contradictory of the Table 2 A form
                Letter::I | Letter::O => Formula::or(
                    Formula::or(table1, Formula::not(exists(s))),
                    Formula::not(exists(p)),
                ),
            }
        }
    }
}

/// Truth value of a categorical form in a model.
///
/// `Table1` and `Table2` evaluate the translation classically. `Presup`
/// yields `N` when either presupposition term is empty and the classical core
/// value otherwise.
pub fn eval_categorical(
    form: &CategoricalForm,
    interp: &Interpretation,
    scheme: Scheme,
) -> Result<TruthValue3, FolError> {
    for name in [&form.subject, &form.predicate] {
        if interp.relation(name).is_none() {
            return Err(FolError::MissingPredicate(name.clone()));
        }
    }
    match scheme {
        Scheme::Table1 | Scheme::Table2 => {
            Ok(eval_classical_fol(&translate(form, scheme), interp)?.into())
        }
        Scheme::Presup => {
            let (s, p) = presupposition_terms(form);
            if sat_set(&s, VAR, interp)?.is_empty() || sat_set(&p, VAR, interp)?.is_empty() {
                return Ok(TruthValue3::N);
            }
            Ok(eval_classical_fol(&translate(form, Scheme::Table1), interp)?.into())
        }
    }
}

/// Value of `letter(X, Y)` computed from the extensions of `X` and `Y` as
/// element bitmasks over a domain whose elements are `universe`.
pub(crate) fn mask_value(
    letter: Letter,
    scheme: Scheme,
    x: u64,
    y: u64,
    universe: u64,
) -> TruthValue3 {
    let not_y = universe & !y;
    let both = x & y != 0;
    let x_not_y = x & not_y != 0;
    let core = match letter {
        Letter::A => !x_not_y,
        Letter::E => !both,
        Letter::I => both,
        Letter::O => x_not_y,
    };
    let second = if letter.negates_predicate() { not_y } else { y };
    match scheme {
        Scheme::Table1 => core.into(),
        Scheme::Table2 => match letter {
            Letter::A | Letter::E => (core && x != 0 && second != 0).into(),
            Letter::I | Letter::O => (core || x == 0 || second == 0).into(),
        },
        Scheme::Presup => {
            if x == 0 || second == 0 {
                TruthValue3::N
            } else {
                core.into()
            }
        }
    }
}
