use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::forms::{mask_value, CategoricalForm, Letter, Scheme};
use crate::fol3::{FolError, ModelFile, ModelSpace, Signature};
use crate::prop3::TruthValue3;

/// A figure (1..=4) and the letters of major premise, minor premise and
/// conclusion. The conclusion is always `S`-`P`; the figure fixes where the
/// middle term `M` sits in the premises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mood {
    pub figure: u8,
    pub letters: [Letter; 3],
}

/// Traditionally valid moods: name, id, and whether validity needs
/// existential import.
pub const TRADITIONAL: [(&str, &str, bool); 24] = [
    ("Barbara", "AAA-1", false),
    ("Celarent", "EAE-1", false),
    ("Darii", "AII-1", false),
    ("Ferio", "EIO-1", false),
    ("Barbari", "AAI-1", true),
    ("Celaront", "EAO-1", true),
    ("Cesare", "EAE-2", false),
    ("Camestres", "AEE-2", false),
    ("Festino", "EIO-2", false),
    ("Baroco", "AOO-2", false),
    ("Cesaro", "EAO-2", true),
    ("Camestrop", "AEO-2", true),
    ("Darapti", "AAI-3", true),
    ("Disamis", "IAI-3", false),
    ("Datisi", "AII-3", false),
    ("Felapton", "EAO-3", true),
    ("Bocardo", "OAO-3", false),
    ("Ferison", "EIO-3", false),
    ("Bramantip", "AAI-4", true),
    ("Camenes", "AEE-4", false),
    ("Dimaris", "IAI-4", false),
    ("Fesapo", "EAO-4", true),
    ("Fresison", "EIO-4", false),
    ("Camenop", "AEO-4", true),
];

/// Ids of the 24 traditionally valid moods.
pub fn traditional_catalog() -> Vec<&'static str> {
    TRADITIONAL.iter().map(|&(_, id, _)| id).collect()
}

/// Ids of the 15 moods valid without existential import.
pub fn classical_catalog() -> Vec<&'static str> {
    TRADITIONAL
        .iter()
        .filter(|&&(_, _, conditional)| !conditional)
        .map(|&(_, id, _)| id)
        .collect()
}

impl Mood {
    pub fn new(figure: u8, letters: [Letter; 3]) -> Option<Mood> {
        (1..=4)
            .contains(&figure)
            .then_some(Mood { figure, letters })
    }

    /// All 256 moods: by figure, then letters in A, E, I, O order.
    pub fn all() -> Vec<Mood> {
        let mut out = Vec::with_capacity(256);
        for figure in 1..=4 {
            for a in Letter::ALL {
                for b in Letter::ALL {
                    for c in Letter::ALL {
                        out.push(Mood {
                            figure,
                            letters: [a, b, c],
                        });
                    }
                }
            }
        }
        out
    }

    pub fn parse(id: &str) -> Option<Mood> {
        let (letters, figure) = id.split_once('-')?;
        let letters: Vec<Letter> = letters
            .chars()
            .map(Letter::try_from)
            .collect::<Result<_, _>>()
            .ok()?;
        let letters: [Letter; 3] = letters.try_into().ok()?;
        Mood::new(figure.parse().ok()?, letters)
    }

    pub fn id(&self) -> String {
        let [a, b, c] = self.letters;
        format!("{a}{b}{c}-{}", self.figure)
    }

    pub fn name(&self) -> Option<&'static str> {
        let id = self.id();
        TRADITIONAL
            .iter()
            .find(|&&(_, i, _)| i == id)
            .map(|&(name, _, _)| name)
    }

    fn terms(&self) -> [(&'static str, &'static str); 3] {
        let (major, minor) = match self.figure {
            1 => (("M", "P"), ("S", "M")),
            2 => (("P", "M"), ("S", "M")),
            3 => (("M", "P"), ("M", "S")),
            _ => (("P", "M"), ("M", "S")),
        };
        [major, minor, ("S", "P")]
    }

    fn form(&self, i: usize) -> CategoricalForm {
        let (s, p) = self.terms()[i];
        CategoricalForm::new(self.letters[i], s, p).expect("distinct terms")
    }

    pub fn major(&self) -> CategoricalForm {
        self.form(0)
    }

    pub fn minor(&self) -> CategoricalForm {
        self.form(1)
    }

    pub fn conclusion(&self) -> CategoricalForm {
        self.form(2)
    }
}

impl fmt::Display for Mood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoodVerdict {
    pub mood: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub countermodel: Option<ModelFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CatalogDiff {
    /// In the catalog but not found valid.
    pub missing: Vec<String>,
    /// Found valid but not in the catalog.
    pub unexpected: Vec<String>,
}

impl CatalogDiff {
    fn between(valid: &[String], catalog: &[&str]) -> Self {
        CatalogDiff {
            missing: catalog
                .iter()
                .filter(|c| !valid.iter().any(|v| v == *c))
                .map(|c| c.to_string())
                .collect(),
            unexpected: valid
                .iter()
                .filter(|v| !catalog.contains(&v.as_str()))
                .cloned()
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoodAudit {
    pub scheme: Scheme,
    pub max_domain: usize,
    pub models_checked: u64,
    pub valid: Vec<String>,
    pub vs_traditional: CatalogDiff,
    pub vs_classical: CatalogDiff,
    pub verdicts: Vec<MoodVerdict>,
}

impl MoodAudit {
    /// The catalog a scheme is expected to reproduce: the 15 unconditional
    /// moods for `Table1`, all 24 otherwise.
    pub fn expected_catalog(scheme: Scheme) -> &'static str {
        match scheme {
            Scheme::Table1 => "classical",
            Scheme::Table2 | Scheme::Presup => "traditional",
        }
    }

    pub fn expected_diff(&self) -> &CatalogDiff {
        match self.scheme {
            Scheme::Table1 => &self.vs_classical,
            Scheme::Table2 | Scheme::Presup => &self.vs_traditional,
        }
    }

    pub fn matches_expected(&self) -> bool {
        self.expected_diff().is_empty()
    }

    pub fn verdict(&self, id: &str) -> Option<&MoodVerdict> {
        self.verdicts.iter().find(|v| v.mood == id)
    }
}

/// The six ordered pairs of distinct terms, in the order used for
/// signatures.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
const TERMS: [&str; 3] = ["M", "P", "S"];

fn term_index(name: &str) -> usize {
    TERMS
        .iter()
        .position(|t| *t == name)
        .expect("syllogistic term")
}

/// Position of `letter(subject, predicate)` inside a model signature.
fn slot(form: &CategoricalForm) -> usize {
    let pair = (term_index(&form.subject), term_index(&form.predicate));
    let p = PAIRS
        .iter()
        .position(|&q| q == pair)
        .expect("distinct terms");
    p * 4 + form.letter as usize
}

fn encode(v: TruthValue3) -> u64 {
    match v {
        TruthValue3::T => 0,
        TruthValue3::F => 1,
        TruthValue3::N => 2,
    }
}

fn is_true(signature: u64, slot: usize) -> bool {
    (signature >> (2 * slot)) & 3 == 0
}

/// Checks all 256 moods over every model of {M, P, S} with
/// 1..=`max_domain` elements.
///
/// Each model is reduced to the values of all 24 categorical forms over the
/// three terms; validity of a mood depends on the model only through these
/// values, so moods are checked once per distinct value vector. The reported
/// countermodel is the first one in model enumeration order.
pub fn audit_moods(scheme: Scheme, max_domain: usize) -> Result<MoodAudit, FolError> {
    let signature = Signature::unary(TERMS);
    let spaces = (1..=max_domain)
        .map(|n| ModelSpace::new(&signature, n))
        .collect::<Result<Vec<_>, _>>()?;

    // distinct value vectors in order of first appearance, with that model
    let mut seen: HashMap<u64, usize> = HashMap::new();
    let mut firsts: Vec<(u64, usize, u64)> = Vec::new();
    let mut checked = 0u64;
    for (si, space) in spaces.iter().enumerate() {
        let n = space.size() as u32;
        let universe = u64::MAX >> (64 - n);
        let fields: Vec<u32> = TERMS
            .iter()
            .map(|t| space.field(t).expect("term in signature").0)
            .collect();
        for index in 0..space.count() {
            checked += 1;
            let masks = [0, 1, 2].map(|t| (index >> fields[t]) & universe);
            let mut sig = 0u64;
            for (p, &(x, y)) in PAIRS.iter().enumerate() {
                for letter in Letter::ALL {
                    let v = mask_value(letter, scheme, masks[x], masks[y], universe);
                    sig |= encode(v) << (2 * (p * 4 + letter as usize));
                }
            }
            seen.entry(sig).or_insert_with(|| {
                firsts.push((sig, si, index));
                firsts.len() - 1
            });
        }
    }

    let mut valid = Vec::new();
    let mut verdicts = Vec::with_capacity(256);
    for mood in Mood::all() {
        let [major, minor, conclusion] =
            [mood.major(), mood.minor(), mood.conclusion()].map(|f| slot(&f));
        let counter = firsts.iter().find(|&&(sig, _, _)| {
            is_true(sig, major) && is_true(sig, minor) && !is_true(sig, conclusion)
        });
        if counter.is_none() {
            valid.push(mood.id());
        }
        verdicts.push(MoodVerdict {
            mood: mood.id(),
            name: mood.name().map(str::to_string),
            valid: counter.is_none(),
            countermodel: counter.map(|&(_, si, index)| spaces[si].model(index).to_model_file()),
        });
    }
    Ok(MoodAudit {
        scheme,
        max_domain,
        models_checked: checked,
        vs_traditional: CatalogDiff::between(&valid, &traditional_catalog()),
        vs_classical: CatalogDiff::between(&valid, &classical_catalog()),
        valid,
        verdicts,
    })
}
