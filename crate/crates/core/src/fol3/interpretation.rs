use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::FolError;

/// On-disk model format.
///
/// `{"domain": ["a","b"], "predicates": {"F": [["a"]], "G": [["a"],["b"]]}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub domain: Vec<String>,
    #[serde(default)]
    pub predicates: BTreeMap<String, Vec<Vec<String>>>,
}

/// Extension of one predicate as a bitset over tuple indices.
///
/// `arity` is `None` only for an empty extension read from a model file,
/// where nothing fixes the arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    arity: Option<usize>,
    bits: Vec<u64>,
}

impl Relation {
    pub fn arity(&self) -> Option<usize> {
        self.arity
    }

    #[inline]
    pub fn contains_index(&self, index: usize) -> bool {
        self.bits
            .get(index / 64)
            .is_some_and(|w| w >> (index % 64) & 1 == 1)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub(crate) fn set_word(&mut self, word: u64) {
        self.bits.clear();
        self.bits.push(word);
    }
}

/// Number of tuples of the given arity over a domain, if it fits the bitset limit.
pub(crate) fn tuple_count(size: usize, arity: usize) -> Option<usize> {
    const MAX_TUPLES: usize = 1 << 26;
    size.checked_pow(arity as u32).filter(|&n| n <= MAX_TUPLES)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "ModelFile")]
pub struct Interpretation {
    domain: Vec<String>,
    relations: BTreeMap<String, Relation>,
    env: BTreeMap<String, usize>,
}

impl Interpretation {
    pub fn new<S: Into<String>>(domain: impl IntoIterator<Item = S>) -> Result<Self, FolError> {
        let domain: Vec<String> = domain.into_iter().map(Into::into).collect();
        if domain.is_empty() {
            return Err(FolError::EmptyDomain);
        }
        let mut seen = BTreeSet::new();
        for d in &domain {
            if !seen.insert(d.as_str()) {
                return Err(FolError::DuplicateElement(d.clone()));
            }
        }
        Ok(Interpretation {
            domain,
            relations: BTreeMap::new(),
            env: BTreeMap::new(),
        })
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn size(&self) -> usize {
        self.domain.len()
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.domain.iter().position(|d| d == name)
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.get(name)
    }

    pub(crate) fn relation_mut(&mut self, name: &str) -> Option<&mut Relation> {
        self.relations.get_mut(name)
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&str, &Relation)> {
        self.relations.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn env(&self) -> &BTreeMap<String, usize> {
        &self.env
    }

    /// Defines (or redefines) a predicate extension.
    pub fn set_predicate<T, S>(
        &mut self,
        name: &str,
        arity: usize,
        tuples: impl IntoIterator<Item = T>,
    ) -> Result<(), FolError>
    where
        T: AsRef<[S]>,
        S: AsRef<str>,
    {
        let n = tuple_count(self.size(), arity).ok_or_else(|| FolError::TooLarge {
            predicate: name.to_string(),
        })?;
        let mut bits = vec![0u64; n.div_ceil(64).max(1)];
        for tuple in tuples {
            let tuple = tuple.as_ref();
            if tuple.len() != arity {
                return Err(FolError::ArityMismatch {
                    predicate: name.to_string(),
                    expected: arity,
                    found: tuple.len(),
                });
            }
            let mut index = 0;
            for e in tuple {
                let e = e.as_ref();
                let i = self
                    .element_index(e)
                    .ok_or_else(|| FolError::UnknownElement(e.to_string()))?;
                index = index * self.size() + i;
            }
            bits[index / 64] |= 1 << (index % 64);
        }
        self.relations.insert(
            name.to_string(),
            Relation {
                arity: Some(arity),
                bits,
            },
        );
        Ok(())
    }

    /// Convenience for a unary predicate given by its member elements.
    pub fn set_unary(&mut self, name: &str, members: &[&str]) -> Result<(), FolError> {
        self.set_predicate(name, 1, members.iter().map(|m| [*m]))
    }

    pub fn with_unary(mut self, name: &str, members: &[&str]) -> Result<Self, FolError> {
        self.set_unary(name, members)?;
        Ok(self)
    }

    pub fn bind(&mut self, var: &str, element: &str) -> Result<(), FolError> {
        let i = self
            .element_index(element)
            .ok_or_else(|| FolError::UnknownElement(element.to_string()))?;
        self.env.insert(var.to_string(), i);
        Ok(())
    }

    /// Member tuples of a predicate in tuple-index order.
    pub fn extension(&self, name: &str) -> Option<Vec<Vec<String>>> {
        let rel = self.relations.get(name)?;
        let Some(arity) = rel.arity else {
            return Some(Vec::new());
        };
        let n = self.size();
        let total = tuple_count(n, arity).unwrap_or(0);
        let tuples = (0..total)
            .filter(|&i| rel.contains_index(i))
            .map(|mut i| {
                let mut tuple = vec![String::new(); arity];
                for slot in tuple.iter_mut().rev() {
                    *slot = self.domain[i % n].clone();
                    i /= n;
                }
                tuple
            })
            .collect();
        Some(tuples)
    }

    /// Elements of a unary predicate, in domain order.
    pub fn members(&self, name: &str) -> Option<Vec<String>> {
        Some(
            self.extension(name)?
                .into_iter()
                .filter_map(|t| t.into_iter().next())
                .collect(),
        )
    }

    pub fn to_model_file(&self) -> ModelFile {
        ModelFile {
            domain: self.domain.clone(),
            predicates: self
                .relations
                .keys()
                .map(|k| (k.clone(), self.extension(k).unwrap_or_default()))
                .collect(),
        }
    }

    pub fn from_model_file(file: &ModelFile) -> Result<Self, FolError> {
        let mut interp = Interpretation::new(file.domain.iter().cloned())?;
        for (name, tuples) in &file.predicates {
            match tuples.first() {
                None => {
                    interp.relations.insert(
                        name.clone(),
                        Relation {
                            arity: None,
                            bits: vec![0],
                        },
                    );
                }
                Some(first) => interp.set_predicate(name, first.len(), tuples)?,
            }
        }
        Ok(interp)
    }

    pub fn from_json(text: &str) -> Result<Self, FolError> {
        let file: ModelFile =
            serde_json::from_str(text).map_err(|e| FolError::InvalidModel(e.to_string()))?;
        Self::from_model_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_model_file()).expect("model serializes")
    }
}

impl From<Interpretation> for ModelFile {
    fn from(i: Interpretation) -> Self {
        i.to_model_file()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let text = r#"{"domain": ["a","b"], "predicates": {"F": [["a"]], "G": [["a"],["b"]]}}"#;
        let i = Interpretation::from_json(text).unwrap();
        assert_eq!(i.members("F").unwrap(), vec!["a"]);
        assert_eq!(i.members("G").unwrap(), vec!["a", "b"]);
        let back = Interpretation::from_json(&i.to_json()).unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn binary_extension_order() {
        let mut i = Interpretation::new(["a", "b", "c"]).unwrap();
        i.set_predicate("R", 2, [["c", "a"], ["a", "b"]]).unwrap();
        assert_eq!(
            i.extension("R").unwrap(),
            vec![vec!["a", "b"], vec!["c", "a"]]
        );
    }

    #[test]
    fn invalid_models() {
        assert_eq!(
            Interpretation::new(Vec::<String>::new()),
            Err(FolError::EmptyDomain)
        );
        assert_eq!(
            Interpretation::new(["a", "a"]),
            Err(FolError::DuplicateElement("a".into()))
        );
        let bad = r#"{"domain": ["a"], "predicates": {"F": [["b"]]}}"#;
        assert_eq!(
            Interpretation::from_json(bad),
            Err(FolError::UnknownElement("b".into()))
        );
        let ragged = r#"{"domain": ["a"], "predicates": {"R": [["a","a"],["a"]]}}"#;
        assert!(matches!(
            Interpretation::from_json(ragged),
            Err(FolError::ArityMismatch { .. })
        ));
        assert!(matches!(
            Interpretation::from_json("{"),
            Err(FolError::InvalidModel(_))
        ));
    }

    #[test]
    fn empty_extension_from_file() {
        let i = Interpretation::from_json(r#"{"domain": ["a"], "predicates": {"F": []}}"#).unwrap();
        assert_eq!(i.relation("F").unwrap().arity(), None);
        assert!(i.relation("F").unwrap().is_empty());
        assert_eq!(i.members("F").unwrap(), Vec::<String>::new());
    }
}
