use std::collections::BTreeMap;
use std::ops::ControlFlow;

use super::{FolError, Interpretation};
use crate::syntax::Formula;

/// Default bound on the number of models enumerated for one domain size.
pub const DEFAULT_MODEL_CAP: u64 = 1 << 24;

/// Predicate name → arity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Signature {
    arities: BTreeMap<String, usize>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unary<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Signature {
            arities: names.into_iter().map(|n| (n.into(), 1)).collect(),
        }
    }

    pub fn with(mut self, name: impl Into<String>, arity: usize) -> Self {
        self.arities.insert(name.into(), arity);
        self
    }

    /// Signature of everything the formulas mention.
    pub fn of<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Result<Self, FolError> {
        let mut arities = BTreeMap::new();
        for f in formulas {
            f.collect_arities(&mut arities)
                .map_err(|e| FolError::Syntax(e.to_string()))?;
        }
        Ok(Signature { arities })
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.arities.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.arities.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.arities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arities.is_empty()
    }

    pub fn is_monadic(&self) -> bool {
        self.arities.values().all(|&a| a <= 1)
    }

    /// Checks that `f` only uses predicates of this signature, at their arity.
    pub fn admits(&self, f: &Formula) -> Result<(), FolError> {
        let used = f.arities().map_err(|e| FolError::Syntax(e.to_string()))?;
        for (name, arity) in used {
            match self.arity(&name) {
                None => return Err(FolError::MissingPredicate(name)),
                Some(expected) if expected != arity => {
                    return Err(FolError::ArityMismatch {
                        predicate: name,
                        expected,
                        found: arity,
                    })
                }
                Some(_) => {}
            }
        }
        Ok(())
    }
}

/// Element names used for enumerated domains: `a`..`z`, then `e26`, `e27`, ...
pub fn element_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

/// All interpretations of a signature over one domain size.
///
/// Model `m` puts tuple `t` of predicate `p` in the extension iff bit
/// `offset(p) + index(t)` of `m` is set, where predicates are laid out in
/// name order and tuples in lexicographic order. Models are visited in
/// increasing `m`, so model 0 has every extension empty.
#[derive(Debug, Clone)]
pub struct ModelSpace {
    size: usize,
    layout: Vec<(String, u32, u32)>,
    total_bits: u32,
    base: Interpretation,
}

impl ModelSpace {
    pub fn new(signature: &Signature, size: usize) -> Result<Self, FolError> {
        Self::with_cap(signature, size, DEFAULT_MODEL_CAP)
    }

    pub fn with_cap(signature: &Signature, size: usize, cap: u64) -> Result<Self, FolError> {
        if size == 0 {
            return Err(FolError::EmptyDomain);
        }
        let too_many = || FolError::CapExceeded { size, cap };
        let mut base = Interpretation::new((0..size).map(element_name))?;
        let mut layout = Vec::new();
        let mut total: u32 = 0;
        for (name, arity) in signature.iter() {
            let width = size
                .checked_pow(arity as u32)
                .filter(|&w| w < 64)
                .ok_or_else(too_many)? as u32;
            layout.push((name.to_string(), total, width));
            total = total
                .checked_add(width)
                .filter(|&t| t < 64)
                .ok_or_else(too_many)?;
            base.set_predicate(name, arity, Vec::<Vec<String>>::new())?;
        }
        if (1u64 << total) > cap {
            return Err(too_many());
        }
        Ok(ModelSpace {
            size,
            layout,
            total_bits: total,
            base,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn count(&self) -> u64 {
        1 << self.total_bits
    }

    /// Bit offset and width of a predicate inside a model index.
    pub fn field(&self, name: &str) -> Option<(u32, u32)> {
        self.layout
            .iter()
            .find(|(n, _, _)| n == name)
            .map(|&(_, off, w)| (off, w))
    }

    /// The all-empty model; every model of the space shares its schema.
    pub fn base(&self) -> &Interpretation {
        &self.base
    }

    pub fn load(&self, index: u64, into: &mut Interpretation) {
        for (name, offset, width) in &self.layout {
            let mask = if *width == 0 {
                0
            } else {
                u64::MAX >> (64 - width)
            };
            let word = (index >> offset) & mask;
            into.relation_mut(name)
                .expect("interpretation built from this space")
                .set_word(word);
        }
    }

    pub fn model(&self, index: u64) -> Interpretation {
        let mut m = self.base.clone();
        self.load(index, &mut m);
        m
    }

    /// Visits every model in order, reusing one interpretation.
    pub fn for_each<B>(
        &self,
        mut f: impl FnMut(u64, &Interpretation) -> ControlFlow<B>,
    ) -> Option<B> {
        let mut m = self.base.clone();
        for index in 0..self.count() {
            self.load(index, &mut m);
            if let ControlFlow::Break(b) = f(index, &m) {
                return Some(b);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = Interpretation> + '_ {
        (0..self.count()).map(|i| self.model(i))
    }
}

/// Every interpretation of `signature` with exactly `size` elements.
pub fn enumerate_models(
    signature: &Signature,
    size: usize,
) -> Result<impl Iterator<Item = Interpretation>, FolError> {
    let space = ModelSpace::new(signature, size)?;
    Ok((0..space.count()).map(move |i| space.model(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_counts() {
        assert_eq!(
            enumerate_models(&Signature::unary(["F"]), 1)
                .unwrap()
                .count(),
            2
        );
        assert_eq!(
            enumerate_models(&Signature::unary(["F", "G"]), 2)
                .unwrap()
                .count(),
            16
        );
        assert_eq!(
            enumerate_models(&Signature::unary(["F", "G", "H"]), 2)
                .unwrap()
                .count(),
            64
        );
        let binary = Signature::new().with("R", 2).with("P", 0);
        assert_eq!(ModelSpace::new(&binary, 3).unwrap().count(), 1 << 10);
    }

    #[test]
    fn deterministic_order() {
        let sig = Signature::unary(["F", "G"]);
        let models: Vec<_> = enumerate_models(&sig, 2).unwrap().collect();
        assert!(models[0].members("F").unwrap().is_empty());
        assert_eq!(models[1].members("F").unwrap(), vec!["a"]);
        assert_eq!(models[2].members("F").unwrap(), vec!["b"]);
        assert_eq!(models[4].members("G").unwrap(), vec!["a"]);
        assert_eq!(models[15].members("G").unwrap(), vec!["a", "b"]);
        let again: Vec<_> = enumerate_models(&sig, 2).unwrap().collect();
        assert_eq!(models, again);
    }

    #[test]
    fn caps() {
        let sig = Signature::unary(["F", "G", "H"]);
        assert_eq!(ModelSpace::new(&sig, 8).unwrap().count(), 1 << 24);
        assert_eq!(
            ModelSpace::new(&sig, 9).unwrap_err(),
            FolError::CapExceeded {
                size: 9,
                cap: DEFAULT_MODEL_CAP
            }
        );
        assert!(ModelSpace::new(&Signature::new().with("R", 2), 8).is_err());
        assert_eq!(ModelSpace::new(&sig, 0).unwrap_err(), FolError::EmptyDomain);
    }

    #[test]
    fn element_names() {
        assert_eq!(element_name(0), "a");
        assert_eq!(element_name(25), "z");
        assert_eq!(element_name(26), "e26");
    }
}
