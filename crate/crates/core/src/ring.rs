use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of distinct variable names; the position of a name is its
/// index in every exponent vector over this ring.
#[derive(Clone)]
pub struct PolynomialRing {
    vars: Arc<[String]>,
}

impl PolynomialRing {
    pub fn new<I, S>(vars: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Self { vars: vars.into() })
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn name(&self, index: usize) -> &str {
        &self.vars[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The ring with variable `index` removed.
    pub fn without(&self, index: usize) -> Self {
        let vars: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, v)| v.clone())
            .collect();
        Self { vars: vars.into() }
    }

    /// The ring keeping only the variables whose flag is set.
    pub fn retain(&self, keep: &[bool]) -> Self {
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(v, _)| v.clone())
            .collect();
        Self { vars: vars.into() }
    }

    /// Appends a fresh auxiliary variable whose name can never be produced by
    /// the polynomial grammar, so it cannot collide with user variables.
    pub fn with_auxiliary(&self, stem: &str) -> (Self, usize) {
        let mut name = format!("__{stem}");
        while self.index_of(&name).is_some() {
            name.push('_');
        }
        let mut vars = self.vars.to_vec();
        vars.push(name);
        let idx = vars.len() - 1;
        (Self { vars: vars.into() }, idx)
    }
}

impl PartialEq for PolynomialRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for PolynomialRing {}

impl std::hash::Hash for PolynomialRing {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vars.hash(state)
    }
}

impl fmt::Debug for PolynomialRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.vars.join(","))
    }
}

impl fmt::Display for PolynomialRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty_names() {
        assert!(PolynomialRing::new(["x", "y", "x"]).is_err());
        assert!(PolynomialRing::new(["x", ""]).is_err());
        assert!(PolynomialRing::new(Vec::<String>::new()).is_ok());
    }

    #[test]
    fn auxiliary_names_are_fresh() {
        let r = PolynomialRing::new(["x", "__t"]).unwrap();
        let (ext, idx) = r.with_auxiliary("t");
        assert_eq!(idx, 2);
        assert_eq!(ext.name(2), "__t_");
        assert_eq!(ext.without(2), r);
    }
}
