use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of distinct variable names.
///
/// The position of a name is the index used by [`Monomial`](super::Monomial)
/// exponent vectors. Rings are cheap to clone and compare equal when their
/// names agree.
#[derive(Clone)]
pub struct Ring(Arc<Vec<String>>);

impl Ring {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::Invalid(format!("`{n}` is not a valid variable name")));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Ring(Arc::new(names)))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownIdentifier(name.to_string()))
    }

    /// A name derived from `base` that does not clash with any variable.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut candidate = base.to_string();
        while self.index_of(&candidate).is_some() {
            candidate.push('_');
        }
        candidate
    }

    /// New ring with `extra` prepended to the variable list.
    pub fn with_prefix(&self, extra: &[String]) -> Result<Ring> {
        Ring::new(extra.iter().cloned().chain(self.0.iter().cloned()))
    }

    /// New ring with `extra` appended to the variable list.
    pub fn with_suffix(&self, extra: &[String]) -> Result<Ring> {
        Ring::new(self.0.iter().cloned().chain(extra.iter().cloned()))
    }

    pub(crate) fn ensure_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.join(", "))
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert_eq!(
            Ring::new(["x", "y", "x"]).unwrap_err(),
            Error::DuplicateVariable("x".into())
        );
    }

    #[test]
    fn fresh_names_avoid_clashes() {
        let r = Ring::new(["t", "t_"]).unwrap();
        assert_eq!(r.fresh_name("t"), "t__");
        assert_eq!(r.fresh_name("u"), "u");
    }

    #[test]
    fn equality_is_by_names() {
        let a = Ring::new(["x", "y"]).unwrap();
        let b = Ring::new(["x", "y"]).unwrap();
        let c = Ring::new(["y", "x"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
