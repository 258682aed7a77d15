use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of distinct coordinate names.
///
/// The position of a name is its identity everywhere else in the crate.
/// Optional aliases give a second spelling for each coordinate on input
/// (e.g. `x0` for `x`); printing always uses the primary names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coords {
    names: Vec<String>,
    aliases: Vec<String>,
}

impl Coords {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        Self::with_aliases(names, &[] as &[&str])
    }

    /// `aliases` must be empty or the same length as `names`.
    pub fn with_aliases<S: AsRef<str>, A: AsRef<str>>(names: &[S], aliases: &[A]) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let aliases: Vec<String> = aliases.iter().map(|s| s.as_ref().to_owned()).collect();
        if names.is_empty() {
            return Err(Error::InvalidCoords("need at least one coordinate".into()));
        }
        if !aliases.is_empty() && aliases.len() != names.len() {
            return Err(Error::InvalidCoords("one alias per coordinate".into()));
        }
        let all: Vec<&String> = names.iter().chain(aliases.iter()).collect();
        for (i, a) in all.iter().enumerate() {
            if !is_identifier(a) {
                return Err(Error::InvalidCoords(format!("`{a}` is not an identifier")));
            }
            if all[..i].contains(a) {
                return Err(Error::InvalidCoords(format!("duplicate name `{a}`")));
            }
        }
        Ok(Arc::new(Coords { names, aliases }))
    }

    /// `x0, …, x{n-1}`.
    pub fn indexed(n: usize) -> Result<Arc<Self>> {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        Self::new(&names)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).or_else(|| self.aliases.iter().position(|n| n == name))
    }

    /// A new system with `name` prepended at index 0.
    pub fn prepend(&self, name: &str) -> Result<Arc<Self>> {
        let mut names = vec![name.to_owned()];
        names.extend(self.names.iter().cloned());
        Self::new(&names)
    }
}

impl fmt::Debug for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coords{:?}", self.names)
    }
}

pub(crate) fn same(a: &Arc<Coords>, b: &Arc<Coords>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
