//! Element namespaces shared by posets, hypergraphs and graphs.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Prefix reserved for vertices introduced by reductions.
pub const RESERVED_PREFIX: char = '_';

/// An ordered set of element tokens.
///
/// Tokens are kept in ascending lexicographic order and identified by their
/// position, which makes index order the tie-breaking order everywhere.
#[derive(Clone, PartialEq, Eq)]
pub struct Universe {
    tokens: Vec<String>,
    index: HashMap<String, usize>,
}

pub type UniverseRef = Arc<Universe>;

pub fn validate_token(token: &str, allow_reserved: bool) -> Result<()> {
    if token.is_empty() || token.chars().any(|c| c.is_whitespace() || c == '#') {
        return Err(Error::InvalidToken(token.to_owned()));
    }
    if !allow_reserved && token.starts_with(RESERVED_PREFIX) {
        return Err(Error::ReservedToken(token.to_owned()));
    }
    Ok(())
}

impl Universe {
    /// Builds a universe from distinct tokens in any order.
    pub fn new<I, S>(tokens: I) -> Result<UniverseRef>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(tokens, true)
    }

    /// As [`Universe::new`] but rejects tokens with the reserved prefix.
    pub fn new_user<I, S>(tokens: I) -> Result<UniverseRef>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(tokens, false)
    }

    fn build<I, S>(tokens: I, allow_reserved: bool) -> Result<UniverseRef>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        for t in &tokens {
            validate_token(t, allow_reserved)?;
        }
        tokens.sort();
        if let Some(w) = tokens.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0].clone()));
        }
        let index = tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Ok(Arc::new(Self { tokens, index }))
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn token(&self, i: usize) -> &str {
        &self.tokens[i]
    }

    pub fn index_of(&self, token: &str) -> Result<usize> {
        self.index
            .get(token)
            .copied()
            .ok_or_else(|| Error::UnknownElement(token.to_owned()))
    }

    pub fn has_reserved(&self) -> Option<&str> {
        self.tokens
            .iter()
            .find(|t| t.starts_with(RESERVED_PREFIX))
            .map(String::as_str)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.len())
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// Resolves tokens to a set.
    pub fn set<I, S>(&self, tokens: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = self.empty_set();
        for t in tokens {
            s.insert(self.index_of(t.as_ref())?);
        }
        Ok(s)
    }

    /// Member tokens of `set` in canonical (ascending) order.
    pub fn names(&self, set: &ElementSet) -> Vec<&str> {
        set.iter().map(|i| self.token(i)).collect()
    }

    pub fn display<'a>(&'a self, set: &'a ElementSet) -> SetDisplay<'a> {
        SetDisplay { universe: self, set }
    }

    /// Re-indexes `set` from `self` into `other` by token.
    pub fn translate(&self, set: &ElementSet, other: &Universe) -> Result<ElementSet> {
        other.set(self.names(set))
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.tokens).finish()
    }
}

/// `{a, b, c}` rendering of a set.
pub struct SetDisplay<'a> {
    universe: &'a Universe,
    set: &'a ElementSet,
}

impl fmt::Display for SetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.universe.names(self.set).join(", "))
    }
}

pub(crate) fn same(a: &UniverseRef, b: &UniverseRef) -> bool {
    Arc::ptr_eq(a, b) || a.tokens == b.tokens
}
