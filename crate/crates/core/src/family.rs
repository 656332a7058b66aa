//! Set families and antichains of ideals.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::ElementSet;

/// Sorts and deduplicates `sets`.
pub fn canonical(mut sets: Vec<ElementSet>) -> Vec<ElementSet> {
    sets.sort();
    sets.dedup();
    sets
}

/// Inclusion-minimal members of `sets`, canonically ordered.
pub fn minimize(sets: Vec<ElementSet>) -> Vec<ElementSet> {
    let sets = canonical(sets);
    // Processing by size means every potential subset is already kept.
    let mut by_size: Vec<&ElementSet> = sets.iter().collect();
    by_size.sort_by_key(|s| s.len());
    let mut kept: Vec<ElementSet> = Vec::new();
    for s in by_size {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s.clone());
        }
    }
    canonical(kept)
}

/// Inclusion-maximal members of `sets`, canonically ordered.
pub fn maximize(sets: Vec<ElementSet>) -> Vec<ElementSet> {
    let sets = canonical(sets);
    let mut by_size: Vec<&ElementSet> = sets.iter().collect();
    by_size.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<ElementSet> = Vec::new();
    for s in by_size {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s.clone());
        }
    }
    canonical(kept)
}

/// True if no member is contained in another.
pub fn is_sperner(sets: &[ElementSet]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.is_subset(b))
    })
}

/// An antichain of the ideal lattice: pairwise incomparable ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    ideals: Vec<ElementSet>,
}

impl IdealFamily {
    /// Validates `sets` against `poset` and stores them canonically.
    pub fn new(poset: &Poset, sets: Vec<ElementSet>) -> Result<Self> {
        let u = poset.universe();
        let ideals = canonical(sets);
        for s in &ideals {
            if s.capacity() != poset.len() {
                return Err(Error::GroundMismatch);
            }
            if !poset.is_ideal(s) {
                return Err(Error::NotIdealFamily(format!(
                    "{} is not an ideal",
                    u.display(s)
                )));
            }
        }
        for (i, a) in ideals.iter().enumerate() {
            for b in &ideals[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    return Err(Error::NotIdealFamily(format!(
                        "{} and {} are comparable",
                        u.display(a),
                        u.display(b)
                    )));
                }
            }
        }
        Ok(Self { ideals })
    }

    /// Wraps sets already known to be a canonical antichain of ideals.
    pub(crate) fn from_trusted(ideals: Vec<ElementSet>) -> Self {
        Self {
            ideals: canonical(ideals),
        }
    }

    pub fn ideals(&self) -> &[ElementSet] {
        &self.ideals
    }

    pub fn into_inner(self) -> Vec<ElementSet> {
        self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ElementSet> {
        self.ideals.iter()
    }
}

impl<'a> IntoIterator for &'a IdealFamily {
    type Item = &'a ElementSet;
    type IntoIter = std::slice::Iter<'a, ElementSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.ideals.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

    fn s(xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(6, xs.iter().copied())
    }

    #[test]
    fn minimize_keeps_minimal() {
        let out = minimize(vec![s(&[0, 1]), s(&[0]), s(&[2, 3]), s(&[0]), s(&[2, 3, 4])]);
        assert_eq!(out, vec![s(&[0]), s(&[2, 3])]);
        let out = maximize(vec![s(&[0, 1]), s(&[0]), s(&[2, 3]), s(&[2, 3, 4])]);
        assert_eq!(out, vec![s(&[0, 1]), s(&[2, 3, 4])]);
    }

    #[test]
    fn ideal_family_validation() {
        let p = Poset::from_tokens(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let u: &Universe = p.universe();
        let ok = IdealFamily::new(&p, vec![u.set(["a", "b"]).unwrap(), u.set(["c"]).unwrap()]);
        assert!(ok.is_ok());
        let not_ideal = IdealFamily::new(&p, vec![u.set(["b"]).unwrap()]);
        assert!(matches!(not_ideal, Err(Error::NotIdealFamily(_))));
        let nested = IdealFamily::new(&p, vec![u.set(["a"]).unwrap(), u.set(["a", "b"]).unwrap()]);
        assert!(matches!(nested, Err(Error::NotIdealFamily(_))));
    }
}
