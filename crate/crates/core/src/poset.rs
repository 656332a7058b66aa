//! Finite partial orders stored as strict reachability relations.

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::universe::{Universe, UniverseRef};

/// Largest poset the exhaustive ideal enumeration accepts by default.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// A strict partial order `<` over the elements of a universe.
#[derive(Clone, Debug)]
pub struct Poset {
    universe: UniverseRef,
    /// `above[x]` = { y | x < y }
    above: Vec<ElementSet>,
    /// `below[x]` = { y | y < x }
    below: Vec<ElementSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        crate::universe::same(&self.universe, &other.universe) && self.above == other.above
    }
}

impl Eq for Poset {}

impl Poset {
    /// Transitive closure of `relations` (pairs `(a, b)` meaning `a < b`).
    pub fn new(universe: UniverseRef, relations: &[(usize, usize)]) -> Result<Self> {
        let n = universe.len();
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in relations {
            assert!(a < n && b < n, "relation endpoint out of range");
            if a == b {
                let t = universe.token(a).to_owned();
                return Err(Error::Cycle(t.clone(), t));
            }
            succ[a].push(b);
        }
        let mut above = vec![ElementSet::empty(n); n];
        let mut stack = Vec::new();
        for x in 0..n {
            let reach = &mut above[x];
            stack.extend(succ[x].iter().copied());
            while let Some(y) = stack.pop() {
                if reach.insert(y) {
                    stack.extend(succ[y].iter().copied());
                }
            }
        }
        for x in 0..n {
            if above[x].contains(x) {
                let y = above[x]
                    .iter()
                    .find(|&y| y != x && above[y].contains(x))
                    .unwrap_or(x);
                return Err(Error::Cycle(
                    universe.token(x).to_owned(),
                    universe.token(y).to_owned(),
                ));
            }
        }
        let mut below = vec![ElementSet::empty(n); n];
        for (x, up) in above.iter().enumerate() {
            for y in up {
                below[y].insert(x);
            }
        }
        Ok(Self {
            universe,
            above,
            below,
        })
    }

    /// Builds a poset from tokens; relations name `(smaller, larger)` pairs.
    pub fn from_tokens<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Self> {
        let universe = Universe::new(elements.iter().map(|s| s.as_ref().to_owned()))?;
        let rel = relations
            .iter()
            .map(|(a, b)| Ok((universe.index_of(a.as_ref())?, universe.index_of(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, &rel)
    }

    pub fn antichain(universe: UniverseRef) -> Self {
        Self::new(universe, &[]).expect("no relations")
    }

    /// Total order following index order.
    pub fn chain(universe: UniverseRef) -> Self {
        let rel: Vec<_> = (1..universe.len()).map(|i| (i - 1, i)).collect();
        Self::new(universe, &rel).expect("index chain is acyclic")
    }

    pub fn universe(&self) -> &UniverseRef {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    #[inline]
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.less(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Strict upper set of `x`.
    pub fn strictly_above(&self, x: usize) -> &ElementSet {
        &self.above[x]
    }

    /// Strict lower set of `x`.
    pub fn strictly_below(&self, x: usize) -> &ElementSet {
        &self.below[x]
    }

    /// Principal ideal of `x`.
    pub fn down_of(&self, x: usize) -> ElementSet {
        self.below[x].with(x)
    }

    /// Principal filter of `x`.
    pub fn up_of(&self, x: usize) -> ElementSet {
        self.above[x].with(x)
    }

    /// Number of strict comparabilities.
    pub fn comparabilities(&self) -> usize {
        self.above.iter().map(ElementSet::len).sum()
    }

    /// All pairs `(x, y)` with `x < y`.
    pub fn less_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.above
            .iter()
            .enumerate()
            .flat_map(|(x, up)| up.iter().map(move |y| (x, y)))
    }

    /// Cover pairs of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.less_pairs()
            .filter(|&(x, y)| self.above[x].intersection(&self.below[y]).is_empty())
            .collect()
    }

    pub fn down_closure(&self, s: &ElementSet) -> ElementSet {
        debug_assert_eq!(s.capacity(), self.len());
        let mut out = s.clone();
        for x in s {
            out.union_with(&self.below[x]);
        }
        out
    }

    pub fn up_closure(&self, s: &ElementSet) -> ElementSet {
        debug_assert_eq!(s.capacity(), self.len());
        let mut out = s.clone();
        for x in s {
            out.union_with(&self.above[x]);
        }
        out
    }

    pub fn is_ideal(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| self.below[x].is_subset(s))
    }

    pub fn is_filter(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| self.above[x].is_subset(s))
    }

    pub fn min_elements(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.len(),
            s.iter().filter(|&x| self.below[x].is_disjoint(s)),
        )
    }

    pub fn max_elements(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.len(),
            s.iter().filter(|&x| self.above[x].is_disjoint(s)),
        )
    }

    pub fn is_antichain(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| self.above[x].is_disjoint(s))
    }

    /// True when no two elements are comparable.
    pub fn is_antichain_poset(&self) -> bool {
        self.above.iter().all(ElementSet::is_empty)
    }

    /// True when every two elements are comparable.
    pub fn is_total(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| self.above[x].len() + self.below[x].len() + 1 == n)
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        // Depth by longest chain ending at x; process in order of |below|.
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.below[x].len());
        let mut depth = vec![1usize; self.len()];
        for &x in &order {
            depth[x] = 1 + self.below[x].iter().map(|y| depth[y]).max().unwrap_or(0);
        }
        depth.into_iter().max().unwrap_or(0)
    }

    /// `P[S]` over a fresh universe holding the tokens of `s`.
    pub fn induced_subposet(&self, s: &ElementSet) -> Poset {
        let universe = Universe::new(self.universe.names(s).into_iter().map(str::to_owned))
            .expect("tokens of a valid universe");
        let members = s.to_vec();
        // members are ascending, and so are the sub-universe tokens
        let mut rel = Vec::new();
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                if self.less(x, y) {
                    rel.push((i, j));
                }
            }
        }
        Poset::new(universe, &rel).expect("restriction of a partial order")
    }

    /// Streams every ideal exactly once in lexicographic order.
    pub fn enumerate_ideals(&self, cap: usize) -> Result<IdealIter<'_>> {
        if self.len() > cap {
            return Err(Error::OracleCapExceeded {
                size: self.len(),
                cap,
            });
        }
        Ok(IdealIter {
            poset: self,
            stack: Vec::new(),
            started: false,
        })
    }
}

struct Frame {
    set: ElementSet,
    missing: ElementSet,
    next: usize,
    end: usize,
}

/// Pre-order walk over the subset tree, pruned to prefixes that can still be
/// completed to an ideal by adding larger indices.
pub struct IdealIter<'a> {
    poset: &'a Poset,
    stack: Vec<Frame>,
    started: bool,
}

impl Iterator for IdealIter<'_> {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let n = self.poset.len();
        if !self.started {
            self.started = true;
            let empty = ElementSet::empty(n);
            self.stack.push(Frame {
                set: empty.clone(),
                missing: empty.clone(),
                next: 0,
                end: n,
            });
            return Some(empty);
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.next >= top.end {
                self.stack.pop();
                continue;
            }
            let j = top.next;
            top.next += 1;
            let mut missing = top.missing.without(j);
            missing.union_with(&self.poset.below[j].difference(&top.set));
            // everything still missing must be addable later, i.e. exceed j
            if missing.first().is_some_and(|m| m < j) {
                continue;
            }
            let set = top.set.with(j);
            let end = missing.first().map_or(n, |m| m + 1);
            let done = missing.is_empty();
            self.stack.push(Frame {
                set: set.clone(),
                missing,
                next: j + 1,
                end,
            });
            if done {
                return Some(set);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn chain_abc() -> Poset {
        Poset::from_tokens(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn set(p: &Poset, xs: &[&str]) -> ElementSet {
        p.universe().set(xs).unwrap()
    }

    #[test]
    fn closure_adds_transitive_pairs() {
        let p = chain_abc();
        let u = p.universe();
        assert!(p.less(u.index_of("a").unwrap(), u.index_of("c").unwrap()));
        assert_eq!(p.comparabilities(), 3);
        assert_eq!(p.covers().len(), 2);
        assert_eq!(p.height(), 3);
    }

    #[test]
    fn cycles_rejected() {
        let err = Poset::from_tokens(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_, _)));
        let err = Poset::from_tokens(&["a"], &[("a", "a")]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_, _)));
    }

    #[test]
    fn unknown_endpoint() {
        let err = Poset::from_tokens(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, Error::UnknownElement("z".into()));
    }

    #[test]
    fn closures_and_extrema_on_chain() {
        let p = chain_abc();
        assert_eq!(p.down_closure(&set(&p, &["c"])), set(&p, &["a", "b", "c"]));
        assert_eq!(p.up_closure(&set(&p, &["a"])), set(&p, &["a", "b", "c"]));
        let all = set(&p, &["a", "b", "c"]);
        assert_eq!(p.min_elements(&all), set(&p, &["a"]));
        assert_eq!(p.max_elements(&all), set(&p, &["c"]));
        assert!(p.is_total());
    }

    #[test]
    fn ideal_membership() {
        let p = Poset::from_tokens(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(p.is_ideal(&set(&p, &["a"])));
        assert!(!p.is_ideal(&set(&p, &["b"])));
        assert!(!p.is_antichain(&set(&p, &["a", "b"])));
        assert!(p.is_antichain(&set(&p, &[])));
    }

    #[test]
    fn antichain_poset_behaviour() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let p = Poset::antichain(u);
        let s = set(&p, &["b", "d"]);
        assert_eq!(p.down_closure(&s), s);
        assert_eq!(p.min_elements(&s), s);
        assert_eq!(p.max_elements(&s), s);
        assert_eq!(p.enumerate_ideals(20).unwrap().count(), 16);
        assert!(p.induced_subposet(&s).is_antichain_poset());
    }

    #[test]
    fn chain_ideals() {
        let u = Universe::new((0..7).map(|i| format!("c{i}"))).unwrap();
        let p = Poset::chain(u);
        assert_eq!(p.enumerate_ideals(20).unwrap().count(), 8);
    }

    #[test]
    fn induced_keeps_transitive_pairs() {
        let p = chain_abc();
        let q = p.induced_subposet(&set(&p, &["a", "c"]));
        assert_eq!(q.universe().tokens(), ["a", "c"]);
        assert!(q.less(0, 1));
    }

    #[test]
    fn cap_enforced() {
        let u = Universe::new((0..21).map(|i| format!("e{i:02}"))).unwrap();
        let p = Poset::antichain(u);
        assert!(matches!(
            p.enumerate_ideals(DEFAULT_ORACLE_CAP),
            Err(Error::OracleCapExceeded { size: 21, cap: 20 })
        ));
    }

    fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
        (1..=max_n)
            .prop_flat_map(|n| {
                (
                    Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
                    proptest::collection::vec(proptest::bool::weighted(0.3), n * n),
                )
            })
            .prop_map(|(perm, bits)| {
                let n = perm.len();
                let u = Universe::new((0..n).map(|i| format!("p{i:02}"))).unwrap();
                // edges go forward in a shuffled order, so the result is a DAG
                let rel: Vec<_> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| bits[i * n + j])
                    .map(|(i, j)| (perm[i], perm[j]))
                    .collect();
                Poset::new(u, &rel).unwrap()
            })
    }

    proptest! {
        #[test]
        fn order_invariants(p in arb_poset(9)) {
            let n = p.len();
            for x in 0..n {
                prop_assert!(!p.less(x, x));
                for y in 0..n {
                    prop_assert!(!(p.less(x, y) && p.less(y, x)));
                    for z in 0..n {
                        if p.less(x, y) && p.less(y, z) {
                            prop_assert!(p.less(x, z));
                        }
                    }
                }
            }
        }

        #[test]
        fn enumeration_matches_subset_scan(p in arb_poset(9)) {
            let n = p.len();
            let ideals: Vec<ElementSet> = p.enumerate_ideals(20).unwrap().collect();
            // brute force: every subset checked against the raw relation
            let mut expected = Vec::new();
            for mask in 0u32..(1 << n) {
                let s = ElementSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
                let ok = (0..n).all(|x| !s.contains(x) || (0..n).all(|y| !p.less(y, x) || s.contains(y)));
                if ok {
                    expected.push(s);
                }
            }
            expected.sort();
            prop_assert_eq!(&ideals, &expected);
            for i in &ideals {
                prop_assert!(p.is_ideal(i));
                let mx = p.max_elements(i);
                prop_assert!(p.is_antichain(&mx));
                prop_assert_eq!(&p.down_closure(&mx), i);
                prop_assert!(p.is_filter(&i.complement()));
            }
        }

        #[test]
        fn closures_idempotent(p in arb_poset(9), mask in 0u32..512) {
            let n = p.len();
            let s = ElementSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
            let d = p.down_closure(&s);
            prop_assert_eq!(&p.down_closure(&d), &d);
            let up = p.up_closure(&s);
            prop_assert_eq!(&p.up_closure(&up), &up);
            prop_assert_eq!(p.is_ideal(&s), d == s);
            prop_assert_eq!(p.is_ideal(&s), p.is_filter(&s.complement()));
        }

        #[test]
        fn induced_matches_pairwise(p in arb_poset(8), mask in 0u32..256) {
            let n = p.len();
            let s = ElementSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
            let q = p.induced_subposet(&s);
            let members = s.to_vec();
            for (i, &x) in members.iter().enumerate() {
                for (j, &y) in members.iter().enumerate() {
                    prop_assert_eq!(q.less(i, j), p.less(x, y));
                }
            }
        }
    }
}
