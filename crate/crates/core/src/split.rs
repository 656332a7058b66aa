//! Minimal dominating-ideals of split graphs under neighbourhood inclusion
//! posets.
//!
//! With `S` the independent side and `C` the clique, every solution is
//! `↓(A ∪ (S \ N(A)))` for exactly one `A` of a subset-closed family over
//! `C`. That family is walked depth first, extending `A` only by clique
//! vertices larger than its maximum.
//!
//! Emission alternates with depth: a node at even depth is reported when it
//! is entered, one at odd depth when it is left. Between two consecutive
//! reports the walk then performs at most `2|C|` membership tests.

use crate::dualize::IDomInstance;
use crate::error::{Error, Result};
use crate::family::{self, IdealFamily};
use crate::graph::{Graph, SplitDecomposition};
use crate::poset::Poset;
use crate::set::ElementSet;

#[derive(Clone, Debug)]
pub struct SplitContext {
    graph: Graph,
    poset: Poset,
    dec: SplitDecomposition,
    clique: Vec<usize>,
}

impl SplitContext {
    pub fn new(graph: &Graph, poset: &Poset) -> Result<Self> {
        let dec = match graph.split_decomposition_min(poset) {
            Ok(d) => d,
            Err(Error::GroundMismatch) => return Err(Error::GroundMismatch),
            Err(Error::NotSplit) => return Err(Error::ContextInvalid("graph is not split".into())),
            Err(Error::NotNIPoset) => {
                let msg = if graph.is_weak_ni_poset(poset)? {
                    "poset is only a weak neighbourhood inclusion poset"
                } else {
                    "poset is not a neighbourhood inclusion poset"
                };
                return Err(Error::ContextInvalid(msg.into()));
            }
            Err(e) => return Err(Error::ContextInvalid(e.to_string())),
        };
        let clique = dec.clique.to_vec();
        Ok(Self {
            graph: graph.clone(),
            poset: poset.clone(),
            dec,
            clique,
        })
    }

    pub fn from_instance(inst: &IDomInstance) -> Result<Self> {
        Self::new(&inst.graph, &inst.poset)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn decomposition(&self) -> &SplitDecomposition {
        &self.dec
    }

    fn check_clique(&self, a: &ElementSet) -> Result<()> {
        match a.difference(&self.dec.clique).first() {
            Some(x) => Err(Error::NotInClique(self.graph.universe().token(x).to_owned())),
            None => Ok(()),
        }
    }

    /// `A ∪ (S \ N(A))`.
    pub fn complete_from_clique_part(&self, a: &ElementSet) -> Result<ElementSet> {
        self.check_clique(a)?;
        Ok(self.complete(a))
    }

    fn complete(&self, a: &ElementSet) -> ElementSet {
        let mut undominated = self.dec.independent.clone();
        for x in a {
            undominated.difference_with(self.graph.neighbors(x));
        }
        undominated.union(a)
    }

    pub fn member_dc(&self, a: &ElementSet) -> Result<bool> {
        self.check_clique(a)?;
        Ok(self.member(a))
    }

    fn member(&self, a: &ElementSet) -> bool {
        let s = &self.dec.independent;
        let has_private = |x: usize| {
            self.graph
                .neighbors(x)
                .intersection(s)
                .iter()
                .any(|y| self.graph.neighbors(y).intersection(a).len() == 1)
        };
        if !a.iter().all(has_private) {
            return false;
        }
        let ideal = self.poset.down_closure(&self.complete(a));
        self.graph.is_minimal_dominating_ideal(&self.poset, &ideal)
    }

    /// The solution attached to a member `A`.
    pub fn solution_of(&self, a: &ElementSet) -> ElementSet {
        self.poset.down_closure(&self.complete(a))
    }

    pub fn enumerate(&self) -> SplitEnumerator<'_> {
        SplitEnumerator::new(self)
    }
}

/// Membership-test counts around emissions.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DelayStats {
    pub emissions: usize,
    pub member_tests: usize,
    /// Largest number of tests between two consecutive emissions.
    pub max_gap: usize,
    pub mean_gap: f64,
    /// Tests before the first emission.
    pub head: usize,
    /// Tests after the last emission.
    pub tail: usize,
}

struct Frame {
    set: ElementSet,
    depth: usize,
    next: usize,
    entered: bool,
}

/// Streaming walk over the clique-side family; yields solutions.
pub struct SplitEnumerator<'a> {
    ctx: &'a SplitContext,
    stack: Vec<Frame>,
    started: bool,
    tests: usize,
    since_emit: usize,
    emissions: usize,
    gaps_total: usize,
    max_gap: usize,
    head: usize,
}

impl<'a> SplitEnumerator<'a> {
    fn new(ctx: &'a SplitContext) -> Self {
        Self {
            ctx,
            stack: Vec::new(),
            started: false,
            tests: 0,
            since_emit: 0,
            emissions: 0,
            gaps_total: 0,
            max_gap: 0,
            head: 0,
        }
    }

    fn test(&mut self, a: &ElementSet) -> bool {
        self.tests += 1;
        self.since_emit += 1;
        self.ctx.member(a)
    }

    fn emit(&mut self, a: &ElementSet) -> ElementSet {
        if self.emissions == 0 {
            self.head = self.since_emit;
        } else {
            self.gaps_total += self.since_emit;
            self.max_gap = self.max_gap.max(self.since_emit);
        }
        self.emissions += 1;
        self.since_emit = 0;
        self.ctx.solution_of(a)
    }

    pub fn stats(&self) -> DelayStats {
        let gaps = self.emissions.saturating_sub(1);
        DelayStats {
            emissions: self.emissions,
            member_tests: self.tests,
            max_gap: self.max_gap,
            mean_gap: if gaps == 0 {
                0.0
            } else {
                self.gaps_total as f64 / gaps as f64
            },
            head: self.head,
            tail: if self.emissions == 0 { 0 } else { self.since_emit },
        }
    }
}

impl Iterator for SplitEnumerator<'_> {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        if !self.started {
            self.started = true;
            let root = ElementSet::empty(self.ctx.graph.vertex_count());
            if self.test(&root) {
                self.stack.push(Frame {
                    set: root,
                    depth: 0,
                    next: 0,
                    entered: false,
                });
            }
        }
        let clique = &self.ctx.clique;
        loop {
            let top = self.stack.last_mut()?;
            if !top.entered {
                top.entered = true;
                if top.depth % 2 == 0 {
                    let set = top.set.clone();
                    return Some(self.emit(&set));
                }
            }
            let (set, depth, start) = (top.set.clone(), top.depth, top.next);
            let mut pushed = None;
            for (pos, &c) in clique.iter().enumerate().skip(start) {
                let cand = set.with(c);
                if self.test(&cand) {
                    pushed = Some((pos, cand));
                    break;
                }
            }
            match pushed {
                Some((pos, cand)) => {
                    self.stack.last_mut().unwrap().next = pos + 1;
                    self.stack.push(Frame {
                        set: cand,
                        depth: depth + 1,
                        next: pos + 1,
                        entered: false,
                    });
                }
                None => {
                    let done = self.stack.pop().unwrap();
                    if done.depth % 2 == 1 {
                        return Some(self.emit(&done.set));
                    }
                }
            }
        }
    }
}

/// `ID(G, P)` for a split graph and a neighbourhood inclusion poset.
pub fn enum_split(inst: &IDomInstance) -> Result<IdealFamily> {
    let ctx = SplitContext::from_instance(inst)?;
    let sols = family::canonical(ctx.enumerate().collect());
    Ok(IdealFamily::from_trusted(sols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    // c1 - c2 clique, pendants s1 - c1 and s2 - c2, s1 < c1
    fn pendants() -> IDomInstance {
        let g = Graph::from_tokens(
            &["c1", "c2", "s1", "s2"],
            &[("c1", "c2"), ("s1", "c1"), ("s2", "c2")],
        )
        .unwrap();
        let u = g.universe().clone();
        let p = Poset::new(u.clone(), &[(u.index_of("s1").unwrap(), u.index_of("c1").unwrap())])
            .unwrap();
        IDomInstance::new(g, p).unwrap()
    }

    #[test]
    fn completion_and_membership() {
        let inst = pendants();
        let ctx = SplitContext::from_instance(&inst).unwrap();
        let u = inst.graph.universe();
        let set = |t: &[&str]| u.set(t.iter().copied()).unwrap();
        assert_eq!(ctx.decomposition().independent, set(&["s1", "s2"]));
        assert_eq!(ctx.complete_from_clique_part(&set(&[])).unwrap(), set(&["s1", "s2"]));
        assert_eq!(ctx.complete_from_clique_part(&set(&["c2"])).unwrap(), set(&["c2", "s1"]));
        assert!(ctx.member_dc(&set(&[])).unwrap());
        assert!(!ctx.member_dc(&set(&["c1"])).unwrap());
        assert!(ctx.member_dc(&set(&["c2"])).unwrap());
        assert_eq!(
            ctx.member_dc(&set(&["s1"])).unwrap_err(),
            Error::NotInClique("s1".into())
        );
    }

    #[test]
    fn pendants_solutions() {
        let inst = pendants();
        let u = inst.graph.universe().clone();
        let out = enum_split(&inst).unwrap();
        assert_eq!(
            out.ideals(),
            &[u.set(["c2", "s1"]).unwrap(), u.set(["s1", "s2"]).unwrap()]
        );
        assert_eq!(out, oracle::idom_oracle(&inst, 20).unwrap());
    }

    #[test]
    fn weak_only_poset_refused() {
        // star centre c with leaves a, b; b < c reverses the inclusion
        let g = Graph::from_tokens(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap();
        let u = g.universe().clone();
        let p = Poset::new(u.clone(), &[(u.index_of("c").unwrap(), u.index_of("b").unwrap())])
            .unwrap();
        let err = SplitContext::new(&g, &p).unwrap_err();
        assert!(matches!(err, Error::ContextInvalid(m) if m.contains("weak")));
        let two_k2 = Graph::from_tokens(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("c", "d")],
        )
        .unwrap();
        let p = Poset::antichain(two_k2.universe().clone());
        assert!(matches!(SplitContext::new(&two_k2, &p), Err(Error::ContextInvalid(_))));
    }

    #[test]
    fn stats_on_pendants() {
        let inst = pendants();
        let ctx = SplitContext::from_instance(&inst).unwrap();
        let mut it = ctx.enumerate();
        let n = it.by_ref().count();
        let st = it.stats();
        assert_eq!(st.emissions, n);
        assert!(st.max_gap <= 2 * ctx.decomposition().clique.len());
        assert_eq!(st.member_tests, st.head + st.tail + (st.mean_gap * (n - 1) as f64).round() as usize);
    }
}
