//! Minimal dominating-ideals of triangle-free graphs under weak
//! neighbourhood inclusion posets.
//!
//! Such a poset has height at most two and splits into isolated elements
//! `A` and disjoint stars whose branches are pendant vertices. Contracting
//! each star's branches to one vertex `v_i` and deleting centre-centre
//! edges leaves an induced matching `u_i v_i`. Every solution then contains
//! `w_i = min(u_i, v_i)`, and the remaining choice is a minimal set
//! dominating `A' = A \ ∪ N[w_i]`.

use std::collections::BTreeMap;

use crate::dualize::IDomInstance;
use crate::error::{Error, Result};
use crate::family::{self, IdealFamily};
use crate::graph::Graph;
use crate::hypergraph::{Hypergraph, TransversalCaps};
use crate::poset::Poset;
use crate::set::ElementSet;
use crate::universe::UniverseRef;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    BranchesBelow,
    BranchesAbove,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    pub center: usize,
    pub branches: ElementSet,
    pub orientation: Orientation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDecomposition {
    /// Elements comparable to nothing.
    pub isolated: ElementSet,
    pub stars: Vec<Star>,
}

fn violation(msg: String) -> Error {
    Error::StructureViolation(msg)
}

fn check_preconditions(g: &Graph, p: &Poset) -> Result<()> {
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    if !g.is_weak_ni_poset(p)? {
        return Err(Error::NotWeakNIPoset);
    }
    Ok(())
}

/// Splits the poset into isolated elements and stars, then checks height,
/// the partition, and the degree of every branch.
pub fn star_decompose(g: &Graph, p: &Poset) -> Result<StarDecomposition> {
    check_preconditions(g, p)?;
    let n = p.len();
    let tok = |x: usize| g.universe().token(x).to_owned();
    if p.height() > 2 {
        return Err(violation(format!("poset height {} exceeds two", p.height())));
    }
    let related = |x: usize| p.strictly_above(x).union(p.strictly_below(x));
    let isolated = ElementSet::from_indices(n, (0..n).filter(|&x| related(x).is_empty()));
    let mut seen = isolated.clone();
    let mut stars = Vec::new();
    for x in 0..n {
        if seen.contains(x) {
            continue;
        }
        let mut comp = ElementSet::singleton(n, x);
        let mut frontier = vec![x];
        while let Some(y) = frontier.pop() {
            for z in &related(y) {
                if comp.insert(z) {
                    frontier.push(z);
                }
            }
        }
        seen.union_with(&comp);
        let members = comp.to_vec();
        let center = if members.len() == 2 {
            let (a, b) = (members[0], members[1]);
            let (lo, hi) = if p.less(a, b) { (a, b) } else { (b, a) };
            if g.closed_neighbors(lo).is_subset(&g.closed_neighbors(hi)) {
                hi
            } else {
                lo
            }
        } else {
            let full: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&c| related(c).len() + 1 == members.len())
                .collect();
            if full.len() != 1 {
                return Err(violation(format!("component of {} is not a star", tok(x))));
            }
            full[0]
        };
        let branches = comp.without(center);
        let orientation = if branches.is_subset(p.strictly_below(center)) {
            Orientation::BranchesBelow
        } else if branches.is_subset(p.strictly_above(center)) {
            Orientation::BranchesAbove
        } else {
            return Err(violation(format!("star at {} mixes directions", tok(center))));
        };
        if !p.is_antichain(&branches) {
            return Err(violation(format!("branches of {} are comparable", tok(center))));
        }
        for b in &branches {
            if g.degree(b) != 1 || !g.has_edge(b, center) {
                return Err(violation(format!(
                    "branch {} of {} is not a pendant of its centre",
                    tok(b),
                    tok(center)
                )));
            }
        }
        stars.push(Star {
            center,
            branches,
            orientation,
        });
    }
    Ok(StarDecomposition { isolated, stars })
}

/// The contracted instance. Indices refer to `graph`/`poset` unless noted.
#[derive(Clone, Debug)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub poset: Poset,
    pub original: UniverseRef,
    /// Original index of every reduced vertex.
    pub to_original: Vec<usize>,
    /// Original branch sets, one per star.
    pub contraction: Vec<ElementSet>,
    pub bu: Vec<usize>,
    pub bv: Vec<usize>,
    pub bw: Vec<usize>,
    /// Removed centre-centre edges.
    pub removed: Vec<(usize, usize)>,
    pub isolated: ElementSet,
    pub a_prime: ElementSet,
}

pub fn reduce_tf(g: &Graph, p: &Poset, sd: &StarDecomposition) -> Result<ReducedInstance> {
    let n = g.vertex_count();
    let mut keep = ElementSet::full(n);
    let mut reps = Vec::with_capacity(sd.stars.len());
    for star in &sd.stars {
        let v = star
            .branches
            .first()
            .ok_or_else(|| violation("star without branches".into()))?;
        for b in &star.branches {
            if g.neighbors(b) != g.neighbors(v) {
                return Err(violation(format!(
                    "branches {} and {} are not false twins",
                    g.universe().token(v),
                    g.universe().token(b)
                )));
            }
        }
        keep.difference_with(&star.branches.without(v));
        reps.push(v);
    }
    let to_original = keep.to_vec();
    let mut index = vec![usize::MAX; n];
    for (i, &x) in to_original.iter().enumerate() {
        index[x] = i;
    }
    let mut graph = g.induced_subgraph(&keep);
    let poset = p.induced_subposet(&keep);
    let bu: Vec<usize> = sd.stars.iter().map(|s| index[s.center]).collect();
    let bv: Vec<usize> = reps.iter().map(|&v| index[v]).collect();

    let mut removed = Vec::new();
    for i in 0..bu.len() {
        for j in i + 1..bu.len() {
            let (ui, uj) = (bu[i], bu[j]);
            if !graph.has_edge(ui, uj) {
                continue;
            }
            let mut without = graph.clone();
            without.remove_edge(ui, uj);
            for (u, v) in [(ui, bv[i]), (uj, bv[j])] {
                if !without.closed_neighbors(v).is_subset(&without.closed_neighbors(u)) {
                    return Err(violation(format!(
                        "edge {} {} is not redundant",
                        graph.universe().token(ui),
                        graph.universe().token(uj)
                    )));
                }
            }
            graph = without;
            removed.push((ui, uj));
        }
    }

    let mut bw = Vec::with_capacity(bu.len());
    for (&u, &v) in bu.iter().zip(&bv) {
        bw.push(if poset.less(v, u) {
            v
        } else if poset.less(u, v) {
            u
        } else {
            return Err(violation(format!(
                "{} and {} are incomparable",
                graph.universe().token(u),
                graph.universe().token(v)
            )));
        });
    }
    let m = graph.vertex_count();
    let isolated = ElementSet::from_indices(m, sd.isolated.iter().map(|x| index[x]));
    let mut a_prime = isolated.clone();
    for &w in &bw {
        a_prime.difference_with(&graph.closed_neighbors(w));
    }
    Ok(ReducedInstance {
        graph,
        poset,
        original: g.universe().clone(),
        to_original,
        contraction: sd.stars.iter().map(|s| s.branches.clone()).collect(),
        bu,
        bv,
        bw,
        removed,
        isolated,
        a_prime,
    })
}

impl ReducedInstance {
    /// Induced matching on `u_i v_i`, each `v_i` away from the isolated
    /// elements, and every `w_i` the lower end of its chain.
    pub fn check_invariants(&self) -> Result<()> {
        let g = &self.graph;
        let k = self.bu.len();
        let ends: Vec<usize> = self.bu.iter().chain(&self.bv).copied().collect();
        for (a, &x) in ends.iter().enumerate() {
            for &y in &ends[a + 1..] {
                let paired = (0..k).any(|i| {
                    (self.bu[i], self.bv[i]) == (x, y) || (self.bu[i], self.bv[i]) == (y, x)
                });
                if g.has_edge(x, y) != paired {
                    return Err(violation("matching edges are not induced".into()));
                }
            }
        }
        for i in 0..k {
            if g.neighbors(self.bv[i]).intersects(&self.isolated) {
                return Err(violation("a contracted vertex touches an isolated element".into()));
            }
            let (u, v, w) = (self.bu[i], self.bv[i], self.bw[i]);
            let lower = if self.poset.less(u, v) { u } else { v };
            if w != lower || !self.poset.comparable(u, v) {
                return Err(violation("w is not the lower end of its chain".into()));
            }
        }
        Ok(())
    }

    /// Contraction manifest, one star or removed edge per line.
    pub fn manifest(&self) -> String {
        let gu = self.graph.universe();
        let mut out = String::new();
        for i in 0..self.bu.len() {
            out.push_str(&format!(
                "star: center {} rep {} min {} branches {}\n",
                gu.token(self.bu[i]),
                gu.token(self.bv[i]),
                gu.token(self.bw[i]),
                self.original.names(&self.contraction[i]).join(" ")
            ));
        }
        for &(a, b) in &self.removed {
            out.push_str(&format!("removed-edge: {} {}\n", gu.token(a), gu.token(b)));
        }
        out.push_str(&format!("residual: {}\n", gu.names(&self.a_prime).join(" ")));
        out
    }
}

/// Minimal subsets of `V(G)` dominating `W`.
pub fn enum_dw(g: &Graph, w: &ElementSet, caps: &TransversalCaps) -> Result<Vec<ElementSet>> {
    let edges = w.iter().map(|x| g.closed_neighbors(x)).collect();
    let h = Hypergraph::new(g.universe().clone(), family::minimize(edges))?;
    h.transversal_enum(caps)
}

/// `↓(D* ∪ { w_i | v_i ∉ N[D*] })` in the reduced poset.
pub fn lift(ri: &ReducedInstance, dstar: &ElementSet) -> Result<ElementSet> {
    if !ri.graph.is_minimal_dominating(dstar, &ri.a_prime) {
        return Err(Error::NotAValidDStar);
    }
    let covered = ri.graph.closed_neighbors_of(dstar);
    let mut d = dstar.clone();
    for (&v, &w) in ri.bv.iter().zip(&ri.bw) {
        if !covered.contains(v) {
            d.insert(w);
        }
    }
    Ok(ri.poset.down_closure(&d))
}

/// Maps a reduced solution to the original universe, replacing each `v_i`
/// by all branches of its star.
pub fn expand(ri: &ReducedInstance, ideal: &ElementSet) -> ElementSet {
    let mut out = ElementSet::from_indices(
        ri.original.len(),
        ideal.iter().map(|x| ri.to_original[x]),
    );
    let reps: BTreeMap<usize, usize> = ri.bv.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for x in ideal {
        if let Some(&i) = reps.get(&x) {
            out.union_with(&ri.contraction[i]);
        }
    }
    out
}

/// Full pipeline, also returning the reduced instance.
pub fn enum_trianglefree_with(
    inst: &IDomInstance,
    caps: &TransversalCaps,
) -> Result<(IdealFamily, ReducedInstance)> {
    let sd = star_decompose(&inst.graph, &inst.poset)?;
    let ri = reduce_tf(&inst.graph, &inst.poset, &sd)?;
    let mut sols = Vec::new();
    for dstar in enum_dw(&ri.graph, &ri.a_prime, caps)? {
        sols.push(expand(&ri, &lift(&ri, &dstar)?));
    }
    Ok((IdealFamily::from_trusted(family::canonical(sols)), ri))
}

pub fn enum_trianglefree(inst: &IDomInstance, caps: &TransversalCaps) -> Result<IdealFamily> {
    enum_trianglefree_with(inst, caps).map(|(f, _)| f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn path3() -> IDomInstance {
        let g = Graph::from_tokens(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let p = Poset::new(g.universe().clone(), &[(0, 1)]).unwrap();
        IDomInstance::new(g, p).unwrap()
    }

    #[test]
    fn antichain_is_all_isolated() {
        let inst = path3();
        let p = Poset::antichain(inst.graph.universe().clone());
        let sd = star_decompose(&inst.graph, &p).unwrap();
        assert_eq!(sd.isolated.len(), 3);
        assert!(sd.stars.is_empty());
    }

    #[test]
    fn path3_pipeline() {
        let inst = path3();
        let u = inst.graph.universe().clone();
        let sd = star_decompose(&inst.graph, &inst.poset).unwrap();
        assert_eq!(sd.isolated, u.set(["c"]).unwrap());
        assert_eq!(
            sd.stars,
            vec![Star {
                center: 1,
                branches: u.set(["a"]).unwrap(),
                orientation: Orientation::BranchesBelow
            }]
        );
        let ri = reduce_tf(&inst.graph, &inst.poset, &sd).unwrap();
        ri.check_invariants().unwrap();
        assert_eq!((ri.bu.clone(), ri.bv.clone(), ri.bw.clone()), (vec![1], vec![0], vec![0]));
        assert_eq!(ri.a_prime, u.set(["c"]).unwrap());
        let caps = TransversalCaps::default();
        let dw = enum_dw(&ri.graph, &ri.a_prime, &caps).unwrap();
        assert_eq!(dw, vec![u.set(["b"]).unwrap(), u.set(["c"]).unwrap()]);
        assert_eq!(lift(&ri, &u.set(["c"]).unwrap()).unwrap(), u.set(["a", "c"]).unwrap());
        assert_eq!(lift(&ri, &u.set(["b"]).unwrap()).unwrap(), u.set(["a", "b"]).unwrap());
        assert_eq!(lift(&ri, &u.set(["a"]).unwrap()).unwrap_err(), Error::NotAValidDStar);
        let out = enum_trianglefree(&inst, &caps).unwrap();
        assert_eq!(
            out.ideals(),
            &[u.set(["a", "b"]).unwrap(), u.set(["a", "c"]).unwrap()]
        );
        assert_eq!(out, oracle::idom_oracle(&inst, 20).unwrap());
    }

    #[test]
    fn empty_residual_gives_empty_dstar() {
        let g = Graph::from_tokens(&["a", "b"], &[("a", "b")]).unwrap();
        let u = g.universe().clone();
        let dw = enum_dw(&g, &u.empty_set(), &TransversalCaps::default()).unwrap();
        assert_eq!(dw, vec![u.empty_set()]);
    }

    #[test]
    fn three_branch_star_contracts_and_expands() {
        // centre c with leaves l1 l2 l3 below it, plus c - d - e
        let g = Graph::from_tokens(
            &["c", "d", "e", "l1", "l2", "l3"],
            &[("c", "l1"), ("c", "l2"), ("c", "l3"), ("c", "d"), ("d", "e")],
        )
        .unwrap();
        let u = g.universe().clone();
        let c = u.index_of("c").unwrap();
        let pairs: Vec<(usize, usize)> = ["l1", "l2", "l3"]
            .iter()
            .map(|l| (u.index_of(l).unwrap(), c))
            .collect();
        let p = Poset::new(u.clone(), &pairs).unwrap();
        let inst = IDomInstance::new(g, p).unwrap();
        let sd = star_decompose(&inst.graph, &inst.poset).unwrap();
        let ri = reduce_tf(&inst.graph, &inst.poset, &sd).unwrap();
        assert_eq!(ri.graph.vertex_count(), 4);
        let rv = ri.bv[0];
        let full = expand(&ri, &ElementSet::singleton(4, rv));
        assert_eq!(full, u.set(["l1", "l2", "l3"]).unwrap());
        let out = enum_trianglefree(&inst, &TransversalCaps::default()).unwrap();
        assert_eq!(out, oracle::idom_oracle(&inst, 20).unwrap());
    }

    #[test]
    fn centre_edge_removed() {
        // two P2 stars a<b, c<d with centres b, d joined, plus isolated e - d
        let g = Graph::from_tokens(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("c", "d"), ("b", "d"), ("d", "e")],
        )
        .unwrap();
        let u = g.universe().clone();
        let ix = |t: &str| u.index_of(t).unwrap();
        let p = Poset::new(u.clone(), &[(ix("a"), ix("b")), (ix("c"), ix("d"))]).unwrap();
        let inst = IDomInstance::new(g, p).unwrap();
        let (out, ri) = enum_trianglefree_with(&inst, &TransversalCaps::default()).unwrap();
        assert_eq!(ri.removed, vec![(ix("b"), ix("d"))]);
        ri.check_invariants().unwrap();
        assert!(ri.manifest().contains("removed-edge: b d"));
        assert_eq!(out, oracle::idom_oracle(&inst, 20).unwrap());
    }

    #[test]
    fn preconditions() {
        let tri = Graph::from_tokens(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
            .unwrap();
        let p = Poset::antichain(tri.universe().clone());
        assert_eq!(star_decompose(&tri, &p).unwrap_err(), Error::NotTriangleFree);
        // a - b - c - d with a < c: N[a], N[c] not nested
        let g = Graph::from_tokens(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])
            .unwrap();
        let p = Poset::new(g.universe().clone(), &[(0, 2)]).unwrap();
        assert_eq!(star_decompose(&g, &p).unwrap_err(), Error::NotWeakNIPoset);
    }
}
