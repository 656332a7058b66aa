//! Brute-force references built from plain subset scans, independent of the
//! library's ideal enumeration and transversal code.

#![allow(dead_code)]

use distlat::{ElementSet, Graph, Hypergraph, Poset};

fn subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    assert!(n <= 20, "subset scan limited to 20 elements");
    (0u32..1 << n).map(move |mask| ElementSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)))
}

fn is_ideal(p: &Poset, s: &ElementSet) -> bool {
    let n = p.len();
    (0..n).all(|y| !s.contains(y) || (0..n).all(|x| !p.less(x, y) || s.contains(x)))
}

fn minimal(mut sets: Vec<ElementSet>) -> Vec<ElementSet> {
    let keep: Vec<bool> = sets
        .iter()
        .map(|s| !sets.iter().any(|t| t != s && t.is_subset(s)))
        .collect();
    let mut out: Vec<ElementSet> = sets.drain(..).zip(keep).filter(|(_, k)| *k).map(|(s, _)| s).collect();
    out.sort();
    out.dedup();
    out
}

pub fn min_ideals_where<F: Fn(&ElementSet) -> bool>(p: &Poset, keep: F) -> Vec<ElementSet> {
    minimal(subsets(p.len()).filter(|s| is_ideal(p, s) && keep(s)).collect())
}

pub fn hits_all(h: &Hypergraph, s: &ElementSet) -> bool {
    h.edges().iter().all(|e| e.iter().any(|x| s.contains(x)))
}

pub fn dominates(g: &Graph, s: &ElementSet) -> bool {
    (0..g.vertex_count()).all(|y| s.contains(y) || s.iter().any(|x| g.has_edge(x, y)))
}

pub fn itrans(h: &Hypergraph, p: &Poset) -> Vec<ElementSet> {
    min_ideals_where(p, |s| hits_all(h, s))
}

pub fn idom(g: &Graph, p: &Poset) -> Vec<ElementSet> {
    min_ideals_where(p, |s| dominates(g, s))
}

pub fn dual(p: &Poset, bplus: &[ElementSet]) -> Vec<ElementSet> {
    min_ideals_where(p, |s| bplus.iter().all(|b| !s.is_subset(b)))
}

/// Minimal transversals without any order.
pub fn transversals(h: &Hypergraph) -> Vec<ElementSet> {
    minimal(subsets(h.vertex_count()).filter(|s| hits_all(h, s)).collect())
}

/// Minimal dominating sets without any order.
pub fn dominating_sets(g: &Graph) -> Vec<ElementSet> {
    minimal(subsets(g.vertex_count()).filter(|s| dominates(g, s)).collect())
}
