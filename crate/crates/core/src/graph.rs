//! Simple graphs, domination predicates and class recognition.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::family;
use crate::hypergraph::Hypergraph;
use crate::poset::Poset;
use crate::set::ElementSet;
use crate::universe::{self, Universe, UniverseRef};

/// An undirected simple graph.
#[derive(Clone, Debug)]
pub struct Graph {
    universe: UniverseRef,
    /// Open neighbourhoods.
    adj: Vec<ElementSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        universe::same(&self.universe, &other.universe) && self.adj == other.adj
    }
}

impl Eq for Graph {}

/// Partition of a split graph into an independent set and a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitDecomposition {
    pub independent: ElementSet,
    pub clique: ElementSet,
}

impl Graph {
    /// Duplicated pairs collapse; loops are rejected.
    pub fn new(universe: UniverseRef, edges: &[(usize, usize)]) -> Result<Self> {
        let n = universe.len();
        let mut adj = vec![ElementSet::empty(n); n];
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge endpoint out of range");
            if a == b {
                return Err(Error::SelfLoop(universe.token(a).to_owned()));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Self { universe, adj })
    }

    pub fn from_tokens<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let universe = Universe::new(vertices.iter().map(|s| s.as_ref().to_owned()))?;
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((universe.index_of(a.as_ref())?, universe.index_of(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, &pairs)
    }

    pub fn empty(universe: UniverseRef) -> Self {
        Self::new(universe, &[]).expect("no edges")
    }

    pub fn universe(&self) -> &UniverseRef {
        &self.universe
    }

    pub fn vertex_count(&self) -> usize {
        self.universe.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(ElementSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in index order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    /// `N(x)`.
    pub fn neighbors(&self, x: usize) -> &ElementSet {
        &self.adj[x]
    }

    /// `N[x]`.
    pub fn closed_neighbors(&self, x: usize) -> ElementSet {
        self.adj[x].with(x)
    }

    /// `N[D]`.
    pub fn closed_neighbors_of(&self, d: &ElementSet) -> ElementSet {
        let mut out = d.clone();
        for x in d {
            out.union_with(&self.adj[x]);
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.universe.token(u).to_owned()));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let had = self.adj[u].remove(v);
        self.adj[v].remove(u);
        had
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|x| self.adj[x].complement().without(x))
            .collect();
        Graph {
            universe: self.universe.clone(),
            adj,
        }
    }

    /// `G[S]` over a fresh universe with the tokens of `s`.
    pub fn induced_subgraph(&self, s: &ElementSet) -> Graph {
        let u = Universe::new(self.universe.names(s).into_iter().map(str::to_owned))
            .expect("tokens of a valid universe");
        let members = s.to_vec();
        let mut pairs = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        Graph::new(u, &pairs).expect("subgraph of a simple graph")
    }

    /// `N(G)`: the inclusion-minimal closed neighbourhoods.
    pub fn neighborhood_hypergraph(&self) -> Hypergraph {
        let nbhds = (0..self.vertex_count())
            .map(|x| self.closed_neighbors(x))
            .collect();
        Hypergraph::new(self.universe.clone(), family::minimize(nbhds))
            .expect("closed neighbourhoods are non-empty")
    }

    /// `W ⊆ N[D]`.
    pub fn dominates(&self, d: &ElementSet, w: &ElementSet) -> bool {
        w.is_subset(&self.closed_neighbors_of(d))
    }

    pub fn is_dominating(&self, d: &ElementSet) -> bool {
        self.dominates(d, &self.universe.full_set())
    }

    /// How many members of `d` dominate each vertex.
    fn coverage(&self, d: &ElementSet) -> Vec<u32> {
        let mut cnt = vec![0u32; self.vertex_count()];
        for x in d {
            cnt[x] += 1;
            for y in &self.adj[x] {
                cnt[y] += 1;
            }
        }
        cnt
    }

    /// `priv(D, x)`: vertices dominated by `x` and by no other member of `D`.
    pub fn private_neighbors(&self, d: &ElementSet, x: usize) -> Result<ElementSet> {
        if !d.contains(x) {
            return Err(Error::NotInSet(self.universe.token(x).to_owned()));
        }
        let mut out = self.universe.empty_set();
        let nx = self.closed_neighbors(x);
        for y in &nx {
            if self.closed_neighbors(y).intersection(d).len() == 1 {
                out.insert(y);
            }
        }
        Ok(out)
    }

    /// `D` dominates `W` and no member of `D` can be dropped.
    pub fn is_minimal_dominating(&self, d: &ElementSet, w: &ElementSet) -> bool {
        let cnt = self.coverage(d);
        if w.iter().any(|y| cnt[y] == 0) {
            return false;
        }
        d.iter().all(|x| {
            self.closed_neighbors(x)
                .intersection(w)
                .iter()
                .any(|y| cnt[y] == 1)
        })
    }

    /// `I` is an ideal of `poset`, dominates the graph, and every maximal
    /// element of `I` has a private neighbour.
    pub fn is_minimal_dominating_ideal(&self, poset: &Poset, i: &ElementSet) -> bool {
        if !poset.is_ideal(i) {
            return false;
        }
        let cnt = self.coverage(i);
        if cnt.contains(&0) {
            return false;
        }
        poset.max_elements(i).iter().all(|x| {
            cnt[x] == 1 || self.adj[x].iter().any(|y| cnt[y] == 1)
        })
    }

    fn check_ground(&self, poset: &Poset) -> Result<()> {
        if universe::same(&self.universe, poset.universe()) {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }

    /// `x <= y` implies `N[x] ⊆ N[y]`.
    pub fn is_ni_poset(&self, poset: &Poset) -> Result<bool> {
        self.check_ground(poset)?;
        Ok(poset
            .less_pairs()
            .all(|(x, y)| self.closed_neighbors(x).is_subset(&self.closed_neighbors(y))))
    }

    /// `x <= y` implies `N[x]` and `N[y]` are nested one way or the other.
    pub fn is_weak_ni_poset(&self, poset: &Poset) -> Result<bool> {
        self.check_ground(poset)?;
        Ok(poset.less_pairs().all(|(x, y)| {
            let (nx, ny) = (self.closed_neighbors(x), self.closed_neighbors(y));
            nx.is_subset(&ny) || ny.is_subset(&nx)
        }))
    }

    pub fn is_independent(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| self.adj[x].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| s.without(x).is_subset(&self.adj[x]))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .into_iter()
            .all(|(u, v)| self.adj[u].is_disjoint(&self.adj[v]))
    }

    /// Two-colouring by breadth-first search; each component's smallest
    /// vertex lands in the first part.
    pub fn bipartition(&self) -> Option<(ElementSet, ElementSet)> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                let c = color[x].unwrap();
                for y in &self.adj[x] {
                    match color[y] {
                        None => {
                            color[y] = Some(!c);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let left = ElementSet::from_indices(n, (0..n).filter(|&x| color[x] == Some(false)));
        let right = left.complement();
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Partition into two cliques, if one exists.
    pub fn cobipartition(&self) -> Option<(ElementSet, ElementSet)> {
        self.complement().bipartition()
    }

    pub fn is_cobipartite(&self) -> bool {
        self.cobipartition().is_some()
    }

    /// Split recognition from the degree sequence. The returned independent
    /// set has maximum size: a clique vertex without independent neighbours
    /// is moved across.
    pub fn split_partition(&self) -> Option<SplitDecomposition> {
        let n = self.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (std::cmp::Reverse(self.degree(x)), x));
        let deg: Vec<usize> = order.iter().map(|&x| self.degree(x)).collect();
        // m = max { i : d_i >= i - 1 }, 1-based
        let m = (1..=n).rev().find(|&i| deg[i - 1] + 1 >= i).unwrap_or(0);
        let head: usize = deg[..m].iter().sum();
        let tail: usize = deg[m..].iter().sum();
        if head != m * m.saturating_sub(1) + tail {
            return None;
        }
        let mut clique = ElementSet::from_indices(n, order[..m].iter().copied());
        let mut independent = clique.complement();
        if let Some(c) = clique.iter().find(|&c| self.adj[c].is_disjoint(&independent)) {
            clique.remove(c);
            independent.insert(c);
        }
        debug_assert!(self.is_clique(&clique) && self.is_independent(&independent));
        Some(SplitDecomposition {
            independent,
            clique,
        })
    }

    pub fn is_split(&self) -> bool {
        self.split_partition().is_some()
    }

    /// Maximum-independent split decomposition whose independent side holds
    /// only minimal elements of a neighbourhood inclusion poset.
    pub fn split_decomposition_min(&self, poset: &Poset) -> Result<SplitDecomposition> {
        let mut dec = self.split_partition().ok_or(Error::NotSplit)?;
        if !self.is_ni_poset(poset)? {
            return Err(Error::NotNIPoset);
        }
        while let Some(x) = dec
            .independent
            .iter()
            .find(|&x| !poset.strictly_below(x).is_empty())
        {
            let y = poset
                .min_elements(poset.strictly_below(x))
                .first()
                .expect("non-empty lower set has a minimal element");
            if !dec.clique.contains(y) || self.closed_neighbors(x) != self.closed_neighbors(y) {
                return Err(Error::StructureViolation(format!(
                    "{} below independent vertex {} is not its clique twin",
                    self.universe.token(y),
                    self.universe.token(x)
                )));
            }
            dec.independent.remove(x);
            dec.independent.insert(y);
            dec.clique.remove(y);
            dec.clique.insert(x);
        }
        Ok(dec)
    }

    /// Classes of vertices sharing the same closed neighbourhood.
    pub fn twin_classes(&self) -> Vec<ElementSet> {
        self.classes_by(|x| self.closed_neighbors(x))
    }

    /// Classes of vertices sharing the same open neighbourhood.
    pub fn false_twin_classes(&self) -> Vec<ElementSet> {
        self.classes_by(|x| self.adj[x].clone())
    }

    fn classes_by<F: Fn(usize) -> ElementSet>(&self, key: F) -> Vec<ElementSet> {
        let n = self.vertex_count();
        let mut groups: std::collections::BTreeMap<ElementSet, ElementSet> = Default::default();
        for x in 0..n {
            groups
                .entry(key(x))
                .or_insert_with(|| ElementSet::empty(n))
                .insert(x);
        }
        family::canonical(groups.into_values().collect())
    }
}
