//! Hypergraphs, filter closure and minimal transversals.

use crate::error::{Error, Result};
use crate::family;
use crate::graph::Graph;
use crate::poset::Poset;
use crate::set::ElementSet;
use crate::universe::{self, Universe, UniverseRef};

/// Limits for the baseline transversal enumerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransversalCaps {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Largest intermediate family the Berge fold may hold.
    pub max_family: usize,
}

impl Default for TransversalCaps {
    fn default() -> Self {
        Self {
            max_vertices: 512,
            max_edges: 4096,
            max_family: 1_000_000,
        }
    }
}

/// A hypergraph whose edges are non-empty, deduplicated and kept in
/// canonical order.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    universe: UniverseRef,
    edges: Vec<ElementSet>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        universe::same(&self.universe, &other.universe) && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    pub fn new(universe: UniverseRef, edges: Vec<ElementSet>) -> Result<Self> {
        for e in &edges {
            if e.capacity() != universe.len() {
                return Err(Error::GroundMismatch);
            }
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
        }
        Ok(Self {
            universe,
            edges: family::canonical(edges),
        })
    }

    pub fn from_tokens<S: AsRef<str>>(vertices: &[S], edges: &[&[S]]) -> Result<Self> {
        let universe = Universe::new(vertices.iter().map(|s| s.as_ref().to_owned()))?;
        let edges = edges
            .iter()
            .map(|e| universe.set(e.iter()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, edges)
    }

    pub fn universe(&self) -> &UniverseRef {
        &self.universe
    }

    pub fn edges(&self) -> &[ElementSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.universe.len()
    }

    pub fn is_sperner(&self) -> bool {
        family::is_sperner(&self.edges)
    }

    /// Edges incident to `x`, as indices into [`Hypergraph::edges`].
    pub fn incident(&self, x: usize) -> ElementSet {
        ElementSet::from_indices(
            self.edges.len(),
            self.edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.contains(x))
                .map(|(i, _)| i),
        )
    }

    /// Keeps only the inclusion-minimal edges.
    pub fn sperner_min(&self) -> Hypergraph {
        Hypergraph {
            universe: self.universe.clone(),
            edges: family::minimize(self.edges.clone()),
        }
    }

    fn check_ground(&self, poset: &Poset) -> Result<()> {
        if universe::same(&self.universe, poset.universe()) {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }

    /// Replaces every edge by its up-closure and keeps the minimal ones.
    pub fn filter_closure(&self, poset: &Poset) -> Result<Hypergraph> {
        self.check_ground(poset)?;
        let closed = self.edges.iter().map(|e| poset.up_closure(e)).collect();
        Ok(Hypergraph {
            universe: self.universe.clone(),
            edges: family::minimize(closed),
        })
    }

    pub fn is_transversal(&self, s: &ElementSet) -> bool {
        self.edges.iter().all(|e| e.intersects(s))
    }

    pub fn is_minimal_transversal(&self, s: &ElementSet) -> bool {
        self.is_transversal(s) && s.iter().all(|x| !self.is_transversal(&s.without(x)))
    }

    /// `x <= y` implies every edge through `x` also passes through `y`.
    pub fn is_incident_edge_inclusion(&self, poset: &Poset) -> Result<bool> {
        self.check_ground(poset)?;
        Ok(poset.less_pairs().all(|(x, y)| {
            self.edges
                .iter()
                .all(|e| !e.contains(x) || e.contains(y))
        }))
    }

    /// All minimal transversals by Berge multiplication, canonically ordered.
    ///
    /// A hypergraph without edges has the empty set as its only minimal
    /// transversal.
    pub fn transversal_enum(&self, caps: &TransversalCaps) -> Result<Vec<ElementSet>> {
        if self.vertex_count() > caps.max_vertices {
            return Err(Error::CapExceeded {
                what: "transversal vertex",
                cap: caps.max_vertices,
            });
        }
        if self.edge_count() > caps.max_edges {
            return Err(Error::CapExceeded {
                what: "transversal edge",
                cap: caps.max_edges,
            });
        }
        let mut edges = family::minimize(self.edges.clone());
        edges.sort_by_key(ElementSet::len);
        let mut current = vec![self.universe.empty_set()];
        for e in &edges {
            let (hit, miss): (Vec<_>, Vec<_>) = current.into_iter().partition(|t| t.intersects(e));
            let mut next = hit;
            let kept = next.len();
            for t in &miss {
                for x in e {
                    let cand = t.with(x);
                    // candidates from distinct missing sets never nest
                    if !next[..kept].iter().any(|h| h.is_subset(&cand)) {
                        next.push(cand);
                    }
                }
                if next.len() > caps.max_family {
                    return Err(Error::CapExceeded {
                        what: "transversal family",
                        cap: caps.max_family,
                    });
                }
            }
            current = next;
        }
        Ok(family::canonical(current))
    }

    /// `I(H)`: vertices of `H` plus one vertex `_e<i>` per edge (1-based, in
    /// canonical edge order), adjacent to the members of that edge.
    pub fn bipartite_incidence_graph(&self) -> IncidenceGraph {
        let names: Vec<String> = (1..=self.edges.len()).map(edge_vertex_name).collect();
        let tokens = self
            .universe
            .tokens()
            .iter()
            .cloned()
            .chain(names.iter().cloned());
        let gu = Universe::new(tokens).expect("reserved edge names never clash with user tokens");
        let xmap: Vec<usize> = self
            .universe
            .tokens()
            .iter()
            .map(|t| gu.index_of(t).unwrap())
            .collect();
        let edge_vertices: Vec<usize> = names.iter().map(|t| gu.index_of(t).unwrap()).collect();
        let mut pairs = Vec::new();
        for (e, &y) in self.edges.iter().zip(&edge_vertices) {
            for x in e {
                pairs.push((xmap[x], y));
            }
        }
        let graph = Graph::new(gu.clone(), &pairs).expect("incidence pairs are simple");
        IncidenceGraph {
            graph,
            vertex_map: xmap,
            edge_vertices,
        }
    }
}

/// Token of the incidence vertex for the `i`-th edge (1-based).
pub fn edge_vertex_name(i: usize) -> String {
    format!("{}e{i}", universe::RESERVED_PREFIX)
}

/// The bipartite incidence graph together with its naming maps.
#[derive(Clone, Debug)]
pub struct IncidenceGraph {
    pub graph: Graph,
    /// Graph index of each hypergraph vertex.
    pub vertex_map: Vec<usize>,
    /// Graph index of `y_e` for each edge, aligned with [`Hypergraph::edges`].
    pub edge_vertices: Vec<usize>,
}
