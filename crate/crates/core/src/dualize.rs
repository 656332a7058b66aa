//! Problem instances, the generic transversal-ideal solver, and the
//! translations between dual antichains and transversal-ideals.

use crate::error::{Error, Result};
use crate::family::{self, IdealFamily};
use crate::graph::Graph;
use crate::hypergraph::{Hypergraph, TransversalCaps};
use crate::oracle;
use crate::poset::Poset;
use crate::set::ElementSet;
use crate::universe;

/// A hypergraph with a partial order on its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ITransInstance {
    pub hypergraph: Hypergraph,
    pub poset: Poset,
}

impl ITransInstance {
    pub fn new(hypergraph: Hypergraph, poset: Poset) -> Result<Self> {
        if !universe::same(hypergraph.universe(), poset.universe()) {
            return Err(Error::GroundMismatch);
        }
        Ok(Self { hypergraph, poset })
    }
}

/// A poset with an antichain `B+` of its ideal lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualInstance {
    pub poset: Poset,
    pub bplus: IdealFamily,
}

impl DualInstance {
    pub fn new(poset: Poset, bplus: Vec<ElementSet>) -> Result<Self> {
        let bplus = IdealFamily::new(&poset, bplus)?;
        Ok(Self { poset, bplus })
    }

    /// `I ⊄ B` for every `B ∈ B+`.
    pub fn escapes(&self, ideal: &ElementSet) -> bool {
        self.bplus.iter().all(|b| !ideal.is_subset(b))
    }
}

/// A graph with a partial order on its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IDomInstance {
    pub graph: Graph,
    pub poset: Poset,
}

impl IDomInstance {
    pub fn new(graph: Graph, poset: Poset) -> Result<Self> {
        if !universe::same(graph.universe(), poset.universe()) {
            return Err(Error::GroundMismatch);
        }
        Ok(Self { graph, poset })
    }

    /// The equivalent transversal-ideal instance on `N(G)`.
    pub fn to_itrans(&self) -> ITransInstance {
        ITransInstance {
            hypergraph: self.graph.neighborhood_hypergraph(),
            poset: self.poset.clone(),
        }
    }
}

/// Greedy first member of `B-`: start from the whole ground set and drop
/// maximal elements while the result still escapes every member of `B+`.
/// Candidates are tried in reverse token order and the scan restarts after
/// every removal.
pub fn first_solution(inst: &DualInstance) -> Result<ElementSet> {
    let p = &inst.poset;
    let mut ideal = p.universe().full_set();
    if !inst.escapes(&ideal) {
        return Err(Error::NoSolution);
    }
    'scan: loop {
        let maxima = p.max_elements(&ideal).to_vec();
        for &x in maxima.iter().rev() {
            let smaller = ideal.without(x);
            if inst.escapes(&smaller) {
                ideal = smaller;
                continue 'scan;
            }
        }
        return Ok(ideal);
    }
}

/// `ITr(H, P)` as the minimal down-closures of minimal transversals of the
/// filter-closed hypergraph.
pub fn itrans_enum_generic(inst: &ITransInstance, caps: &TransversalCaps) -> Result<IdealFamily> {
    let closed = inst.hypergraph.filter_closure(&inst.poset)?;
    let lifted = closed
        .transversal_enum(caps)?
        .into_iter()
        .map(|t| inst.poset.down_closure(&t))
        .collect();
    Ok(IdealFamily::from_trusted(family::minimize(lifted)))
}

/// `ID(G, P)` computed as `ITr(N(G), P)`.
pub fn idom_enum_generic(inst: &IDomInstance, caps: &TransversalCaps) -> Result<IdealFamily> {
    itrans_enum_generic(&inst.to_itrans(), caps)
}

/// `B-` through the transversal-ideal formulation.
pub fn dual_enum_generic(inst: &DualInstance, caps: &TransversalCaps) -> Result<IdealFamily> {
    let full = inst.poset.universe().full_set();
    if inst.bplus.iter().any(|b| *b == full) {
        return Ok(IdealFamily::from_trusted(Vec::new()));
    }
    itrans_enum_generic(&dual_to_itrans(inst)?, caps)
}

/// Complement hypergraph `{X \ B | B ∈ B+}` over the same poset.
pub fn dual_to_itrans(inst: &DualInstance) -> Result<ITransInstance> {
    let edges: Vec<ElementSet> = inst.bplus.iter().map(ElementSet::complement).collect();
    if edges.iter().any(ElementSet::is_empty) {
        return Err(Error::EmptyEdge);
    }
    let hypergraph = Hypergraph::new(inst.poset.universe().clone(), edges)?;
    Ok(ITransInstance {
        hypergraph,
        poset: inst.poset.clone(),
    })
}

/// `B+` = complements of the edges of the filter-closed hypergraph.
pub fn itrans_to_dual(inst: &ITransInstance) -> Result<DualInstance> {
    let closed = inst.hypergraph.filter_closure(&inst.poset)?;
    let bplus = closed.edges().iter().map(ElementSet::complement).collect();
    DualInstance::new(inst.poset.clone(), bplus)
}

/// Whether `bminus` is the dual antichain of `B+`, decided against the
/// exhaustive oracle.
pub fn check_dual(inst: &DualInstance, bminus: Vec<ElementSet>, cap: usize) -> Result<bool> {
    let bminus = IdealFamily::new(&inst.poset, bminus)?;
    let expected = oracle::dual_enum_oracle(inst, cap)?;
    Ok(expected == bminus)
}
