//! Exhaustive reference solvers over the ideal lattice.
//!
//! Each walks every ideal of the poset, so they are limited to small posets
//! (see [`crate::DEFAULT_ORACLE_CAP`]).

use crate::dualize::{DualInstance, IDomInstance, ITransInstance};
use crate::error::Result;
use crate::family::{self, IdealFamily};
use crate::poset::Poset;
use crate::set::ElementSet;

fn minimal_ideals<F>(poset: &Poset, cap: usize, keep: F) -> Result<IdealFamily>
where
    F: Fn(&ElementSet) -> bool,
{
    let hits = poset.enumerate_ideals(cap)?.filter(|i| keep(i)).collect();
    Ok(IdealFamily::from_trusted(family::minimize(hits)))
}

/// `B- = Min { I ∈ I(P) | I ⊄ B for all B ∈ B+ }`.
pub fn dual_enum_oracle(inst: &DualInstance, cap: usize) -> Result<IdealFamily> {
    minimal_ideals(&inst.poset, cap, |i| inst.escapes(i))
}

/// `ITr(H, P) = Min { I ∈ I(P) | I is a transversal of H }`.
pub fn itrans_oracle(inst: &ITransInstance, cap: usize) -> Result<IdealFamily> {
    minimal_ideals(&inst.poset, cap, |i| inst.hypergraph.is_transversal(i))
}

/// `ID(G, P) = Min { I ∈ I(P) | I dominates G }`.
pub fn idom_oracle(inst: &IDomInstance, cap: usize) -> Result<IdealFamily> {
    minimal_ideals(&inst.poset, cap, |i| inst.graph.is_dominating(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

    #[test]
    fn empty_bottom_yields_minimal_principal_ideals() {
        let p = Poset::antichain(Universe::new(["a", "b"]).unwrap());
        let u = p.universe().clone();
        let inst = DualInstance::new(p, vec![u.empty_set()]).unwrap();
        let out = dual_enum_oracle(&inst, 20).unwrap();
        assert_eq!(out.ideals(), &[u.set(["a"]).unwrap(), u.set(["b"]).unwrap()]);
    }

    #[test]
    fn whole_set_has_no_dual() {
        let p = Poset::antichain(Universe::new(["a", "b"]).unwrap());
        let u = p.universe().clone();
        let inst = DualInstance::new(p, vec![u.full_set()]).unwrap();
        assert!(dual_enum_oracle(&inst, 20).unwrap().is_empty());
    }
}
