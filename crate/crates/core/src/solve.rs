//! Solver selection.

use std::fmt;
use std::str::FromStr;

use crate::dualize::{self, DualInstance, IDomInstance, ITransInstance};
use crate::error::{Error, Result};
use crate::family::IdealFamily;
use crate::hypergraph::TransversalCaps;
use crate::oracle;
use crate::poset::DEFAULT_ORACLE_CAP;
use crate::split;
use crate::trianglefree;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solver {
    Auto,
    Oracle,
    Generic,
    Split,
    TriangleFree,
}

impl Solver {
    pub fn name(self) -> &'static str {
        match self {
            Solver::Auto => "auto",
            Solver::Oracle => "oracle",
            Solver::Generic => "generic",
            Solver::Split => "split",
            Solver::TriangleFree => "trianglefree",
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Solver::Auto,
            "oracle" => Solver::Oracle,
            "generic" => Solver::Generic,
            "split" => Solver::Split,
            "trianglefree" => Solver::TriangleFree,
            _ => return Err(Error::InvalidParams(format!("unknown solver {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub oracle: usize,
    pub transversal: TransversalCaps,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            oracle: DEFAULT_ORACLE_CAP,
            transversal: TransversalCaps::default(),
        }
    }
}

/// Split solver for split graphs under inclusion posets, triangle-free
/// solver under weak inclusion posets, generic otherwise.
pub fn route(inst: &IDomInstance) -> Solver {
    let (g, p) = (&inst.graph, &inst.poset);
    if g.is_split() && g.is_ni_poset(p).unwrap_or(false) {
        Solver::Split
    } else if g.is_triangle_free() && g.is_weak_ni_poset(p).unwrap_or(false) {
        Solver::TriangleFree
    } else {
        Solver::Generic
    }
}

fn resolve(solver: Solver, inst: &IDomInstance) -> Solver {
    match solver {
        Solver::Auto => route(inst),
        s => s,
    }
}

pub fn solve_idom(inst: &IDomInstance, solver: Solver, caps: &Caps) -> Result<IdealFamily> {
    match resolve(solver, inst) {
        Solver::Oracle => oracle::idom_oracle(inst, caps.oracle),
        Solver::Split => split::enum_split(inst),
        Solver::TriangleFree => trianglefree::enum_trianglefree(inst, &caps.transversal),
        _ => dualize::idom_enum_generic(inst, &caps.transversal),
    }
}

pub fn solve_itrans(inst: &ITransInstance, solver: Solver, caps: &Caps) -> Result<IdealFamily> {
    match solver {
        Solver::Oracle => oracle::itrans_oracle(inst, caps.oracle),
        Solver::Auto | Solver::Generic => dualize::itrans_enum_generic(inst, &caps.transversal),
        s => Err(Error::InvalidParams(format!("solver {s} needs a graph instance"))),
    }
}

pub fn solve_dual(inst: &DualInstance, solver: Solver, caps: &Caps) -> Result<IdealFamily> {
    match solver {
        Solver::Oracle => oracle::dual_enum_oracle(inst, caps.oracle),
        Solver::Auto | Solver::Generic => dualize::dual_enum_generic(inst, &caps.transversal),
        s => Err(Error::InvalidParams(format!("solver {s} needs a graph instance"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn routing_respects_preconditions() {
        let mut r = gen::rng(3);
        let s = gen::split_ni(&mut r, 3, 4, 0.5, 0.5).unwrap();
        assert_eq!(route(&s), Solver::Split);
        for _ in 0..20 {
            let inst = gen::graph_ni(&mut r, 7, 0.4, 0.3).unwrap();
            let chosen = route(&inst);
            let out = solve_idom(&inst, Solver::Auto, &Caps::default()).unwrap();
            assert_eq!(out, oracle::idom_oracle(&inst, 20).unwrap(), "{chosen}");
        }
    }

    #[test]
    fn names_round_trip() {
        for s in [Solver::Auto, Solver::Oracle, Solver::Generic, Solver::Split, Solver::TriangleFree] {
            assert_eq!(s.name().parse::<Solver>().unwrap(), s);
        }
        assert!("fast".parse::<Solver>().is_err());
    }
}
