//! Dualization in distributive lattices given by the ideals of a poset.
//!
//! The same problem is exposed in three shapes: dual antichains of the ideal
//! lattice ([`dualize`]), minimal transversal-ideals of a hypergraph, and
//! minimal dominating-ideals of a graph. [`reductions`] translates between
//! them, [`split`] and [`trianglefree`] solve the two tractable graph
//! classes, and [`oracle`] provides exhaustive reference answers for small
//! instances.

pub mod dualize;
pub mod error;
pub mod family;
pub mod format;
pub mod gen;
pub mod graph;
pub mod hypergraph;
pub mod oracle;
pub mod poset;
pub mod reductions;
pub mod set;
pub mod solve;
pub mod split;
pub mod trianglefree;
pub mod universe;

pub use dualize::{DualInstance, IDomInstance, ITransInstance};
pub use error::{Error, Result};
pub use family::IdealFamily;
pub use graph::{Graph, SplitDecomposition};
pub use hypergraph::{Hypergraph, TransversalCaps};
pub use poset::{Poset, DEFAULT_ORACLE_CAP};
pub use set::ElementSet;
pub use universe::{Universe, UniverseRef};
