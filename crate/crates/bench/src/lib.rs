//! Seeded workloads shared by the benchmarks.

use distlat::gen;
use distlat::{IDomInstance, ITransInstance};

pub fn itrans(n: usize, m: usize, seed: u64) -> ITransInstance {
    gen::itrans(&mut gen::rng(seed), n, m, 0.3, 0.3).expect("valid parameters")
}

pub fn split(clique: usize, indep: usize, seed: u64) -> IDomInstance {
    gen::split_ni(&mut gen::rng(seed), clique, indep, 0.9, 0.3).expect("valid parameters")
}

pub fn trianglefree(core: usize, leaves: usize, seed: u64) -> IDomInstance {
    gen::trianglefree_weak_ni(&mut gen::rng(seed), core, leaves, 0.4, 0.8).expect("valid parameters")
}
