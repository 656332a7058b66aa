//! Seeded random instances.
//!
//! Every generator draws from the RNG it is handed, so a fixed seed gives a
//! fixed instance. Graph generators return posets compatible with the
//! graph: comparabilities are only sampled between vertices whose closed
//! neighbourhoods are nested.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dualize::{DualInstance, IDomInstance, ITransInstance};
use crate::error::{Error, Result};
use crate::family;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::poset::Poset;
use crate::set::ElementSet;
use crate::universe::{Universe, UniverseRef};

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_prob(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{name} must lie in [0, 1], got {p}")))
    }
}

fn named(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn universe_of(tokens: Vec<String>) -> UniverseRef {
    Universe::new_user(tokens).expect("generated tokens are distinct and valid")
}

/// Random order on `x1..xn`: a hidden linear extension, each forward
/// pair kept with probability `p`.
pub fn poset(rng: &mut GenRng, n: usize, p: f64) -> Result<Poset> {
    check_prob("order density", p)?;
    let u = universe_of(named("x", n));
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    Poset::new(u, &pairs)
}

fn random_nonempty(rng: &mut GenRng, n: usize, p: f64) -> ElementSet {
    let mut e = ElementSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(p)));
    if e.is_empty() {
        e.insert(rng.gen_range(0..n));
    }
    e
}

/// Up to `m` random edges over the universe, Sperner-minimised.
pub fn hypergraph_on(rng: &mut GenRng, u: &UniverseRef, m: usize, p: f64) -> Result<Hypergraph> {
    check_prob("edge density", p)?;
    if u.is_empty() && m > 0 {
        return Err(Error::InvalidParams("edges need at least one vertex".into()));
    }
    let edges = (0..m).map(|_| random_nonempty(rng, u.len(), p)).collect();
    Hypergraph::new(u.clone(), family::minimize(edges))
}

pub fn hypergraph(rng: &mut GenRng, n: usize, m: usize, p: f64) -> Result<Hypergraph> {
    let u = universe_of(named("x", n));
    hypergraph_on(rng, &u, m, p)
}

/// Random poset with a random hypergraph on the same elements.
pub fn itrans(rng: &mut GenRng, n: usize, m: usize, p_order: f64, p_edge: f64) -> Result<ITransInstance> {
    let p = poset(rng, n, p_order)?;
    let h = hypergraph_on(rng, p.universe(), m, p_edge)?;
    ITransInstance::new(h, p)
}

/// Random poset with an antichain of at most `m` random ideals.
pub fn dual(rng: &mut GenRng, n: usize, m: usize, p_order: f64) -> Result<DualInstance> {
    let p = poset(rng, n, p_order)?;
    let dens = rng.gen_range(0.2..0.8);
    let ideals = (0..m.max(1))
        .map(|_| {
            let s = ElementSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(dens)));
            p.down_closure(&s)
        })
        .collect();
    let bplus = family::maximize(ideals);
    DualInstance::new(p, bplus)
}

/// Neighbourhood inclusion poset: a pair is a candidate when `N[x] ⊆ N[y]`,
/// oriented from the smaller `(|N[x]|, x)`; candidates are kept with
/// probability `p`. Transitivity stays inside the inclusion relation.
pub fn ni_poset(rng: &mut GenRng, g: &Graph, p: f64) -> Result<Poset> {
    check_prob("order density", p)?;
    let n = g.vertex_count();
    let nb: Vec<ElementSet> = (0..n).map(|x| g.closed_neighbors(x)).collect();
    let key = |x: usize| (nb[x].len(), x);
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && key(x) < key(y) && nb[x].is_subset(&nb[y]) && rng.gen_bool(p) {
                pairs.push((x, y));
            }
        }
    }
    Poset::new(g.universe().clone(), &pairs)
}

/// Weak neighbourhood inclusion poset: candidate pairs with nested
/// neighbourhoods are tried in random order and random orientation, and
/// kept only if the closed order is still weak inclusion.
pub fn weak_ni_poset(rng: &mut GenRng, g: &Graph, p: f64) -> Result<Poset> {
    check_prob("order density", p)?;
    let n = g.vertex_count();
    let nb: Vec<ElementSet> = (0..n).map(|x| g.closed_neighbors(x)).collect();
    let mut cands = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if nb[x].is_subset(&nb[y]) || nb[y].is_subset(&nb[x]) {
                cands.push(if rng.gen_bool(0.5) { (x, y) } else { (y, x) });
            }
        }
    }
    cands.shuffle(rng);
    let mut kept: Vec<(usize, usize)> = Vec::new();
    let mut current = Poset::antichain(g.universe().clone());
    for c in cands {
        if !rng.gen_bool(p) {
            continue;
        }
        kept.push(c);
        match Poset::new(g.universe().clone(), &kept) {
            Ok(q) if g.is_weak_ni_poset(&q)? => current = q,
            _ => {
                kept.pop();
            }
        }
    }
    Ok(current)
}

/// Split graph on clique `c1..c{clique}` and independent set
/// `s1..s{indep}`; each cross pair is an edge with probability `p_edge`.
pub fn split_graph(rng: &mut GenRng, clique: usize, indep: usize, p_edge: f64) -> Result<Graph> {
    check_prob("edge density", p_edge)?;
    let mut tokens = named("c", clique);
    tokens.extend(named("s", indep));
    let u = universe_of(tokens);
    let cs: Vec<usize> = named("c", clique).iter().map(|t| u.index_of(t).unwrap()).collect();
    let ss: Vec<usize> = named("s", indep).iter().map(|t| u.index_of(t).unwrap()).collect();
    let mut pairs = Vec::new();
    for (i, &a) in cs.iter().enumerate() {
        for &b in &cs[i + 1..] {
            pairs.push((a, b));
        }
        for &s in &ss {
            if rng.gen_bool(p_edge) {
                pairs.push((a, s));
            }
        }
    }
    Graph::new(u, &pairs)
}

pub fn split_ni(
    rng: &mut GenRng,
    clique: usize,
    indep: usize,
    p_edge: f64,
    p_order: f64,
) -> Result<IDomInstance> {
    let g = split_graph(rng, clique, indep, p_edge)?;
    let p = ni_poset(rng, &g, p_order)?;
    IDomInstance::new(g, p)
}

fn bipartite_graph(rng: &mut GenRng, left: usize, right: usize, p_edge: f64) -> Result<(Graph, Vec<usize>, Vec<usize>)> {
    check_prob("edge density", p_edge)?;
    let mut tokens = named("a", left);
    tokens.extend(named("b", right));
    let u = universe_of(tokens);
    let ls: Vec<usize> = named("a", left).iter().map(|t| u.index_of(t).unwrap()).collect();
    let rs: Vec<usize> = named("b", right).iter().map(|t| u.index_of(t).unwrap()).collect();
    let mut pairs = Vec::new();
    for &a in &ls {
        for &b in &rs {
            if rng.gen_bool(p_edge) {
                pairs.push((a, b));
            }
        }
    }
    Ok((Graph::new(u, &pairs)?, ls, rs))
}

/// Random bipartite graph `a*`/`b*` with a neighbourhood inclusion poset.
pub fn bipartite_ni(rng: &mut GenRng, left: usize, right: usize, p_edge: f64, p_order: f64) -> Result<IDomInstance> {
    let (g, _, _) = bipartite_graph(rng, left, right, p_edge)?;
    let p = ni_poset(rng, &g, p_order)?;
    IDomInstance::new(g, p)
}

/// Complement-style co-bipartite graph: two cliques `a*`, `b*` with random
/// cross edges, plus a neighbourhood inclusion poset.
pub fn cobipartite_ni(rng: &mut GenRng, left: usize, right: usize, p_edge: f64, p_order: f64) -> Result<IDomInstance> {
    let (mut g, ls, rs) = bipartite_graph(rng, left, right, p_edge)?;
    for side in [&ls, &rs] {
        for (i, &a) in side.iter().enumerate() {
            for &b in &side[i + 1..] {
                g.add_edge(a, b)?;
            }
        }
    }
    let p = ni_poset(rng, &g, p_order)?;
    IDomInstance::new(g, p)
}

/// Triangle-free graph: a random bipartite core `x*` over `core` vertices
/// plus up to `leaves` pendant vertices `l*` hung on random core vertices,
/// with a weak neighbourhood inclusion poset.
pub fn trianglefree_weak_ni(
    rng: &mut GenRng,
    core: usize,
    leaves: usize,
    p_edge: f64,
    p_order: f64,
) -> Result<IDomInstance> {
    check_prob("edge density", p_edge)?;
    if core == 0 && leaves > 0 {
        return Err(Error::InvalidParams("leaves need a core vertex".into()));
    }
    let mut tokens = named("x", core);
    tokens.extend(named("l", leaves));
    let u = universe_of(tokens);
    let xs: Vec<usize> = named("x", core).iter().map(|t| u.index_of(t).unwrap()).collect();
    let side: Vec<bool> = (0..core).map(|_| rng.gen_bool(0.5)).collect();
    let mut pairs = Vec::new();
    for i in 0..core {
        for j in i + 1..core {
            if side[i] != side[j] && rng.gen_bool(p_edge) {
                pairs.push((xs[i], xs[j]));
            }
        }
    }
    for t in named("l", leaves) {
        let host = xs[rng.gen_range(0..core)];
        pairs.push((u.index_of(&t).unwrap(), host));
    }
    let g = Graph::new(u, &pairs)?;
    debug_assert!(g.is_triangle_free());
    let p = weak_ni_poset(rng, &g, p_order)?;
    IDomInstance::new(g, p)
}

/// Erdős–Rényi graph on `x1..xn` with a neighbourhood inclusion poset.
pub fn graph_ni(rng: &mut GenRng, n: usize, p_edge: f64, p_order: f64) -> Result<IDomInstance> {
    check_prob("edge density", p_edge)?;
    let u = universe_of(named("x", n));
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p_edge) {
                pairs.push((a, b));
            }
        }
    }
    let g = Graph::new(u, &pairs)?;
    let p = ni_poset(rng, &g, p_order)?;
    IDomInstance::new(g, p)
}
