//! Transversal-ideal instances rewritten as dominating-ideal instances on
//! bipartite, split and co-bipartite graphs, with the maps back.
//!
//! Every construction starts from the filter-closed hypergraph, builds the
//! incidence graph `I(H)` (edge vertices `_e<i>`) and adds one auxiliary
//! vertex `_v`.

use std::fmt;

use crate::dualize::{IDomInstance, ITransInstance};
use crate::error::{Error, Result};
use crate::family::{self, IdealFamily};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::poset::Poset;
use crate::set::ElementSet;
use crate::universe::Universe;

/// Name of the auxiliary vertex.
pub const AUX_VERTEX: &str = "_v";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Bipartite,
    Split,
    Cobipartite,
}

impl Target {
    pub const ALL: [Target; 3] = [Target::Bipartite, Target::Split, Target::Cobipartite];

    pub fn name(self) -> &'static str {
        match self {
            Target::Bipartite => "bipartite",
            Target::Split => "split",
            Target::Cobipartite => "cobipartite",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bipartite" => Ok(Target::Bipartite),
            "split" => Ok(Target::Split),
            "cobipartite" => Ok(Target::Cobipartite),
            _ => Err(Error::InvalidParams(format!("unknown reduction target {s:?}"))),
        }
    }
}

/// Solutions of the reduced instance that do not mirror a source solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exception {
    /// `V(H)` is always a solution of the graph side. It is dropped there and
    /// kept only if it is a minimal transversal-ideal of the source.
    WholeGroundSet,
    /// `{v}` is always a solution and is dropped.
    AuxSingleton,
    /// Every pair `{x, y}` with `x ∈ X ∪ {v}` and `y ∈ Y` is dropped.
    CrossPairs,
}

/// A reduced instance together with the bookkeeping needed to map its
/// solutions back.
#[derive(Clone, Debug)]
pub struct ReductionArtifact {
    pub target: Target,
    pub instance: IDomInstance,
    /// The filter-closed source instance.
    pub source: ITransInstance,
    /// Graph index of each source vertex.
    pub vertex_map: Vec<usize>,
    /// Graph index of the vertex standing for each edge of `source`.
    pub edge_vertices: Vec<usize>,
    /// Graph index of `_v`.
    pub aux: usize,
    pub exceptions: Vec<Exception>,
}

/// What [`recover_with_report`] dropped or re-added.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecoveryReport {
    /// Graph-side solutions discarded by an exception rule.
    pub discarded: Vec<ElementSet>,
    /// Whether `V(H)` was added back after the direct minimality test.
    pub restored_ground_set: bool,
}

impl ReductionArtifact {
    /// Image of the source vertices in the graph.
    pub fn source_vertices(&self) -> ElementSet {
        ElementSet::from_indices(self.graph_len(), self.vertex_map.iter().copied())
    }

    /// The edge vertices `Y`.
    pub fn edge_vertex_set(&self) -> ElementSet {
        ElementSet::from_indices(self.graph_len(), self.edge_vertices.iter().copied())
    }

    fn graph_len(&self) -> usize {
        self.instance.graph.vertex_count()
    }

    fn to_source(&self, s: &ElementSet) -> ElementSet {
        let n = self.source.poset.len();
        ElementSet::from_indices(
            n,
            (0..n).filter(|&i| s.contains(self.vertex_map[i])),
        )
    }

    /// One rule per line, naming graph vertices by token.
    pub fn manifest(&self) -> String {
        let gu = self.instance.graph.universe();
        let mut out = format!("target: {}\naux: {}\n", self.target, gu.token(self.aux));
        for (i, e) in self.source.hypergraph.edges().iter().enumerate() {
            let names = self.source.poset.universe().names(e).join(" ");
            out.push_str(&format!("edge-vertex: {} {}\n", gu.token(self.edge_vertices[i]), names));
        }
        for ex in &self.exceptions {
            let line = match ex {
                Exception::WholeGroundSet => {
                    "rule: ground-set-maps-to-itself (kept iff it is a minimal transversal-ideal)".to_owned()
                }
                Exception::AuxSingleton => format!("rule: discard {{{}}}", gu.token(self.aux)),
                Exception::CrossPairs => {
                    "rule: discard pairs {x, y} with x a source vertex or aux, y an edge vertex".to_owned()
                }
            };
            out.push_str(&line);
            out.push('\n');
        }
        if self.target == Target::Bipartite {
            out.push_str(&format!("rule: strip {}\n", gu.token(self.aux)));
        }
        out
    }
}

struct Skeleton {
    graph: Graph,
    source: ITransInstance,
    vertex_map: Vec<usize>,
    edge_vertices: Vec<usize>,
    aux: usize,
}

fn skeleton(inst: &ITransInstance) -> Result<Skeleton> {
    if let Some(t) = inst.poset.universe().has_reserved() {
        return Err(Error::ReservedToken(t.to_owned()));
    }
    let closed = inst.hypergraph.filter_closure(&inst.poset)?;
    if closed.edge_count() == 0 {
        return Err(Error::EmptyHypergraph);
    }
    let inc = closed.bipartite_incidence_graph();
    let gu = Universe::new(
        inc.graph
            .universe()
            .tokens()
            .iter()
            .cloned()
            .chain([AUX_VERTEX.to_owned()]),
    )?;
    let old = inc.graph.universe();
    let remap: Vec<usize> = old.tokens().iter().map(|t| gu.index_of(t).unwrap()).collect();
    let edges: Vec<(usize, usize)> = inc
        .graph
        .edges()
        .into_iter()
        .map(|(a, b)| (remap[a], remap[b]))
        .collect();
    let aux = gu.index_of(AUX_VERTEX)?;
    let graph = Graph::new(gu, &edges)?;
    Ok(Skeleton {
        graph,
        source: ITransInstance {
            hypergraph: closed,
            poset: inst.poset.clone(),
        },
        vertex_map: inc.vertex_map.iter().map(|&i| remap[i]).collect(),
        edge_vertices: inc.edge_vertices.iter().map(|&i| remap[i]).collect(),
        aux,
    })
}

fn make_clique(g: &mut Graph, vs: &[usize]) -> Result<()> {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            g.add_edge(a, b)?;
        }
    }
    Ok(())
}

fn lifted_poset(sk: &Skeleton, extra: &[(usize, usize)]) -> Result<Poset> {
    let mut pairs: Vec<(usize, usize)> = sk
        .source
        .poset
        .less_pairs()
        .map(|(a, b)| (sk.vertex_map[a], sk.vertex_map[b]))
        .collect();
    pairs.extend_from_slice(extra);
    Poset::new(sk.graph.universe().clone(), &pairs)
}

fn finish(sk: Skeleton, target: Target, poset: Poset, exceptions: Vec<Exception>) -> ReductionArtifact {
    ReductionArtifact {
        target,
        instance: IDomInstance {
            graph: sk.graph,
            poset,
        },
        source: sk.source,
        vertex_map: sk.vertex_map,
        edge_vertices: sk.edge_vertices,
        aux: sk.aux,
        exceptions,
    }
}

/// `I(H)` plus `v` adjacent to every source vertex; every source vertex is
/// placed below every edge vertex.
pub fn reduce_bipartite(inst: &ITransInstance) -> Result<ReductionArtifact> {
    let mut sk = skeleton(inst)?;
    for &x in &sk.vertex_map {
        sk.graph.add_edge(sk.aux, x)?;
    }
    let extra: Vec<(usize, usize)> = sk
        .vertex_map
        .iter()
        .flat_map(|&x| sk.edge_vertices.iter().map(move |&y| (x, y)))
        .collect();
    let poset = lifted_poset(&sk, &extra)?;
    Ok(finish(sk, Target::Bipartite, poset, vec![Exception::WholeGroundSet]))
}

/// `I(H)` with the source vertices made a clique and `v` universal; `v` sits
/// below every edge vertex.
pub fn reduce_split(inst: &ITransInstance) -> Result<ReductionArtifact> {
    let mut sk = skeleton(inst)?;
    make_clique(&mut sk.graph, &sk.vertex_map)?;
    for y in 0..sk.graph.vertex_count() {
        if y != sk.aux {
            sk.graph.add_edge(sk.aux, y)?;
        }
    }
    let extra: Vec<(usize, usize)> = sk.edge_vertices.iter().map(|&y| (sk.aux, y)).collect();
    let poset = lifted_poset(&sk, &extra)?;
    Ok(finish(sk, Target::Split, poset, vec![Exception::AuxSingleton]))
}

/// `I(H)` plus `v` adjacent to every source vertex, with `X ∪ {v}` and `Y`
/// each made a clique; the order is the source order.
pub fn reduce_cobipartite(inst: &ITransInstance) -> Result<ReductionArtifact> {
    let mut sk = skeleton(inst)?;
    let mut side: Vec<usize> = sk.vertex_map.clone();
    side.push(sk.aux);
    make_clique(&mut sk.graph, &side)?;
    make_clique(&mut sk.graph, &sk.edge_vertices.clone())?;
    let poset = lifted_poset(&sk, &[])?;
    Ok(finish(sk, Target::Cobipartite, poset, vec![Exception::CrossPairs]))
}

pub fn reduce(inst: &ITransInstance, target: Target) -> Result<ReductionArtifact> {
    match target {
        Target::Bipartite => reduce_bipartite(inst),
        Target::Split => reduce_split(inst),
        Target::Cobipartite => reduce_cobipartite(inst),
    }
}

/// `V(H)` is a minimal transversal-ideal iff no maximal proper sub-ideal
/// `V(H) \ {x}` is still a transversal.
fn ground_set_is_solution(source: &ITransInstance) -> bool {
    let full = source.poset.universe().full_set();
    let h: &Hypergraph = &source.hypergraph;
    h.is_transversal(&full)
        && source
            .poset
            .max_elements(&full)
            .iter()
            .all(|x| !h.is_transversal(&full.without(x)))
}

pub fn recover(art: &ReductionArtifact, sols: &IdealFamily) -> Result<IdealFamily> {
    recover_with_report(art, sols).map(|(f, _)| f)
}

/// Maps `ID(G, P_G)` back to `ITr(H, P_H)`, applying the target's exception
/// rule.
pub fn recover_with_report(
    art: &ReductionArtifact,
    sols: &IdealFamily,
) -> Result<(IdealFamily, RecoveryReport)> {
    let gu = art.instance.graph.universe();
    if sols.iter().any(|s| s.capacity() != gu.len()) {
        return Err(Error::GroundMismatch);
    }
    let xs = art.source_vertices();
    let ys = art.edge_vertex_set();
    let v = art.aux;
    let shape = |s: &ElementSet, why: &str| {
        Error::InconsistentSolutions(format!("{} {why}", gu.display(s)))
    };
    let mut report = RecoveryReport::default();
    let mut out = Vec::new();
    match art.target {
        Target::Bipartite => {
            let mut seen_ground = false;
            for s in sols {
                if *s == xs {
                    seen_ground = true;
                    report.discarded.push(s.clone());
                    continue;
                }
                if !s.contains(v) || !s.without(v).is_subset(&xs) {
                    return Err(shape(s, "is neither V(H) nor a source set plus the aux vertex"));
                }
                out.push(art.to_source(&s.without(v)));
            }
            if !seen_ground {
                return Err(Error::InconsistentSolutions("V(H) is missing".into()));
            }
            if ground_set_is_solution(&art.source) {
                report.restored_ground_set = true;
                out.push(art.source.poset.universe().full_set());
            }
        }
        Target::Split => {
            let single = ElementSet::singleton(gu.len(), v);
            let mut seen = false;
            for s in sols {
                if *s == single {
                    seen = true;
                    report.discarded.push(s.clone());
                    continue;
                }
                if !s.is_subset(&xs) {
                    return Err(shape(s, "leaves the source vertices"));
                }
                out.push(art.to_source(s));
            }
            if !seen {
                return Err(Error::InconsistentSolutions(format!("{{{AUX_VERTEX}}} is missing")));
            }
        }
        Target::Cobipartite => {
            for s in sols {
                if s.is_subset(&xs) {
                    out.push(art.to_source(s));
                    continue;
                }
                let cross = s.len() == 2
                    && s.intersection(&ys).len() == 1
                    && s.difference(&ys).iter().all(|x| x == v || xs.contains(x));
                if !cross {
                    return Err(shape(s, "is neither a source set nor a cross pair"));
                }
                report.discarded.push(s.clone());
            }
        }
    }
    let fam = IdealFamily::new(&art.source.poset, family::canonical(out))?;
    Ok((fam, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn single_edge(edge: &[&str], all: &[&str]) -> ITransInstance {
        let h = Hypergraph::from_tokens(all, &[edge]).unwrap();
        let p = Poset::antichain(h.universe().clone());
        ITransInstance::new(h, p).unwrap()
    }

    fn bowtie_instance() -> ITransInstance {
        let h = Hypergraph::from_tokens(
            &["x1", "x2", "x3", "x4", "x5", "x6"],
            &[
                &["x1", "x2", "x5"],
                &["x1", "x2", "x3"],
                &["x3", "x4", "x5"],
                &["x5", "x6"],
            ],
        )
        .unwrap();
        let u = h.universe().clone();
        let pairs: Vec<(usize, usize)> = [("x2", "x5"), ("x3", "x5"), ("x2", "x6"), ("x3", "x6")]
            .iter()
            .map(|(a, b)| (u.index_of(a).unwrap(), u.index_of(b).unwrap()))
            .collect();
        let p = Poset::new(u, &pairs).unwrap();
        ITransInstance::new(h, p).unwrap()
    }

    fn round_trip(inst: &ITransInstance, target: Target) -> (IdealFamily, RecoveryReport) {
        let art = reduce(inst, target).unwrap();
        let id = oracle::idom_oracle(&art.instance, 20).unwrap();
        recover_with_report(&art, &id).unwrap()
    }

    #[test]
    fn bipartite_single_vertex_edge() {
        let inst = single_edge(&["a"], &["a"]);
        let art = reduce_bipartite(&inst).unwrap();
        let g = &art.instance.graph;
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_bipartite());
        let (f, rep) = round_trip(&inst, Target::Bipartite);
        let u = inst.poset.universe();
        assert_eq!(f.ideals(), &[u.set(["a"]).unwrap()]);
        assert!(rep.restored_ground_set);
    }

    #[test]
    fn bipartite_vertex_count_on_four_edges() {
        let inst = bowtie_instance();
        let inst = ITransInstance::new(
            inst.hypergraph.clone(),
            Poset::antichain(inst.poset.universe().clone()),
        )
        .unwrap();
        let art = reduce_bipartite(&inst).unwrap();
        assert_eq!(art.instance.graph.vertex_count(), 11);
    }

    #[test]
    fn split_discards_aux() {
        let inst = single_edge(&["a"], &["a"]);
        let art = reduce_split(&inst).unwrap();
        assert!(art.instance.graph.is_split());
        assert!(art.instance.graph.is_weak_ni_poset(&art.instance.poset).unwrap());
        let (f, rep) = round_trip(&inst, Target::Split);
        assert_eq!(f.len(), 1);
        assert_eq!(rep.discarded.len(), 1);
    }

    #[test]
    fn cobipartite_pair_edge() {
        let inst = single_edge(&["a", "b"], &["a", "b"]);
        let art = reduce_cobipartite(&inst).unwrap();
        assert!(art.instance.graph.is_cobipartite());
        assert!(art.instance.graph.is_ni_poset(&art.instance.poset).unwrap());
        let (f, rep) = round_trip(&inst, Target::Cobipartite);
        let u = inst.poset.universe();
        assert_eq!(f.ideals(), &[u.set(["a"]).unwrap(), u.set(["b"]).unwrap()]);
        assert!(rep.discarded.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn bowtie_instance_through_every_target() {
        let inst = bowtie_instance();
        let u = inst.poset.universe().clone();
        let expected = vec![
            u.set(["x2", "x3", "x5"]).unwrap(),
            u.set(["x2", "x3", "x6"]).unwrap(),
        ];
        for t in Target::ALL {
            let (f, _) = round_trip(&inst, t);
            assert_eq!(f.ideals(), expected.as_slice(), "{t}");
        }
    }

    #[test]
    fn empty_hypergraph_rejected() {
        let u = Universe::new(["a"]).unwrap();
        let h = Hypergraph::new(u.clone(), vec![]).unwrap();
        let inst = ITransInstance::new(h, Poset::antichain(u)).unwrap();
        for t in Target::ALL {
            assert_eq!(reduce(&inst, t).unwrap_err(), Error::EmptyHypergraph);
        }
    }

    #[test]
    fn inconsistent_solution_detected() {
        let inst = single_edge(&["a"], &["a"]);
        let art = reduce_split(&inst).unwrap();
        let gu = art.instance.graph.universe().clone();
        let bogus = IdealFamily::new(&art.instance.poset, vec![gu.set(["_e1", "_v"]).unwrap()]).unwrap();
        assert!(matches!(recover(&art, &bogus), Err(Error::InconsistentSolutions(_))));
    }

    #[test]
    fn manifest_lists_rules() {
        let art = reduce_split(&single_edge(&["a"], &["a"])).unwrap();
        let m = art.manifest();
        assert!(m.starts_with("target: split\naux: _v\n"));
        assert!(m.contains("edge-vertex: _e1 a\n"));
        assert!(m.contains("rule: discard {_v}"));
    }
}
