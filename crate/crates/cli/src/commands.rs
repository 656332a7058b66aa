use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use distlat::format;
use distlat::gen;
use distlat::reductions;
use distlat::solve::{self, Caps, Solver};
use distlat::split::SplitContext;
use distlat::trianglefree;
use distlat::{DualInstance, ElementSet, IDomInstance, ITransInstance, IdealFamily, Poset, Universe, UniverseRef};
use log::info;

use super::{Command, GenArgs, Kind};

pub fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Dualize(a) => {
            let inst = load_dual(&a.poset, &a.bplus)?;
            let fam = solve::solve_dual(&inst, a.solver.into(), &caps(a.limits.cap))?;
            print_family(inst.poset.universe(), &fam)?;
        }
        Command::Itrans(a) => {
            let inst = load_itrans(&a.hypergraph, a.poset.as_deref())?;
            let fam = solve::solve_itrans(&inst, a.solver.into(), &caps(a.limits.cap))?;
            print_family(inst.poset.universe(), &fam)?;
        }
        Command::Idom(a) => {
            let inst = load_idom(&a.graph, a.poset.as_deref())?;
            let mut solver: Solver = a.solver.into();
            if solver == Solver::Auto {
                solver = solve::route(&inst);
                info!("auto routing selected the {solver} solver");
            }
            if a.delay_stats && solver != Solver::Split {
                bail!("--delay-stats needs the split solver, got {solver}");
            }
            if a.dump_reduced.is_some() && solver != Solver::TriangleFree {
                bail!("--dump-reduced needs the trianglefree solver, got {solver}");
            }
            match solver {
                Solver::Split => idom_split(&inst, a.delay_stats)?,
                Solver::TriangleFree => {
                    let limits = caps(a.limits.cap);
                    let (fam, ri) = trianglefree::enum_trianglefree_with(&inst, &limits.transversal)?;
                    if let Some(dir) = &a.dump_reduced {
                        write_files(
                            dir,
                            &[
                                ("reduced-graph.txt", format::write_graph(&ri.graph)),
                                ("reduced-poset.txt", format::write_poset(&ri.poset)),
                                ("contraction.txt", ri.manifest()),
                            ],
                        )?;
                    }
                    print_family(inst.graph.universe(), &fam)?;
                }
                s => {
                    let fam = solve::solve_idom(&inst, s, &caps(a.limits.cap))?;
                    print_family(inst.graph.universe(), &fam)?;
                }
            }
        }
        Command::CheckDual(a) => {
            let inst = load_dual(&a.poset, &a.bplus)?;
            let bminus = format::parse_family(&read(&a.bminus)?, inst.poset.universe())
                .with_context(|| format!("parsing {}", a.bminus.display()))?;
            let dual = distlat::dualize::check_dual(&inst, bminus, a.limits.cap)?;
            println!("dual: {}", if dual { "yes" } else { "no" });
            if !dual {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Reduce(a) => {
            let inst = load_itrans(&a.hypergraph, a.poset.as_deref())?;
            let art = reductions::reduce(&inst, a.target.into())?;
            write_files(
                &a.out,
                &[
                    ("graph.txt", format::write_graph(&art.instance.graph)),
                    ("poset.txt", format::write_poset(&art.instance.poset)),
                    ("exceptions.txt", art.manifest()),
                ],
            )?;
        }
        Command::Gen(a) => generate(&a)?,
        Command::Oracle(a) => {
            let cap = a.limits.cap;
            if let Some(bplus) = &a.bplus {
                let poset = a.poset.as_deref().expect("clap enforces --poset");
                let inst = load_dual(poset, bplus)?;
                print_family(inst.poset.universe(), &distlat::oracle::dual_enum_oracle(&inst, cap)?)?;
            } else if let Some(h) = &a.hypergraph {
                let inst = load_itrans(h, a.poset.as_deref())?;
                print_family(inst.poset.universe(), &distlat::oracle::itrans_oracle(&inst, cap)?)?;
            } else if let Some(g) = &a.graph {
                let inst = load_idom(g, a.poset.as_deref())?;
                print_family(inst.graph.universe(), &distlat::oracle::idom_oracle(&inst, cap)?)?;
            } else {
                bail!("oracle needs one of --bplus, --hypergraph or --graph");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn caps(oracle: usize) -> Caps {
    Caps {
        oracle,
        ..Caps::default()
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn parse_poset(path: &Path, allow_reserved: bool) -> Result<Poset> {
    format::parse_poset(&read(path)?, allow_reserved)
        .with_context(|| format!("parsing {}", path.display()))
}

fn poset_or_antichain(path: Option<&Path>, universe: &UniverseRef, allow_reserved: bool) -> Result<Poset> {
    match path {
        None => Ok(Poset::antichain(universe.clone())),
        Some(p) => parse_poset(p, allow_reserved),
    }
}

fn load_dual(poset: &Path, bplus: &Path) -> Result<DualInstance> {
    let p = parse_poset(poset, false)?;
    let sets = format::parse_family(&read(bplus)?, p.universe())
        .with_context(|| format!("parsing {}", bplus.display()))?;
    Ok(DualInstance::new(p, sets)?)
}

fn load_itrans(hypergraph: &Path, poset: Option<&Path>) -> Result<ITransInstance> {
    let h = format::parse_hypergraph(&read(hypergraph)?, false)
        .with_context(|| format!("parsing {}", hypergraph.display()))?;
    let p = poset_or_antichain(poset, h.universe(), false)?;
    Ok(ITransInstance::new(h, p)?)
}

// Reserved names are accepted here so that `reduce` output can be solved.
fn load_idom(graph: &Path, poset: Option<&Path>) -> Result<IDomInstance> {
    let g = format::parse_graph(&read(graph)?, true)
        .with_context(|| format!("parsing {}", graph.display()))?;
    let p = poset_or_antichain(poset, g.universe(), true)?;
    Ok(IDomInstance::new(g, p)?)
}

fn print_family(u: &Universe, fam: &IdealFamily) -> Result<()> {
    let mut out = io::stdout().lock();
    for s in fam {
        writeln!(out, "{}", format::set_line(u, s))?;
    }
    writeln!(out, "count: {}", fam.len())?;
    Ok(())
}

fn idom_split(inst: &IDomInstance, delay_stats: bool) -> Result<()> {
    let ctx = SplitContext::from_instance(inst)?;
    let u = inst.graph.universe();
    let mut out = io::stdout().lock();
    let mut it = ctx.enumerate();
    for s in it.by_ref() {
        writeln!(out, "{}", format::set_line(u, &s))?;
    }
    let st = it.stats();
    writeln!(out, "count: {}", st.emissions)?;
    if delay_stats {
        let c = ctx.decomposition().clique.len();
        writeln!(out, "clique-size: {c}")?;
        writeln!(out, "member-tests: {}", st.member_tests)?;
        writeln!(out, "delay-max: {}", st.max_gap)?;
        writeln!(out, "delay-mean: {:.3}", st.mean_gap)?;
        writeln!(out, "delay-head: {}", st.head)?;
        writeln!(out, "delay-tail: {}", st.tail)?;
        writeln!(out, "delay-bound: {}", 2 * c + 1)?;
    }
    Ok(())
}

fn write_files(dir: &Path, files: &[(&str, String)]) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (name, body) in files {
        let path = dir.join(name);
        fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn split_sizes(a: &GenArgs) -> Result<(usize, usize)> {
    if a.m > a.n {
        bail!("m = {} exceeds n = {}", a.m, a.n);
    }
    Ok((a.m, a.n - a.m))
}

fn generate(a: &GenArgs) -> Result<()> {
    let mut rng = gen::rng(a.seed);
    let (d, od) = (a.density, a.order_density);
    let mut files = Vec::new();
    let idom = |inst: IDomInstance, files: &mut Vec<(&str, String)>| {
        files.push(("graph.txt", format::write_graph(&inst.graph)));
        files.push(("poset.txt", format::write_poset(&inst.poset)));
    };
    match a.kind {
        Kind::Poset => files.push(("poset.txt", format::write_poset(&gen::poset(&mut rng, a.n, od)?))),
        Kind::Itrans => {
            let inst = gen::itrans(&mut rng, a.n, a.m, od, d)?;
            files.push(("hypergraph.txt", format::write_hypergraph(&inst.hypergraph)));
            files.push(("poset.txt", format::write_poset(&inst.poset)));
        }
        Kind::Dual => {
            let inst = gen::dual(&mut rng, a.n, a.m, od)?;
            let sets: Vec<&ElementSet> = inst.bplus.iter().collect();
            files.push(("bplus.txt", format::write_family(inst.poset.universe(), sets)));
            files.push(("poset.txt", format::write_poset(&inst.poset)));
        }
        Kind::Split => {
            let (c, s) = split_sizes(a)?;
            idom(gen::split_ni(&mut rng, c, s, d, od)?, &mut files);
        }
        Kind::Bipartite => {
            let (l, r) = split_sizes(a)?;
            idom(gen::bipartite_ni(&mut rng, l, r, d, od)?, &mut files);
        }
        Kind::Cobipartite => {
            let (l, r) = split_sizes(a)?;
            idom(gen::cobipartite_ni(&mut rng, l, r, d, od)?, &mut files);
        }
        Kind::Trianglefree => idom(gen::trianglefree_weak_ni(&mut rng, a.n, a.m, d, od)?, &mut files),
        Kind::Graph => idom(gen::graph_ni(&mut rng, a.n, d, od)?, &mut files),
    }
    write_files(&a.out, &files)
}
