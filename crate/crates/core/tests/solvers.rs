mod common;

use distlat::gen;
use distlat::split::SplitContext;
use distlat::trianglefree::{enum_trianglefree, reduce_tf, star_decompose};
use distlat::{dualize, TransversalCaps};

#[test]
fn split_solver_matches_scan() {
    let mut r = gen::rng(11);
    for i in 0..300 {
        let c = 1 + i % 5;
        let s = 1 + (i / 5) % 6;
        let inst = gen::split_ni(&mut r, c, s, 0.5, 0.6).unwrap();
        let ctx = SplitContext::from_instance(&inst).unwrap();
        let mut got: Vec<_> = ctx.enumerate().collect();
        let emitted = got.len();
        got.sort();
        got.dedup();
        assert_eq!(emitted, got.len(), "duplicate emission on instance {i}");
        assert_eq!(got, common::idom(&inst.graph, &inst.poset), "instance {i}");
    }
}

#[test]
fn trianglefree_solver_matches_scan() {
    let mut r = gen::rng(12);
    let (mut with_stars, mut with_removed, mut above) = (0, 0, 0);
    for i in 0..300 {
        let inst = gen::trianglefree_weak_ni(&mut r, 2 + i % 7, i % 5, 0.5, 0.7).unwrap();
        let got = enum_trianglefree(&inst, &TransversalCaps::default()).unwrap();
        assert_eq!(got.ideals(), common::idom(&inst.graph, &inst.poset).as_slice(), "instance {i}");
        let sd = star_decompose(&inst.graph, &inst.poset).unwrap();
        let ri = reduce_tf(&inst.graph, &inst.poset, &sd).unwrap();
        ri.check_invariants().unwrap();
        with_stars += usize::from(!sd.stars.is_empty());
        with_removed += usize::from(!ri.removed.is_empty());
        above += sd
            .stars
            .iter()
            .filter(|s| s.orientation == distlat::trianglefree::Orientation::BranchesAbove)
            .count();
    }
    println!("stars {with_stars} removed {with_removed} above {above}");
    assert!(with_stars > 100 && with_removed > 5 && above > 5);
}

#[test]
fn generic_solver_matches_scan() {
    let mut r = gen::rng(13);
    for i in 0..300 {
        let inst = gen::itrans(&mut r, 1 + i % 10, 1 + i % 5, 0.3, 0.35).unwrap();
        let got = dualize::itrans_enum_generic(&inst, &TransversalCaps::default()).unwrap();
        assert_eq!(got.ideals(), common::itrans(&inst.hypergraph, &inst.poset).as_slice(), "instance {i}");
    }
}

mod props {
    use super::common;
    use distlat::gen;
    use distlat::reductions::{self, Target};
    use distlat::solve::{self, Caps, Solver};
    use distlat::IdealFamily;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn solutions_are_minimal_ideals(seed in any::<u64>(), n in 1usize..10, pe in 0.1f64..0.7, po in 0.0f64..1.0) {
            let inst = gen::graph_ni(&mut gen::rng(seed), n, pe, po).unwrap();
            let fam = solve::solve_idom(&inst, Solver::Auto, &Caps::default()).unwrap();
            for s in &fam {
                prop_assert!(inst.poset.is_ideal(s));
                prop_assert!(inst.graph.is_minimal_dominating_ideal(&inst.poset, s));
            }
            let want = common::idom(&inst.graph, &inst.poset);
            prop_assert_eq!(fam.ideals(), want.as_slice());
        }

        #[test]
        fn recovery_inverts_every_reduction(seed in any::<u64>(), n in 1usize..7, m in 1usize..5, t in 0usize..3) {
            let inst = gen::itrans(&mut gen::rng(seed), n, m, 0.3, 0.4).unwrap();
            let art = reductions::reduce(&inst, Target::ALL[t]).unwrap();
            let (g, p) = (&art.instance.graph, &art.instance.poset);
            let id = IdealFamily::new(p, common::idom(g, p)).unwrap();
            let got = reductions::recover(&art, &id).unwrap();
            let want = common::itrans(&inst.hypergraph, &inst.poset);
            prop_assert_eq!(got.ideals(), want.as_slice());
        }
    }
}
