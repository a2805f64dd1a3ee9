mod common;

use std::collections::HashMap;

use homcycle::{
    betti, build_hom_skeleton, build_two_skeleton, classify_component, enumerate_homs,
    hom_adjacent, in_d, orient, pair_type, project, CyclicHom, Digraph, EdgeType, LatticeCover,
    LatticePoint, SimpleGraph,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |bits| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(&e, _)| e)
                .collect();
            SimpleGraph::new(n, &edges).unwrap()
        })
    })
}

fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    arb_graph(max_n).prop_filter("connected with at least two vertices", |g| {
        g.vertex_count() >= 2 && g.is_connected()
    })
}

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=2 * n).prop_map(move |arcs| {
            let mut arcs: Vec<_> = arcs.into_iter().filter(|(u, v)| u != v).collect();
            arcs.sort_unstable();
            arcs.dedup();
            Digraph::new(n, &arcs).unwrap()
        })
    })
}

fn k_not_four() -> impl Strategy<Value = u32> {
    prop_oneof![Just(3u32), Just(5), Just(6), Just(7), Just(8)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn components_partition_vertices(g in arb_graph(8)) {
        let parts = g.connected_components();
        let mut all: Vec<_> = parts.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.vertex_count()).collect::<Vec<_>>());
        for w in parts.windows(2) {
            prop_assert!(w[0][0] < w[1][0]);
        }
        for part in &parts {
            for &u in part {
                for &v in g.neighbors(u) {
                    prop_assert!(part.contains(&v));
                }
            }
        }
    }

    #[test]
    fn cycle_detection_agrees_with_scc(d in arb_digraph(8)) {
        prop_assert_eq!(d.has_directed_cycle(), !d.vertices_on_directed_cycles().is_empty());
    }

    #[test]
    fn orientations_are_orientations(g in arb_graph(7), k in 3u32..=8) {
        for f in enumerate_homs(&g, k).unwrap().iter().take(50) {
            let o = orient(&g, f);
            prop_assert_eq!(o.arcs().len(), g.edge_count());
            for &(u, v) in g.edges() {
                prop_assert!(o.digraph().has_arc(u, v) ^ o.digraph().has_arc(v, u));
            }
            for u in 0..g.vertex_count() {
                if g.degree(u) > 0 {
                    prop_assert!(!(o.digraph().is_source(u) && o.digraph().is_sink(u)));
                }
            }
        }
    }

    #[test]
    fn pair_types_are_opposite(g in arb_graph(6), k in k_not_four()) {
        prop_assume!(!g.has_isolated_vertex());
        let s = build_hom_skeleton(&g, k).unwrap();
        for &(i, j) in s.edges() {
            let (f, h) = (&s.homs()[i], &s.homs()[j]);
            let forward = pair_type(&g, f, h).unwrap();
            prop_assert_eq!(forward == EdgeType::Positive, pair_type(&g, h, f).unwrap() == EdgeType::Negative);
        }
    }

    #[test]
    fn projection_of_lattice_edges_is_a_skeleton_edge(g in arb_connected_graph(6), k in k_not_four(), seed: u64) {
        let homs = enumerate_homs(&g, k).unwrap();
        prop_assume!(!homs.is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = &homs[(seed % homs.len() as u64) as usize];
        let cover = LatticeCover::new(&g, f).unwrap();
        let a = common::random_d_point(&cover, &mut rng);
        let pa = project(&g, f, &a).unwrap();
        for b in cover.neighbors(&a).unwrap() {
            prop_assert!(hom_adjacent(&pa, &project(&g, f, &b).unwrap()));
        }
    }

    #[test]
    fn moves_at_a_point_are_square_compatible(g in arb_connected_graph(6), k in k_not_four(), seed: u64) {
        let homs = enumerate_homs(&g, k).unwrap();
        prop_assume!(!homs.is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = &homs[(seed % homs.len() as u64) as usize];
        let cover = LatticeCover::new(&g, f).unwrap();
        let a = common::random_walk(&cover, (seed % 12) as usize, None, &mut rng);
        let moves = cover.lattice_moves(&a).unwrap();
        let steps: Vec<(usize, i64)> =
            moves.up.iter().map(|&u| (u, 1)).chain(moves.down.iter().map(|&u| (u, -1))).collect();
        for (i, &(u, d)) in steps.iter().enumerate() {
            for &(v, e) in &steps[i + 1..] {
                // never two moves on one coordinate
                prop_assert_ne!(u, v);
                let both = a.stepped(u, d).stepped(v, e);
                prop_assert_eq!(cover.in_d(&both), !g.has_edge(u, v));
            }
        }
        // moves towards the origin form an independent set and span a cube
        let toward: Vec<(usize, i64)> = steps
            .iter()
            .copied()
            .filter(|&(u, d)| a.coords()[u] * d < 0)
            .collect();
        for (i, &(u, _)) in toward.iter().enumerate() {
            for &(v, _) in &toward[i + 1..] {
                prop_assert!(!g.has_edge(u, v));
            }
        }
        let mut corner = a.clone();
        for &(u, d) in &toward {
            corner = corner.stepped(u, d);
        }
        prop_assert!(cover.in_d(&corner));
    }

    #[test]
    fn classification_is_constant_on_components(g in arb_connected_graph(6), k in 3u32..=8) {
        let s = build_hom_skeleton(&g, k).unwrap();
        for comp in s.components() {
            let first = classify_component(&g, &s.homs()[comp[0]]).unwrap();
            for &i in &comp {
                prop_assert_eq!(classify_component(&g, &s.homs()[i]).unwrap(), first);
            }
        }
    }

    #[test]
    fn two_skeletons_are_chain_complexes(g in arb_connected_graph(6), k in 3u32..=7) {
        let s = build_hom_skeleton(&g, k).unwrap();
        for comp in s.components() {
            let t = build_two_skeleton(&s, &comp).unwrap();
            prop_assert!(t.boundary_composition_vanishes());
            prop_assert_eq!(betti(&t).b0, 1);
        }
    }
}

#[test]
fn corpus_has_expected_size() {
    // connected graphs on 2..=6 vertices with at most 9 edges: 1 + 2 + 6 + 20 + 80
    assert_eq!(common::desk_corpus().len(), 109);
    assert_eq!(common::connected_corpus(4, 4, 6).len(), 6);
}

#[test]
fn squares_at_a_hom_match_compatible_move_pairs() {
    for g in common::connected_corpus(2, 5, 10) {
        for k in [3, 5, 6, 7] {
            let s = build_hom_skeleton(&g, k).unwrap();
            for comp in s.components() {
                let t = build_two_skeleton(&s, &comp).unwrap();
                let f = &s.homs()[comp[0]];
                let cover = LatticeCover::new(&g, f).unwrap();
                let lifts: HashMap<CyclicHom, LatticePoint> = cover
                    .enumerate_cover_quotient()
                    .into_iter()
                    .map(|(class, h)| (h, class.representative().clone()))
                    .collect();
                for &i in &comp {
                    let a = &lifts[&s.homs()[i]];
                    let m = cover.lattice_moves(a).unwrap();
                    let steps: Vec<(usize, i64)> =
                        m.up.iter()
                            .map(|&u| (u, 1))
                            .chain(m.down.iter().map(|&u| (u, -1)))
                            .collect();
                    let pairs = (0..steps.len())
                        .flat_map(|x| (x + 1..steps.len()).map(move |y| (x, y)))
                        .filter(|&(x, y)| {
                            let ((u, d), (v, e)) = (steps[x], steps[y]);
                            cover.in_d(&a.stepped(u, d).stepped(v, e))
                        })
                        .count();
                    assert_eq!(
                        t.squares_at(i),
                        pairs,
                        "{:?} k={k} hom {}",
                        g.edges(),
                        s.homs()[i]
                    );
                }
            }
        }
    }
}

#[test]
fn pentagon_graph_component_is_a_point_with_frozen_pentagon() {
    let (g, f) = common::pentagon_graph();
    let s = build_hom_skeleton(&g, 5).unwrap();
    let comp = s.component_of(s.index_of(&f).unwrap());
    for &i in &comp {
        assert_eq!(&s.homs()[i].values()[..5], &f.values()[..5]);
    }
    let t = build_two_skeleton(&s, &comp).unwrap();
    assert_eq!(betti(&t).b1, 0);
    assert_eq!(
        classify_component(&g, &f).unwrap(),
        homcycle::HomotopyType::Point
    );
    assert!(in_d(&g, &f, &LatticePoint::zero(11)));
}

#[test]
fn larger_graphs_agree_with_the_oracle() {
    // a few graphs beyond the exhaustive corpus
    let graphs = [
        SimpleGraph::cycle(7),
        SimpleGraph::path(7),
        SimpleGraph::new(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 3),
            ],
        )
        .unwrap(),
        common::pentagon_graph().0,
    ];
    for g in &graphs {
        for k in [3, 4, 5, 6, 7] {
            let verdicts = homcycle::verify_classification(g, k).unwrap();
            assert!(verdicts.iter().all(|v| v.pass), "{:?} k={k}", g.edges());
        }
    }
}
