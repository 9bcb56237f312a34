mod common;

use cbu_core::families::{double_wheel_subdivided, g1, g2, g3, jones_graph, series_parallel_gadget};
use cbu_core::generators::{complete_bipartite, cycle, grid, hypercube, random_corpus};
use cbu_core::iso::nonisomorphic_graphs_up_to;
use cbu_core::labeling::solve_labeling;
use cbu_core::recognition::{
    c5_labeling, decide_cbu, decide_cbu_with, find_homomorphism_c5, pullback_labeling, NonMemberReason,
    SearchOptions, DEFAULT_BUDGET,
};
use cbu_core::Graph;
use common::{brute_c5_hom, homogeneous, orientations};
use proptest::prelude::*;

fn brute_member(g: &Graph) -> bool {
    orientations(g).any(|o| solve_labeling(&o).is_feasible())
}

#[test]
fn verdicts_match_unpruned_search() {
    for g in nonisomorphic_graphs_up_to(6) {
        let c = decide_cbu(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.is_member(), brute_member(&g), "{:?}", g.edges());
        if let Some(l) = &c.witness {
            assert_eq!(l.orientation().graph(), &g);
            assert!(homogeneous(l.orientation(), l.labels()));
        }
        if let Some(NonMemberReason::Triangle(a, b, c)) = c.reason {
            assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c));
        }
    }
}

#[test]
fn c5_homomorphisms_match_brute_force() {
    for g in nonisomorphic_graphs_up_to(6) {
        let found = find_homomorphism_c5(&g);
        assert_eq!(found.is_some(), brute_c5_hom(&g));
        if let Some(h) = found {
            assert!(g.edges().iter().all(|&(u, v)| (h[u] + 5 - h[v]) % 5 == 1 || (h[v] + 5 - h[u]) % 5 == 1));
            let hom: Vec<usize> = h.iter().map(|&x| x as usize).collect();
            let l = pullback_labeling(&g, &hom, &c5_labeling()).unwrap();
            assert!(homogeneous(l.orientation(), l.labels()));
            assert!(decide_cbu(&g, DEFAULT_BUDGET).unwrap().is_member());
        }
    }
}

#[test]
fn membership_is_closed_under_edge_deletion() {
    for g in nonisomorphic_graphs_up_to(6) {
        if !decide_cbu(&g, DEFAULT_BUDGET).unwrap().is_member() {
            continue;
        }
        for &e in g.edges() {
            let h = g.without_edges(&[e]);
            assert!(decide_cbu(&h, DEFAULT_BUDGET).unwrap().is_member());
        }
    }
}

#[test]
fn known_members_and_non_members() {
    for g in [grid(5), hypercube(4), complete_bipartite(4, 5), cycle(7), cycle(9), jones_graph(3)] {
        assert!(decide_cbu(&g, DEFAULT_BUDGET).unwrap().is_member());
    }
    let c = decide_cbu(&g3(), DEFAULT_BUDGET).unwrap();
    assert!(!c.is_member());
    assert!(matches!(c.reason, Some(NonMemberReason::Exhausted { .. })));
}

#[test]
fn planar_witness_gadgets() {
    use cbu_core::families::planar_witness::{A, B, C, D};
    // G1: the square a b d c never runs from a source a to a sink d
    let mut g1_valid = 0;
    for o in orientations(&g1()) {
        if solve_labeling(&o).is_feasible() {
            g1_valid += 1;
            let through = [(A, B), (A, C), (B, D), (C, D)];
            assert!(!through.iter().all(|&(x, y)| o.has_arc(x, y)));
            assert!(!through.iter().all(|&(x, y)| o.has_arc(y, x)));
        }
    }
    assert!(g1_valid > 0);
    // G2: a and d are both sources of the square, or both sinks
    let mut g2_valid = 0;
    for o in orientations(&g2()) {
        if solve_labeling(&o).is_feasible() {
            g2_valid += 1;
            let out = [(A, B), (A, C), (D, B), (D, C)];
            assert!(out.iter().all(|&(x, y)| o.has_arc(x, y)) || out.iter().all(|&(x, y)| o.has_arc(y, x)));
        }
    }
    assert!(g2_valid > 0);
}

#[test]
fn large_girth_families() {
    // members of CBU, even though not of 2-CBU
    assert!(decide_cbu(&series_parallel_gadget(9), DEFAULT_BUDGET).unwrap().is_member());
    for g in 3..=6 {
        let w = double_wheel_subdivided(g);
        assert_eq!(cbu_core::analysis::girth(&w), Some(g));
    }
}

#[test]
fn parallel_search_agrees() {
    let opts = SearchOptions { jobs: 4, ..SearchOptions::default() };
    for g in random_corpus(11, 60, 9).into_iter().chain([g3(), grid(4)]) {
        let a = decide_cbu(&g, DEFAULT_BUDGET).unwrap();
        let b = decide_cbu_with(&g, &opts).unwrap();
        assert_eq!(a.verdict, b.verdict);
        if let Some(l) = &b.witness {
            assert!(homogeneous(l.orientation(), l.labels()));
        }
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn members_have_checked_witnesses(g in graph_strategy(9)) {
        let c = decide_cbu(&g, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(c.is_member(), c.witness.is_some());
        if common::has_triangle(&g) {
            prop_assert!(!c.is_member());
        }
        if common::two_colourable(&g) {
            prop_assert!(c.is_member());
        }
        if let Some(l) = c.witness {
            prop_assert!(homogeneous(l.orientation(), l.labels()));
        }
    }

    #[test]
    fn vertex_relabelling_keeps_the_verdict(
        (g, perm) in graph_strategy(8).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let h = g.permuted(&perm);
        prop_assert_eq!(
            decide_cbu(&g, DEFAULT_BUDGET).unwrap().verdict,
            decide_cbu(&h, DEFAULT_BUDGET).unwrap().verdict
        );
    }
}
