//! Property-based differential tests: the fast enumerators against the
//! brute-force reference on arbitrary small graphs, with all internal
//! structure checks enabled, plus round-trip and ordering properties.

use proptest::prelude::*;

use bipenum::oracle::{self, SolutionSet};
use bipenum::{
    degeneracy_ordering, enumerate_edge_subgraphs_with, enumerate_induced_with, CollectSink,
    EnumOptions, Graph,
};

/// Arbitrary simple graph on 1..=max_n vertices: one bit per vertex pair.
/// Shrinking drops edges and vertices, which keeps failures readable.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |mask| {
                let mut edges = Vec::new();
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if mask[idx] {
                            edges.push((u, v));
                        }
                        idx += 1;
                    }
                }
                Graph::new(n, edges).expect("pairs are valid edges")
            },
        )
    })
}

fn checked() -> EnumOptions {
    EnumOptions { check_invariants: true, ..EnumOptions::default() }
}

fn induced_solutions(graph: &Graph) -> Vec<Vec<usize>> {
    let mut sink = CollectSink::default();
    enumerate_induced_with(graph, &checked(), &mut sink).expect("no sink abort");
    sink.solutions
}

fn edge_solutions(graph: &Graph) -> Vec<Vec<usize>> {
    let mut sink = CollectSink::default();
    enumerate_edge_subgraphs_with(graph, &checked(), &mut sink).expect("no sink abort");
    sink.solutions
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn induced_matches_oracle(g in arb_graph(8)) {
        let fast = induced_solutions(&g);
        let set: SolutionSet = fast.iter().cloned().collect();
        prop_assert_eq!(set.len(), fast.len(), "duplicate solution emitted");
        let slow = oracle::brute_force_induced(&g).expect("n <= 8 fits the oracle");
        prop_assert_eq!(set, slow);
    }

    #[test]
    fn edge_matches_oracle(g in arb_graph(6)) {
        let fast = edge_solutions(&g);
        let set: SolutionSet = fast.iter().cloned().collect();
        prop_assert_eq!(set.len(), fast.len(), "duplicate solution emitted");
        let slow = oracle::brute_force_edge(&g).expect("m <= 15 fits the oracle");
        prop_assert_eq!(set, slow);
    }

    #[test]
    fn induced_count_is_invariant_under_degeneracy_relabeling(g in arb_graph(8)) {
        // Relabeling is a vertex bijection, so it permutes the solution set.
        let relabeled = degeneracy_ordering(&g).relabel(&g);
        prop_assert_eq!(
            induced_solutions(&g).len(),
            induced_solutions(&relabeled).len()
        );
    }

    #[test]
    fn edge_count_is_invariant_under_degeneracy_relabeling(g in arb_graph(6)) {
        let relabeled = degeneracy_ordering(&g).relabel(&g);
        prop_assert_eq!(edge_solutions(&g).len(), edge_solutions(&relabeled).len());
    }

    #[test]
    fn enumeration_is_deterministic(g in arb_graph(7)) {
        prop_assert_eq!(induced_solutions(&g), induced_solutions(&g));
        prop_assert_eq!(edge_solutions(&g), edge_solutions(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edge_list_roundtrip_preserves_structure(g in arb_graph(10)) {
        // Parsing compacts vertex ids by first appearance, so a round trip
        // is only guaranteed to preserve the graph up to relabeling:
        // the edge count and the degree multiset (isolated vertices are
        // dropped by compaction; they have no edges to mention them).
        let reparsed = Graph::parse_edge_list(&g.to_edge_list()).expect("own output parses");
        prop_assert_eq!(reparsed.edge_count(), g.edge_count());
        let degrees = |h: &Graph| {
            let mut d: Vec<usize> =
                (0..h.vertex_count()).map(|v| h.degree(v)).filter(|&d| d > 0).collect();
            d.sort_unstable();
            d
        };
        prop_assert_eq!(degrees(&reparsed), degrees(&g));
        // Solution counts are relabeling-invariant; each isolated vertex the
        // compaction dropped was exactly one singleton solution.
        let isolated = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).count();
        prop_assert_eq!(
            induced_solutions(&reparsed).len() + isolated,
            induced_solutions(&g).len()
        );
    }

    #[test]
    fn relabeled_graph_respects_the_degeneracy_bound(g in arb_graph(10)) {
        let ord = degeneracy_ordering(&g);
        let relabeled = ord.relabel(&g);
        for v in 0..relabeled.vertex_count() {
            let larger = relabeled.neighbors(v).iter().filter(|&&(w, _)| w > v).count();
            prop_assert!(
                larger <= ord.degeneracy,
                "vertex {} has {} larger neighbors with k = {}",
                v, larger, ord.degeneracy
            );
        }
    }

    #[test]
    fn every_emitted_induced_solution_is_valid(g in arb_graph(8)) {
        for s in induced_solutions(&g) {
            prop_assert!(oracle::is_connected_vertex_subset(&g, &s));
            prop_assert!(oracle::is_bipartite_vertex_subset(&g, &s));
        }
    }

    #[test]
    fn every_emitted_edge_solution_is_valid(g in arb_graph(7)) {
        for s in edge_solutions(&g) {
            prop_assert!(oracle::is_connected_edge_subset(&g, &s));
            prop_assert!(oracle::is_bipartite_edge_subset(&g, &s));
        }
    }
}
