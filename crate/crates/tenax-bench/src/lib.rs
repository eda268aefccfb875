//! Deterministic graph corpora shared by the criterion benches.

use tenax_core::{build_harary_graph, random_connected_graph, Graph};

/// Structured and seeded-random graphs sized for the exhaustive engine.
pub fn engine_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("path_20", Graph::path(20).expect("valid order")),
        ("cycle_20", Graph::cycle(20).expect("valid order")),
        (
            "harary_18_36",
            build_harary_graph(18, 36).expect("feasible size"),
        ),
        (
            "random_16_30",
            random_connected_graph(16, 30, 11).expect("feasible size"),
        ),
    ]
}

/// Twelve-vertex graphs that stress the canonical-form search differently:
/// a tree (linear-time path), a vertex-transitive cycle, and a biclique
/// whose colour classes are full twin cells.
pub fn canon_corpus() -> Vec<(&'static str, Graph)> {
    let mut biclique_edges = Vec::new();
    for a in 0..6 {
        for b in 6..12 {
            biclique_edges.push((a, b));
        }
    }
    vec![
        ("tree_12", random_connected_graph(12, 11, 5).expect("tree")),
        ("cycle_12", Graph::cycle(12).expect("valid order")),
        (
            "biclique_6_6",
            Graph::from_edge_list(12, &biclique_edges).expect("valid edges"),
        ),
    ]
}
