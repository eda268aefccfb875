//! Graph vulnerability toolkit: exact computation of six cut-based
//! parameters on small graphs (up to 64 vertices), extremal constructions
//! and closed forms for tenacity and connectivity, graph-family
//! enumeration, canonical forms, and exhaustive claim verification.
//!
//! Graphs are simple and undirected, with adjacency stored as one 64-bit
//! mask per vertex. The parameter engine enumerates vertex subsets
//! exhaustively, so computations are exact but limited to small orders; the
//! default guard refuses exhaustive scans above 26 vertices unless a caller
//! raises the cap explicitly.

pub mod canon;
pub mod enumeration;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod rational;
pub mod verification;

pub use canon::{canonical_form, canonical_graph, CANONICAL_MAX_ORDER};
pub use enumeration::{
    all_connected_graphs, all_trees, all_unicyclic, connected_graphs_iter, enumerate_family,
    prufer_decode, random_connected_graph, random_connected_spanning_subgraph, ConnectedGraphs,
    Family, FamilySpec, CONNECTED_ISO_MAX_ORDER, CONNECTED_LABELED_MAX_ORDER, TREES_MAX_ORDER,
    UNICYCLIC_MAX_ORDER,
};
pub use error::{Error, Result};
pub use extremal::{
    build_harary_graph, build_min_connectivity_graph, build_min_tenacity_graph, cycle_tenacity,
    degree_three_pairwise_adjacent, is_max_tenacity_tree, is_max_tenacity_unicyclic,
    max_connectivity_value, max_tree_tenacity, max_unicyclic_tenacity, min_tenacity_bracket,
    path_tenacity, unicyclic_anatomy, TenacityBracket, UnicyclicAnatomy,
};
pub use graph::{ComponentSummary, Graph, VertexSet, MAX_ORDER};
pub use graph6::{parse_graph6, parse_graph6_lines, to_graph6};
pub use invariants::{
    all_parameters, all_parameters_with_cap, connectivity, evaluate_cut, integrity, parameter,
    parameter_with_cap, rupture_degree, scattering_number, tenacity, toughness, CutCertificate,
    ParameterKind, ParameterOutcome, ParameterResult, DEFAULT_EXHAUSTIVE_MAX_ORDER,
};
pub use rational::Rational;
pub use verification::{
    verify_harary, verify_lemmas, verify_theorem1, verify_theorem2, verify_theorem3,
    Counterexample, VerificationReport, VerificationStatus,
};
