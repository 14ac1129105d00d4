//! Comparability and permutation graphs: modular trees, automorphism groups,
//! transitive orientations, permutation representations and a
//! four-dimensional construction reducing graph isomorphism.
//!
//! Every structural routine has an exhaustive counterpart in [`oracle`] that
//! the tests compare against.

pub mod canon;
pub mod dim4;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod group;
pub mod io;
pub mod modular;
pub mod oracle;
pub mod orientation;
pub mod perm;
pub mod permgraph;

pub use dim4::{
    construct_cx, four_chains, gi_reduction, incidence_graph, recover_pqr, verify_chain_intersection, ChainSet,
    GadgetGraph,
};
pub use error::{Error, Result};
pub use graph::{complement, is_module, Graph};
pub use group::{
    aut_tree, automorphism_group, color_preserving_aut, realize, subtree_isomorphism_classes, AutTree, ColoredGraph,
    GroupExpr,
};
pub use modular::{
    alternating_path_adjacent, build_modular_tree, decomposition_step, quotient, ModularPartition, ModularTree,
    NodeKind, PartitionKind,
};
pub use oracle::{brute_force_aut, brute_force_iso, brute_force_transitive_orientations, Oracle};
pub use orientation::{
    act, compose_orientation, count_orientations, is_comparability, is_transitive, orientation_stabilizer,
    prime_orientations, NodeChoice, Orientation, OrientationChoice,
};
pub use perm::{Permutation, PermutationGroup};
