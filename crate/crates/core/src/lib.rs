//! Minimum tri-vertex-connectivity augmentation of trees.
//!
//! Given a tree `T`, [`augment::tri_augment`] returns a set of new edges of
//! size `⌈(2·l1 + l2)/2⌉` (the degree-deficiency lower bound, where `l1` and
//! `l2` count vertices of degree one and two) whose addition makes `T`
//! 3-vertex-connected. The crate also ships the tools used to check that
//! claim: an exhaustive k-connectivity checker, a brute-force optimality
//! oracle and a labeled-tree enumerator.

pub mod augment;
pub mod cli;
pub mod connectivity;
mod error;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod tree;

pub use augment::{
    greedy_cross_branch_matching, lower_bound, non_path_augmentation, non_path_augmentation_with,
    path_augmentation, tri_augment, tri_augment_with, AugmentCase, AugmentOptions,
    AugmentationResult, ChainWiring, Matching,
};
pub use connectivity::{
    is_connected, is_connected_after_removal, is_k_connected, is_k_connected_exhaustive,
    vertex_connectivity,
};
pub use error::{Error, Result};
pub use graph::{graph_from_edges, Graph};
pub use tree::{decorate, is_ancestor, validate_tree, RootedDecoration, Tree};
