//! Tilting trees, the smooth fan they span, and its exchange graph.

mod cone;
mod graph;
mod tree;

pub use cone::{components_via_fan, cone_of_tree, locate, Cone, Location, Membership};
pub use graph::{exchange_graph, Edge, ExchangeGraph, GraphJson, VertexJson};
pub use tree::{enumerate_trees, tilting_of_tree, InternalVertex, Neighbor, PlaneTree};

/// Largest `t` for which trees are enumerated unless configured otherwise.
pub const DEFAULT_TREE_T_MAX: usize = 12;
