//! Problem instances: random generation, exhaustive enumeration, the `.gts`
//! text format, and DOT export.

mod dot;
mod enumerate;
mod gen;
mod gts;

use std::sync::Arc;

use crate::graph::{Graph, SpanningTree};

pub use dot::{export_dot, Highlight};
pub use enumerate::{
    enumerate_graphs, enumerate_instances, spanning_trees, Enumeration, MAX_ENUMERATION_N,
};
pub use gen::{
    bfs_tree, dfs_tree, gen_graph, gen_instance, gen_tree, rng_from_seed, uniform_spanning_tree,
    GenSpec, Model, TreeMethod,
};
pub use gts::{canonicalize, read_instance, read_instance_unchecked, write_instance};

/// A graph with one of its spanning trees. Enumeration shares the graph
/// between all of its trees.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Arc<Graph>,
    pub tree: SpanningTree,
}

impl Instance {
    pub fn new(graph: impl Into<Arc<Graph>>, tree: SpanningTree) -> Self {
        Instance {
            graph: graph.into(),
            tree,
        }
    }
}
