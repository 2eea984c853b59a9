//! Best swap edges and critical sets for spanning trees of unweighted,
//! 2-edge-connected graphs.
//!
//! When a tree edge `e` fails, any non-tree edge `f` crossing the cut of
//! `T - e` reconnects the tree. This crate computes the stretch of every such
//! swap tree, the best swap edges per tree edge, and small *critical sets*:
//! sets of swap edges that contain, for every `f`, an edge realizing the
//! stretch of the swap tree `T_{e/f}`. Everything is exact integer or
//! rational arithmetic.
//!
//! Module map:
//! - [`graph`]: graphs, spanning trees, distance tables, bridges, cuts.
//! - [`stretch`]: stretch factors and the two swap-stretch engines.
//! - [`critical`]: the pair potential, optimal pairs, critical-set
//!   construction, and exact minimum hitting sets.
//! - [`bestswap`]: all best swap edges with interchangeable engines.
//! - [`instances`]: generators, exhaustive enumeration, `.gts` files, DOT.
//! - [`campaign`]: verification campaigns and their reports.

pub mod bestswap;
pub mod campaign;
pub mod critical;
mod error;
pub mod graph;
pub mod instances;
pub mod stretch;

pub use error::{Error, Result};
pub use graph::{CutContext, DistanceTable, EdgeId, Graph, OrientedSwapEdge, Side, SpanningTree};
pub use stretch::RationalStretch;
