//! Algorithms for finding large 2-clubs (vertex sets inducing a subgraph of
//! diameter at most two) and, more generally, s-clubs.
//!
//! The crate offers a brute-force oracle, exact branching solvers, solvers
//! parameterized by structural graph parameters (distance to cluster,
//! co-cluster and cograph graphs, h-index), and generators for instances
//! produced by hardness reductions.

pub mod cograph;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod hindex;
pub mod modulator;
pub mod params;
pub mod reductions;
pub mod parallel;

pub use error::{ClubError, Result};
pub use exact::{SolveResult, SolveStats};
pub use graph::{Graph, GraphBuilder, VertexSet};
