pub mod error;
pub mod families;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod ops;
pub mod reduction;
pub mod solve;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexPartition, VertexSet};
pub use solve::{Invariant, InvariantResult, Solver, Value};
