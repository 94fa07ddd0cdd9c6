//! Chip-firing divisors, gonality and scramble number on finite multigraphs.
//!
//! Vertices are `0..n`. A Cartesian product `G □ H` stores vertex `(u, w)` at
//! index `u * |V(H)| + w`.

pub mod certify;
pub mod constructions;
pub mod divisor;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod generators;
pub mod gonality;
pub mod graph;
pub mod invariants;
pub mod scramble;
pub mod sn;

mod flow;

pub use error::{Error, Result};
pub use graph::{Multigraph, VertexSet};
