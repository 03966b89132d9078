//! Exact tools for 2-dimensional combinatorial rigidity and NAC-colourings
//! of small graphs.

pub mod catalog;
pub mod colouring;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod rigidity;
pub mod stable_cut;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
