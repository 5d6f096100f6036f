//! Exact verification toolkit for cross-intersecting families of independent
//! vertex sets: family enumeration, compression (shifting) machinery, and
//! exhaustive extremal search, at desk scale.

pub mod error;
pub mod chordal;
pub mod compression;
pub mod counts;
pub mod family;
pub mod graph;
pub mod sample;
pub mod search;
pub mod suite;

pub use error::{Error, Result};
pub use graph::{Graph, VertexMap, VertexSet, MAX_VERTICES};
