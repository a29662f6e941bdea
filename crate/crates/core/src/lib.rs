//! Rotation distance on the associahedron, seen through polygon
//! triangulations: exact flip distance, geodesic enumeration, edge conflict
//! counting, greedy conflict reduction, the known counterexample families
//! and an exhaustive census over all pair problems of a given size.

pub mod census;
pub mod combinatorics;
pub mod conflict;
pub mod constructions;
pub mod error;
pub mod flip_graph;
pub mod io;

pub use error::{Error, Result};

/// Largest supported tree size; words are packed into 128 bits.
pub const MAX_SIZE: usize = 63;
