//! Edge flips, neighborhoods, exact distance and geodesics.

mod enumerate;
mod geodesics;
mod moves;
mod search;

pub use enumerate::{enumerate_triangulations, enumerate_triangulations_up_to, DEFAULT_MAX_ENUMERATION_SIZE};
pub use geodesics::{all_geodesics, geodesic_first_moves, DistanceTo};
pub(crate) use moves::opposite_diagonal;
pub use moves::{flip, neighbors, FlipMove, FlipPath};
pub use search::{bidirectional_distance, common_edge_regions, decompose_on_common_edges, distance, Region};
