use crate::combinatorics::{word_to_triangulation, TreeWord, Triangulation};
use crate::error::{Error, Result};

/// Default cap on the size accepted by exhaustive enumeration.
pub const DEFAULT_MAX_ENUMERATION_SIZE: usize = 12;

/// Every triangulation of size `n` in lexicographic tree-word order.
pub fn enumerate_triangulations(n: usize) -> Result<impl Iterator<Item = Triangulation>> {
    enumerate_triangulations_up_to(n, DEFAULT_MAX_ENUMERATION_SIZE)
}

pub fn enumerate_triangulations_up_to(n: usize, max: usize) -> Result<impl Iterator<Item = Triangulation>> {
    if n > max {
        return Err(Error::SizeGuard { size: n, max });
    }
    if n == 0 {
        return Err(Error::Triangulation(crate::error::TriangulationError::ZeroSize));
    }
    Ok(TreeWord::all(n).into_iter().map(|w| word_to_triangulation(&w)))
}
