use std::collections::HashMap;

use crate::combinatorics::{Chord, Triangulation};
use crate::error::{Error, Result};

use super::moves::{flip, neighbors, FlipPath};
use super::search::distance;

/// Memoized distances to one fixed target.
pub struct DistanceTo<'a> {
    target: &'a Triangulation,
    cache: HashMap<u128, usize>,
}

impl<'a> DistanceTo<'a> {
    pub fn new(target: &'a Triangulation) -> Self {
        DistanceTo { target, cache: HashMap::new() }
    }

    pub fn target(&self) -> &Triangulation {
        self.target
    }

    pub fn get(&mut self, x: &Triangulation) -> Result<usize> {
        let k = x.to_word().packed();
        if let Some(&d) = self.cache.get(&k) {
            return Ok(d);
        }
        let d = distance(x, self.target)?;
        self.cache.insert(k, d);
        Ok(d)
    }

    /// Neighbors of `x` lying one step closer to the target.
    pub fn closer_neighbors(&mut self, x: &Triangulation) -> Result<Vec<(Chord, Triangulation)>> {
        let d = self.get(x)?;
        if d == 0 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for (c, y) in neighbors(x) {
            if self.get(&y)? + 1 == d {
                out.push((c, y));
            }
        }
        Ok(out)
    }
}

/// Every shortest flip path from `s` to `t`, in chord order of the moves.
/// Fails with [`Error::LimitExceeded`] once more than `limit` paths exist.
pub fn all_geodesics(s: &Triangulation, t: &Triangulation, limit: usize) -> Result<Vec<FlipPath>> {
    if s.size() != t.size() {
        return Err(Error::SizeMismatch(s.size(), t.size()));
    }
    let mut oracle = DistanceTo::new(t);
    let mut out = Vec::new();
    let mut path = FlipPath::start(s.clone());
    extend(&mut oracle, &mut path, &mut out, limit)?;
    Ok(out)
}

fn extend(oracle: &mut DistanceTo<'_>, path: &mut FlipPath, out: &mut Vec<FlipPath>, limit: usize) -> Result<()> {
    let x = path.last().clone();
    if oracle.get(&x)? == 0 {
        if out.len() == limit {
            return Err(Error::LimitExceeded { limit });
        }
        out.push(path.clone());
        return Ok(());
    }
    for (c, _) in oracle.closer_neighbors(&x)? {
        let (y, mv) = flip(&x, c)?;
        path.push(mv, y);
        extend(oracle, path, out, limit)?;
        path.moves.pop();
        path.states.pop();
    }
    Ok(())
}

/// Chords of `s` whose flip starts some geodesic to `t`.
pub fn geodesic_first_moves(s: &Triangulation, t: &Triangulation) -> Result<Vec<Chord>> {
    if s.size() != t.size() {
        return Err(Error::SizeMismatch(s.size(), t.size()));
    }
    if s == t {
        return Err(Error::IdenticalPair);
    }
    let mut oracle = DistanceTo::new(t);
    Ok(oracle.closer_neighbors(s)?.into_iter().map(|(c, _)| c).collect())
}
