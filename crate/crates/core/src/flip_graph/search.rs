use std::collections::HashMap;

use crate::combinatorics::{Chord, PairProblem, Triangulation};
use crate::error::{Error, Result};

use super::moves::neighbors;

fn key(t: &Triangulation) -> u128 {
    t.to_word().packed()
}

struct Side {
    visited: HashMap<u128, u32>,
    frontier: Vec<Triangulation>,
    depth: u32,
}

impl Side {
    fn new(t: &Triangulation) -> Self {
        let mut visited = HashMap::new();
        visited.insert(key(t), 0);
        Side { visited, frontier: vec![t.clone()], depth: 0 }
    }

    /// Expands one full layer. Returns the meeting distance if a newly
    /// reached state has already been seen from the other side.
    fn expand(&mut self, other: &Side) -> Option<u32> {
        let mut next = Vec::new();
        let depth = self.depth + 1;
        for x in &self.frontier {
            for (_, y) in neighbors(x) {
                let k = key(&y);
                if let Some(&d) = other.visited.get(&k) {
                    return Some(depth + d);
                }
                if let std::collections::hash_map::Entry::Vacant(slot) = self.visited.entry(k) {
                    slot.insert(depth);
                    next.push(y);
                }
            }
        }
        self.frontier = next;
        self.depth = depth;
        None
    }
}

/// Flip distance by bidirectional breadth-first search over the whole flip
/// graph, without common-edge decomposition.
///
/// Layers are expanded whole, always on the side with the smaller frontier
/// (the source side on ties). Once balls of radius `a` and `b` around the
/// endpoints are known to be disjoint, the first state found in both gives
/// the exact distance.
pub fn bidirectional_distance(s: &Triangulation, t: &Triangulation) -> Result<usize> {
    if s.size() != t.size() {
        return Err(Error::SizeMismatch(s.size(), t.size()));
    }
    if s == t {
        return Ok(0);
    }
    let mut fwd = Side::new(s);
    let mut bwd = Side::new(t);
    loop {
        let met = if fwd.frontier.len() <= bwd.frontier.len() { fwd.expand(&bwd) } else { bwd.expand(&fwd) };
        if let Some(d) = met {
            return Ok(d as usize);
        }
        if fwd.frontier.is_empty() || bwd.frontier.is_empty() {
            unreachable!("the flip graph is connected");
        }
    }
}

/// Exact flip distance: split along common chords, then search each part.
pub fn distance(s: &Triangulation, t: &Triangulation) -> Result<usize> {
    let p = PairProblem::new(s.clone(), t.clone())?;
    decompose_on_common_edges(&p).iter().map(|q| bidirectional_distance(&q.source, &q.target)).sum()
}

/// A sub-polygon cut out by common chords, as the ascending list of the
/// original vertex labels on its boundary.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Region {
    pub vertices: Vec<usize>,
}

impl Region {
    fn relabel(&self, chords: &[Chord]) -> Vec<Chord> {
        let k = self.vertices.len();
        let mut out: Vec<Chord> = chords
            .iter()
            .filter_map(|c| {
                let a = self.vertices.binary_search(&c.low()).ok()?;
                let b = self.vertices.binary_search(&c.high()).ok()?;
                // Sides of the region are the common chords that bound it.
                if b - a == 1 || (a == 0 && b == k - 1) {
                    return None;
                }
                Some(Chord::new(a, b))
            })
            .collect();
        out.sort();
        out
    }
}

/// Cuts the polygon along every common chord of the pair.
pub fn common_edge_regions(p: &PairProblem) -> Vec<Region> {
    let n = p.size();
    let mut regions = vec![Region { vertices: (0..n + 2).collect() }];
    for &c in p.source.chords().iter().filter(|c| p.target.contains(**c)) {
        let (a, b) = c.endpoints();
        let idx = regions
            .iter()
            .position(|r| r.vertices.binary_search(&a).is_ok() && r.vertices.binary_search(&b).is_ok())
            .expect("a common chord lies inside exactly one region");
        let r = regions.swap_remove(idx);
        let (inside, outside): (Vec<usize>, Vec<usize>) = (
            r.vertices.iter().copied().filter(|&v| a <= v && v <= b).collect(),
            r.vertices.iter().copied().filter(|&v| v <= a || v >= b).collect(),
        );
        regions.push(Region { vertices: inside });
        regions.push(Region { vertices: outside });
    }
    regions.sort();
    regions
}

/// Splits a pair problem into independent subproblems, one per region cut
/// out by the common chords. Each region's vertices are relabeled
/// `0..k` in counterclockwise order, so the last one is the root vertex.
pub fn decompose_on_common_edges(p: &PairProblem) -> Vec<PairProblem> {
    let regions = common_edge_regions(p);
    if regions.len() == 1 {
        return vec![p.clone()];
    }
    regions
        .iter()
        .map(|r| {
            let size = r.vertices.len() - 2;
            PairProblem {
                source: Triangulation::from_sorted_unchecked(size, r.relabel(p.source.chords())),
                target: Triangulation::from_sorted_unchecked(size, r.relabel(p.target.chords())),
            }
        })
        .collect()
}
