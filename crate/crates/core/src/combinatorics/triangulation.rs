//! Triangulations of the marked polygon and the duality with tree words.
//!
//! A triangulation of size `n` lives on the `(n+2)`-gon whose vertices are
//! labelled `0..=n+1` counterclockwise. Vertex `n+1` is the root vertex.
//! Boundary interval `i` joins vertex `i-1` to vertex `i` (interval 0 starts
//! at the root vertex) and the root interval joins vertex `n` to the root.
//!
//! Duality: the root of the tree is the triangle sitting on the root
//! interval. For a subtree whose leaves are intervals `lo+1..=hi` the
//! polygon is spanned by vertices `lo..=hi`; if its triangle has apex `m`,
//! the left child covers vertices `lo..=m` and the right child `m..=hi`.
//! Leaf `i` of the preorder word is dual to interval `i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::TreeWord;
use crate::error::TriangulationError;
use crate::MAX_SIZE;

/// A diagonal of the polygon, stored with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chord {
    a: u8,
    b: u8,
}

impl Chord {
    /// Builds a normalized chord. Does not check it against a polygon size.
    pub fn new(x: usize, y: usize) -> Chord {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        Chord { a: a as u8, b: b as u8 }
    }

    pub fn low(&self) -> usize {
        self.a as usize
    }

    pub fn high(&self) -> usize {
        self.b as usize
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.low(), self.high())
    }

    pub fn touches(&self, v: usize) -> bool {
        self.low() == v || self.high() == v
    }

    /// Checks that this chord is a proper diagonal of the `(n+2)`-gon.
    pub fn check(&self, size: usize) -> Result<(), TriangulationError> {
        let vertices = size + 2;
        let (a, b) = self.endpoints();
        if b >= vertices {
            return Err(TriangulationError::VertexOutOfRange { vertex: b, vertices });
        }
        if a == b {
            return Err(TriangulationError::Loop(a));
        }
        if b - a == 1 || (a == 0 && b == vertices - 1) {
            return Err(TriangulationError::BoundarySide(*self));
        }
        Ok(())
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl fmt::Debug for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// True iff the two chords cross in the interior of the polygon.
///
/// Labels increase counterclockwise, so the linear order on labels is a cut
/// of the cyclic order and no wraparound handling is needed. The size is
/// accepted for symmetry with the rest of the API.
pub fn chords_cross(c1: Chord, c2: Chord, _size: usize) -> bool {
    crosses(c1, c2)
}

#[inline]
pub(crate) fn crosses(c1: Chord, c2: Chord) -> bool {
    let (a, b) = (c1.a, c1.b);
    let (x, y) = (c2.a, c2.b);
    if a == x || a == y || b == x || b == y {
        return false;
    }
    (a < x && x < b) != (a < y && y < b)
}

/// A triangulation of the marked `(n+2)`-gon: `n-1` pairwise non-crossing
/// chords, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    size: u8,
    chords: Vec<Chord>,
}

impl Triangulation {
    /// Validates a chord set as a triangulation of size `size`.
    pub fn new(size: usize, mut chords: Vec<Chord>) -> Result<Self, TriangulationError> {
        if size == 0 {
            return Err(TriangulationError::ZeroSize);
        }
        if size > MAX_SIZE {
            return Err(TriangulationError::TooLarge(size));
        }
        for c in &chords {
            c.check(size)?;
        }
        chords.sort();
        if let Some(w) = chords.windows(2).find(|w| w[0] == w[1]) {
            return Err(TriangulationError::Duplicate(w[0]));
        }
        for (i, &c) in chords.iter().enumerate() {
            if let Some(&d) = chords[i + 1..].iter().find(|&&d| crosses(c, d)) {
                return Err(TriangulationError::Crossing(c, d));
            }
        }
        // n-1 pairwise non-crossing diagonals is the maximum, so the count
        // check also gives maximality.
        if chords.len() != size - 1 {
            return Err(TriangulationError::WrongCount { expected: size - 1, found: chords.len() });
        }
        Ok(Triangulation { size: size as u8, chords })
    }

    pub(crate) fn from_sorted_unchecked(size: usize, chords: Vec<Chord>) -> Self {
        debug_assert!(chords.windows(2).all(|w| w[0] < w[1]));
        Triangulation { size: size as u8, chords }
    }

    /// Number of triangles, i.e. internal nodes of the dual tree.
    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn vertex_count(&self) -> usize {
        self.size() + 2
    }

    pub fn root_vertex(&self) -> usize {
        self.size() + 1
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn contains(&self, c: Chord) -> bool {
        self.chords.binary_search(&c).is_ok()
    }

    /// Per-vertex neighbor masks including boundary sides.
    pub(crate) fn adjacency(&self) -> Vec<u128> {
        let v = self.vertex_count();
        let mut adj = vec![0u128; v];
        for i in 0..v {
            let j = (i + 1) % v;
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        for c in &self.chords {
            let (a, b) = c.endpoints();
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    pub fn to_word(&self) -> TreeWord {
        triangulation_to_word(self)
    }

    /// Chords listed in sorted order as `a-b,c-d,...`.
    pub fn chord_list(&self) -> String {
        self.chords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triangulation(n={}, {})", self.size, self.to_word())
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Decodes a tree word into its dual triangulation.
pub fn word_to_triangulation(word: &TreeWord) -> Triangulation {
    let n = word.size();
    let mut chords = Vec::with_capacity(n.saturating_sub(1));
    let mut bits = word.iter();
    // Positions run from -1 (the root vertex) to n.
    fn subtree(bits: &mut impl Iterator<Item = bool>, lo: i64, root: usize, chords: &mut Vec<Chord>) -> i64 {
        if !bits.next().expect("validated word") {
            return lo + 1;
        }
        let apex = subtree(bits, lo, root, chords);
        let hi = subtree(bits, apex, root, chords);
        if apex - lo > 1 {
            chords.push(Chord::new(label(lo, root), apex as usize));
        }
        if hi - apex > 1 {
            chords.push(Chord::new(apex as usize, hi as usize));
        }
        hi
    }
    let hi = subtree(&mut bits, -1, n + 1, &mut chords);
    debug_assert_eq!(hi, n as i64);
    chords.sort();
    Triangulation::from_sorted_unchecked(n, chords)
}

fn label(position: i64, root: usize) -> usize {
    if position < 0 {
        root
    } else {
        position as usize
    }
}

/// Encodes a triangulation as the preorder word of its dual tree.
pub fn triangulation_to_word(t: &Triangulation) -> TreeWord {
    let n = t.size();
    let root = n + 1;
    let adj = t.adjacency();
    let mut bits: u128 = 0;
    let mut stack: Vec<(i64, i64)> = vec![(-1, n as i64)];
    while let Some((lo, hi)) = stack.pop() {
        if hi - lo == 1 {
            bits <<= 1;
            continue;
        }
        bits = (bits << 1) | 1;
        let lo_adj = adj[label(lo, root)];
        let hi_adj = adj[hi as usize];
        let apex = (lo + 1..hi)
            .find(|&m| lo_adj >> m & 1 == 1 && hi_adj >> m & 1 == 1)
            .expect("valid triangulation has an apex over every chord");
        stack.push((apex, hi));
        stack.push((lo, apex));
    }
    TreeWord::from_packed(n, bits)
}
