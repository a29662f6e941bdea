use serde::{Deserialize, Serialize};

use super::triangulation::{Chord, Triangulation};
use super::word::TreeWord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryKind {
    Rotation,
    Reflection,
}

/// An element of the dihedral group of the `(n+2)`-gon acting on vertex
/// labels: rotation `v -> v + offset` or reflection `v -> offset - v`,
/// both modulo `n+2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetryElement {
    pub kind: SymmetryKind,
    pub offset: usize,
}

impl SymmetryElement {
    pub const IDENTITY: SymmetryElement = SymmetryElement { kind: SymmetryKind::Rotation, offset: 0 };

    pub fn rotation(offset: usize) -> Self {
        SymmetryElement { kind: SymmetryKind::Rotation, offset }
    }

    pub fn reflection(offset: usize) -> Self {
        SymmetryElement { kind: SymmetryKind::Reflection, offset }
    }

    /// All `2(n+2)` elements for polygons of the given size, rotations first.
    pub fn all(size: usize) -> Vec<SymmetryElement> {
        let m = size + 2;
        (0..m).map(Self::rotation).chain((0..m).map(Self::reflection)).collect()
    }

    pub fn apply_vertex(&self, v: usize, size: usize) -> usize {
        let m = size + 2;
        match self.kind {
            SymmetryKind::Rotation => (v + self.offset) % m,
            SymmetryKind::Reflection => (self.offset % m + m - v % m) % m,
        }
    }

    pub fn apply_chord(&self, c: Chord, size: usize) -> Chord {
        Chord::new(self.apply_vertex(c.low(), size), self.apply_vertex(c.high(), size))
    }

    pub fn inverse(&self, size: usize) -> SymmetryElement {
        let m = size + 2;
        match self.kind {
            SymmetryKind::Rotation => Self::rotation((m - self.offset % m) % m),
            SymmetryKind::Reflection => *self,
        }
    }
}

/// Relabels every chord of `t` by `g`.
pub fn apply_symmetry(t: &Triangulation, g: SymmetryElement) -> Triangulation {
    let n = t.size();
    let mut chords: Vec<Chord> = t.chords().iter().map(|&c| g.apply_chord(c, n)).collect();
    chords.sort_unstable();
    Triangulation::from_sorted_unchecked(n, chords)
}

/// An ordered pair of same-size triangulations: find a path from `source`
/// to `target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairProblem {
    pub source: Triangulation,
    pub target: Triangulation,
}

impl PairProblem {
    pub fn new(source: Triangulation, target: Triangulation) -> Result<Self> {
        if source.size() != target.size() {
            return Err(Error::SizeMismatch(source.size(), target.size()));
        }
        Ok(PairProblem { source, target })
    }

    pub fn size(&self) -> usize {
        self.source.size()
    }

    pub fn reversed(&self) -> PairProblem {
        PairProblem { source: self.target.clone(), target: self.source.clone() }
    }

    pub fn words(&self) -> (TreeWord, TreeWord) {
        (self.source.to_word(), self.target.to_word())
    }

    pub fn apply(&self, g: SymmetryElement) -> PairProblem {
        PairProblem { source: apply_symmetry(&self.source, g), target: apply_symmetry(&self.target, g) }
    }
}

/// Orbit representative of a pair under simultaneous dihedral relabeling:
/// the image with the least `(source word, target word)`.
pub fn canonical_pair(p: &PairProblem) -> PairProblem {
    SymmetryElement::all(p.size())
        .into_iter()
        .map(|g| p.apply(g))
        .min_by_key(|q| q.words())
        .expect("dihedral group is never empty")
}

/// Orbit representative of a single triangulation: the image with the least
/// tree word.
pub fn canonical_triangulation(t: &Triangulation) -> Triangulation {
    SymmetryElement::all(t.size())
        .into_iter()
        .map(|g| apply_symmetry(t, g))
        .min_by_key(|u| u.to_word())
        .expect("dihedral group is never empty")
}
