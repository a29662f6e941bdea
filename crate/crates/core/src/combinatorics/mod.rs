//! Labeling conventions, chords, triangulations, tree words and dihedral
//! symmetry.

mod symmetry;
mod triangulation;
mod word;

pub use symmetry::{
    apply_symmetry, canonical_pair, canonical_triangulation, PairProblem, SymmetryElement, SymmetryKind,
};
pub(crate) use triangulation::crosses;
pub use triangulation::{chords_cross, triangulation_to_word, word_to_triangulation, Chord, Triangulation};
pub use word::{validate_word, TreeWord};

/// Parses and decodes a tree word in one step.
pub fn decode(word: &str) -> crate::Result<Triangulation> {
    Ok(word_to_triangulation(&validate_word(word)?))
}
