use serde::Serialize;

use crate::combinatorics::{Chord, Triangulation};
use crate::error::{Error, Result};

/// One edge flip: `removed` and `inserted` are the two diagonals of the
/// quadrilateral formed by the triangles on either side of `removed`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FlipMove {
    pub removed: Chord,
    pub inserted: Chord,
}

/// A walk in the flip graph with the move taken at each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipPath {
    pub states: Vec<Triangulation>,
    pub moves: Vec<FlipMove>,
}

impl FlipPath {
    pub fn start(t: Triangulation) -> Self {
        FlipPath { states: vec![t], moves: Vec::new() }
    }

    /// Number of flips.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn first(&self) -> &Triangulation {
        &self.states[0]
    }

    pub fn last(&self) -> &Triangulation {
        self.states.last().expect("paths hold at least one state")
    }

    pub fn push(&mut self, mv: FlipMove, next: Triangulation) {
        self.moves.push(mv);
        self.states.push(next);
    }

    /// Re-applies every move and checks it lands on the recorded state.
    pub fn validate(&self) -> bool {
        if self.states.len() != self.moves.len() + 1 {
            return false;
        }
        let size = self.first().size();
        self.moves.iter().zip(self.states.windows(2)).all(|(mv, w)| {
            w[1].size() == size && matches!(flip(&w[0], mv.removed), Ok((next, m)) if next == w[1] && m == *mv)
        })
    }
}

/// Flips chord `e` of `t` to the other diagonal of its quadrilateral.
pub fn flip(t: &Triangulation, e: Chord) -> Result<(Triangulation, FlipMove)> {
    if !t.contains(e) {
        return Err(Error::ChordNotPresent(e));
    }
    let adj = t.adjacency();
    let inserted = opposite_diagonal(&adj, e);
    let mut chords: Vec<Chord> = t.chords().iter().copied().filter(|&c| c != e).collect();
    let at = chords.binary_search(&inserted).unwrap_err();
    chords.insert(at, inserted);
    Ok((Triangulation::from_sorted_unchecked(t.size(), chords), FlipMove { removed: e, inserted }))
}

pub(crate) fn opposite_diagonal(adj: &[u128], e: Chord) -> Chord {
    let (a, b) = e.endpoints();
    let common = adj[a] & adj[b];
    let between = mask_range(a + 1, b);
    let inner = (common & between).trailing_zeros() as usize;
    let outer = (common & !between & !(1 << a) & !(1 << b)).trailing_zeros() as usize;
    debug_assert!(inner < b && outer < adj.len());
    Chord::new(inner, outer)
}

/// Bits `lo..hi`.
fn mask_range(lo: usize, hi: usize) -> u128 {
    if hi <= lo {
        return 0;
    }
    let upper = if hi >= 128 { u128::MAX } else { (1u128 << hi) - 1 };
    upper & !((1u128 << lo) - 1)
}

/// Every triangulation one flip away, keyed by the chord flipped, in
/// chord order. All chords of a convex polygon triangulation are flippable.
pub fn neighbors(t: &Triangulation) -> Vec<(Chord, Triangulation)> {
    let adj = t.adjacency();
    t.chords()
        .iter()
        .map(|&e| {
            let inserted = opposite_diagonal(&adj, e);
            let mut chords: Vec<Chord> = t.chords().iter().copied().filter(|&c| c != e).collect();
            let at = chords.binary_search(&inserted).unwrap_err();
            chords.insert(at, inserted);
            (e, Triangulation::from_sorted_unchecked(t.size(), chords))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{decode, word_to_triangulation, TreeWord};

    #[test]
    fn forced_first_move_of_size_eight_pair() {
        let s = decode("10101010101011000").unwrap();
        let (s1, mv) = flip(&s, Chord::new(5, 7)).unwrap();
        assert_eq!(s1.to_word().to_string(), "10101010101010100");
        assert_eq!(mv.inserted, Chord::new(6, 8));
    }

    #[test]
    fn missing_chord() {
        let s = decode("10101010101011000").unwrap();
        assert_eq!(flip(&s, Chord::new(1, 3)), Err(Error::ChordNotPresent(Chord::new(1, 3))));
    }

    #[test]
    fn involution_exhaustive() {
        for n in 1..=6 {
            for w in TreeWord::all(n) {
                let t = word_to_triangulation(&w);
                for &e in t.chords() {
                    let (u, mv) = flip(&t, e).unwrap();
                    Triangulation::new(n, u.chords().to_vec()).unwrap();
                    let (back, mv2) = flip(&u, mv.inserted).unwrap();
                    assert_eq!(back, t);
                    assert_eq!(mv2.inserted, e);
                }
            }
        }
    }

    #[test]
    fn degree_is_n_minus_one() {
        for n in 1..=8 {
            for w in TreeWord::all(n) {
                let t = word_to_triangulation(&w);
                assert_eq!(neighbors(&t).len(), n - 1);
            }
        }
    }

    #[test]
    fn neighbor_counts() {
        assert_eq!(neighbors(&decode("10101010101011000").unwrap()).len(), 7);
        assert!(neighbors(&decode("100").unwrap()).is_empty());
    }

    #[test]
    fn pentagon_flip_graph_is_a_five_cycle() {
        let all: Vec<Triangulation> = TreeWord::all(3).iter().map(word_to_triangulation).collect();
        assert_eq!(all.len(), 5);
        // brute force: two pentagon triangulations are adjacent iff they share a chord
        let mut edges = 0;
        for (i, a) in all.iter().enumerate() {
            let nb: Vec<Triangulation> = neighbors(a).into_iter().map(|(_, t)| t).collect();
            assert_eq!(nb.len(), 2);
            for (j, b) in all.iter().enumerate() {
                let share = a.chords().iter().any(|c| b.contains(*c));
                assert_eq!(i != j && share, nb.contains(b));
                if i < j && nb.contains(b) {
                    edges += 1;
                }
            }
        }
        assert_eq!(edges, 5);
        // connected and 2-regular with 5 vertices: walk the cycle
        let mut seen = vec![all[0].clone()];
        let mut cur = all[0].clone();
        loop {
            let next = neighbors(&cur).into_iter().map(|(_, t)| t).find(|t| !seen.contains(t));
            match next {
                Some(t) => {
                    seen.push(t.clone());
                    cur = t;
                }
                None => break,
            }
        }
        assert_eq!(seen.len(), 5);
        assert!(neighbors(&cur).iter().any(|(_, t)| *t == all[0]));
    }

    #[test]
    fn path_validation() {
        let s = decode("10101010101011000").unwrap();
        let (s1, mv) = flip(&s, Chord::new(5, 7)).unwrap();
        let mut p = FlipPath::start(s.clone());
        p.push(mv, s1.clone());
        assert!(p.validate());
        let mut bad = FlipPath::start(s);
        bad.push(mv, decode("10101010101011000").unwrap());
        assert!(!bad.validate());
    }
}
