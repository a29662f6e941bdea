use crate::combinatorics::{word_to_triangulation, Chord, SymmetryElement, TreeWord, Triangulation};
use crate::error::{Error, Result};
use crate::flip_graph::opposite_diagonal;

/// The whole flip graph of one size, indexed by position in lexicographic
/// word order, with chord sets as bitmasks for fast conflict counting.
pub struct IndexedFlipGraph {
    size: usize,
    words: Vec<TreeWord>,
    chord_masks: Vec<u128>,
    /// `crossing[id]` holds the ids of every chord crossing chord `id`.
    crossing: Vec<u128>,
    neighbors: Vec<u32>,
}

/// Chord ids are dense over all diagonals; the masks need them to fit in
/// 128 bits.
pub const MAX_INDEXED_SIZE: usize = 15;

impl IndexedFlipGraph {
    pub fn build(size: usize) -> Result<Self> {
        if size == 0 || size > MAX_INDEXED_SIZE {
            return Err(Error::SizeGuard { size, max: MAX_INDEXED_SIZE });
        }
        let v = size + 2;
        let mut ids = vec![vec![u8::MAX; v]; v];
        let mut chords = Vec::new();
        for a in 0..v {
            for b in a + 2..v {
                if a == 0 && b == v - 1 {
                    continue;
                }
                ids[a][b] = chords.len() as u8;
                chords.push(Chord::new(a, b));
            }
        }
        let crossing: Vec<u128> = chords
            .iter()
            .map(|&c| {
                chords
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| crate::combinatorics::crosses(c, d))
                    .fold(0u128, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let words = TreeWord::all(size);
        let mut chord_masks = Vec::with_capacity(words.len());
        let mut neighbors = Vec::with_capacity(words.len() * (size - 1));
        let id_of = |c: Chord| ids[c.low()][c.high()] as usize;
        let mut graph = IndexedFlipGraph { size, words, chord_masks: Vec::new(), crossing, neighbors: Vec::new() };
        for w in &graph.words {
            let t = word_to_triangulation(w);
            chord_masks.push(t.chords().iter().fold(0u128, |m, &c| m | 1 << id_of(c)));
            let adj = t.adjacency();
            for &e in t.chords() {
                let inserted = opposite_diagonal(&adj, e);
                let mut next: Vec<Chord> = t.chords().iter().copied().filter(|&c| c != e).collect();
                next.push(inserted);
                next.sort();
                let u = Triangulation::from_sorted_unchecked(size, next);
                neighbors.push(graph.index_of(&u.to_word()).expect("flip stays in the graph") as u32);
            }
        }
        graph.chord_masks = chord_masks;
        graph.neighbors = neighbors;
        Ok(graph)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, i: usize) -> TreeWord {
        self.words[i]
    }

    pub fn index_of(&self, w: &TreeWord) -> Option<usize> {
        if w.size() != self.size {
            return None;
        }
        self.words.binary_search(w).ok()
    }

    /// Neighbors of `i` in chord order of the flipped chord.
    pub fn neighbors(&self, i: usize) -> &[u32] {
        let d = self.size - 1;
        &self.neighbors[i * d..(i + 1) * d]
    }

    pub fn conflicts(&self, i: usize, j: usize) -> u32 {
        let target = self.chord_masks[j];
        let mut m = self.chord_masks[i];
        let mut total = 0;
        while m != 0 {
            let c = m.trailing_zeros() as usize;
            total += (self.crossing[c] & target).count_ones();
            m &= m - 1;
        }
        total
    }

    /// Breadth-first distances from `root` to every vertex, plus the visit
    /// order (non-decreasing distance).
    pub fn bfs(&self, root: usize, dist: &mut Vec<u8>, order: &mut Vec<u32>) {
        dist.clear();
        dist.resize(self.len(), u8::MAX);
        order.clear();
        dist[root] = 0;
        order.push(root as u32);
        let mut head = 0;
        while head < order.len() {
            let x = order[head] as usize;
            head += 1;
            let dx = dist[x];
            for &y in self.neighbors(x) {
                if dist[y as usize] == u8::MAX {
                    dist[y as usize] = dx + 1;
                    order.push(y);
                }
            }
        }
    }

    /// Index permutation induced by a symmetry element.
    pub fn permutation(&self, g: SymmetryElement) -> Vec<u32> {
        self.words
            .iter()
            .map(|w| {
                let t = crate::combinatorics::apply_symmetry(&word_to_triangulation(w), g);
                self.index_of(&t.to_word()).expect("symmetry maps triangulations to triangulations") as u32
            })
            .collect()
    }

    /// All dihedral permutations, identity first.
    pub fn symmetry_permutations(&self) -> Vec<Vec<u32>> {
        SymmetryElement::all(self.size).into_iter().map(|g| self.permutation(g)).collect()
    }
}
