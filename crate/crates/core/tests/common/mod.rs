//! Reference implementations shared by the integration tests. They work on
//! tree words and geometry directly and share no code with the library.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use flipdist::combinatorics::{TreeWord, Triangulation};
use flipdist::io::parse_triangulation;
use rand::Rng;

#[derive(Clone, PartialEq, Eq)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

pub fn parse_tree(word: &str) -> Tree {
    fn go(b: &[u8], i: &mut usize) -> Tree {
        let c = b[*i];
        *i += 1;
        if c == b'0' {
            Tree::Leaf
        } else {
            let l = go(b, i);
            let r = go(b, i);
            Tree::Node(Box::new(l), Box::new(r))
        }
    }
    let mut i = 0;
    let t = go(word.as_bytes(), &mut i);
    assert_eq!(i, word.len());
    t
}

pub fn tree_word(t: &Tree) -> String {
    match t {
        Tree::Leaf => "0".into(),
        Tree::Node(l, r) => format!("1{}{}", tree_word(l), tree_word(r)),
    }
}

/// Every tree one rotation away.
pub fn rotations(t: &Tree) -> Vec<Tree> {
    let mut out = Vec::new();
    if let Tree::Node(l, r) = t {
        if let Tree::Node(a, b) = &**l {
            out.push(Tree::Node(a.clone(), Box::new(Tree::Node(b.clone(), r.clone()))));
        }
        if let Tree::Node(b, c) = &**r {
            out.push(Tree::Node(Box::new(Tree::Node(l.clone(), b.clone())), c.clone()));
        }
        for x in rotations(l) {
            out.push(Tree::Node(Box::new(x), r.clone()));
        }
        for x in rotations(r) {
            out.push(Tree::Node(l.clone(), Box::new(x)));
        }
    }
    out
}

/// Rotation distance by plain breadth-first search over trees.
pub fn naive_distance(s: &str, t: &str) -> usize {
    let mut seen = HashMap::new();
    seen.insert(s.to_string(), 0usize);
    let mut queue = VecDeque::from([s.to_string()]);
    while let Some(x) = queue.pop_front() {
        let d = seen[&x];
        if x == t {
            return d;
        }
        for y in rotations(&parse_tree(&x)) {
            let w = tree_word(&y);
            if !seen.contains_key(&w) {
                seen.insert(w.clone(), d + 1);
                queue.push_back(w);
            }
        }
    }
    unreachable!("rotation graph is connected")
}

/// All tree words with `n` internal nodes, by recursive construction.
pub fn all_words(n: usize) -> Vec<String> {
    if n == 0 {
        return vec!["0".into()];
    }
    let mut out = Vec::new();
    for k in 0..n {
        for l in all_words(k) {
            for r in all_words(n - 1 - k) {
                out.push(format!("1{l}{r}"));
            }
        }
    }
    out.sort();
    out
}

pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64];
    for m in 1..=n {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c[n]
}

/// Crossing pairs counted geometrically on a regular polygon.
pub fn geometric_conflicts(s: &Triangulation, t: &Triangulation) -> usize {
    let v = s.vertex_count() as f64;
    let p = |i: usize| {
        let a = 2.0 * std::f64::consts::PI * i as f64 / v;
        (a.cos(), a.sin())
    };
    let orient = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
    let mut n = 0;
    for c in s.chords() {
        for d in t.chords() {
            let (a, b) = (p(c.low()), p(c.high()));
            let (x, y) = (p(d.low()), p(d.high()));
            let eps = 1e-9;
            let o1 = orient(a, b, x);
            let o2 = orient(a, b, y);
            let o3 = orient(x, y, a);
            let o4 = orient(x, y, b);
            if o1 * o2 < -eps && o3 * o4 < -eps {
                n += 1;
            }
        }
    }
    n
}

fn words_of(n: usize) -> &'static [TreeWord] {
    static CACHE: OnceLock<Vec<Vec<TreeWord>>> = OnceLock::new();
    &CACHE.get_or_init(|| (0..=10).map(|k| if k == 0 { Vec::new() } else { TreeWord::all(k) }).collect())[n]
}

/// Uniformly random triangulation of size `n` (at most 10).
pub fn random_triangulation<R: Rng>(rng: &mut R, n: usize) -> Triangulation {
    let words = words_of(n);
    let w = words[rng.gen_range(0..words.len())];
    parse_triangulation(&w.to_string()).unwrap()
}

pub fn tri(word: &str) -> Triangulation {
    parse_triangulation(word).unwrap()
}
