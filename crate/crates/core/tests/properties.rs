mod common;

use common::*;
use flipdist::census::{run_census, CensusOptions, IndexedFlipGraph};
use flipdist::combinatorics::{
    apply_symmetry, canonical_pair, word_to_triangulation, PairProblem, SymmetryElement, TreeWord,
};
use flipdist::conflict::{conflict_count, distance_lower_bound, greedy_path, TieRule};
use flipdist::flip_graph::{bidirectional_distance, distance, enumerate_triangulations, flip, neighbors};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x5eed_f11b;

#[test]
fn word_round_trip_exhaustive() {
    for n in 1..=6 {
        let words = all_words(n);
        assert_eq!(words.len() as u64, catalan(n));
        for w in &words {
            let t = tri(w);
            assert_eq!(t.to_word().to_string(), *w);
            // A single triangle has no chords to list.
            if n > 1 {
                assert_eq!(tri(&t.chord_list()), t);
                assert_eq!(tri(&flipdist::io::format_chord_list(&t)), t);
            }
        }
    }
}

#[test]
fn catalan_counts() {
    for n in 1..=8 {
        assert_eq!(enumerate_triangulations(n).unwrap().count() as u64, catalan(n), "n = {n}");
        assert_eq!(TreeWord::all(n).iter().map(|w| w.to_string()).collect::<Vec<_>>(), all_words(n));
    }
}

#[test]
fn neighbors_match_tree_rotations() {
    for n in 1..=6 {
        for w in all_words(n) {
            let mut lib: Vec<String> = neighbors(&tri(&w)).iter().map(|(_, u)| u.to_word().to_string()).collect();
            let mut oracle: Vec<String> = rotations(&parse_tree(&w)).iter().map(tree_word).collect();
            lib.sort();
            oracle.sort();
            assert_eq!(lib, oracle, "{w}");
        }
    }
}

#[test]
fn naive_bfs_oracle_small_sizes() {
    for n in 1..=5 {
        let words = all_words(n);
        for s in &words {
            for t in &words {
                let want = naive_distance(s, t);
                assert_eq!(distance(&tri(s), &tri(t)).unwrap(), want, "{s} {t}");
                assert_eq!(bidirectional_distance(&tri(s), &tri(t)).unwrap(), want);
            }
        }
    }
}

#[test]
fn distance_bounded_on_all_census_pairs() {
    for n in 3..=8 {
        let records = run_census(n, &CensusOptions::default()).unwrap();
        let max = records.iter().map(|r| r.distance as usize).max().unwrap();
        assert!(max <= 2 * n - 2, "n = {n}: diameter {max}");
    }
}

#[test]
fn lower_bound_and_decomposition_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(SEED);
    for i in 0..10_000 {
        let n = rng.gen_range(3..=9);
        let s = random_triangulation(&mut rng, n);
        // Half the targets are a short walk away, so they share chords.
        let t = if i % 2 == 0 {
            random_triangulation(&mut rng, n)
        } else {
            let mut t = s.clone();
            for _ in 0..rng.gen_range(1..=n) {
                let nb = neighbors(&t);
                t = nb[rng.gen_range(0..nb.len())].1.clone();
            }
            t
        };
        let d = distance(&s, &t).unwrap();
        assert_eq!(d, bidirectional_distance(&s, &t).unwrap(), "{s} {t}");
        assert!(distance_lower_bound(&s, &t).unwrap() <= d, "{s} {t}");
    }
}

#[test]
fn pair_orbits_cover_every_ordered_pair() {
    // Burnside: the number of orbits is the mean number of fixed pairs.
    for n in 3..=6 {
        let all: Vec<_> = enumerate_triangulations(n).unwrap().collect();
        let group = SymmetryElement::all(n);
        let fixed: usize = group
            .iter()
            .map(|&g| {
                let f = all.iter().filter(|t| apply_symmetry(t, g) == **t).count();
                f * f
            })
            .sum();
        let burnside = fixed / group.len();
        let options = CensusOptions { classes: flipdist::census::ClassMode::PairOrbit, ..Default::default() };
        let records = run_census(n, &options).unwrap();
        assert_eq!(records.len(), burnside, "n = {n}");
        let covered: usize = records
            .iter()
            .map(|r| {
                let p = PairProblem::new(word_to_triangulation(&r.source), word_to_triangulation(&r.target)).unwrap();
                let mut images: Vec<_> = group.iter().map(|&g| p.apply(g).words()).collect();
                images.sort();
                images.dedup();
                images.len()
            })
            .sum();
        assert_eq!(covered, all.len() * all.len());
    }
}

#[test]
fn census_records_invariant_across_orbits() {
    let records = run_census(7, &CensusOptions::default()).unwrap();
    let mut rng = StdRng::seed_from_u64(SEED);
    let group = SymmetryElement::all(7);
    for _ in 0..300 {
        let r = records[rng.gen_range(0..records.len())];
        let p = PairProblem::new(word_to_triangulation(&r.source), word_to_triangulation(&r.target)).unwrap();
        let q = p.apply(group[rng.gen_range(0..group.len())]);
        assert_eq!(distance(&q.source, &q.target).unwrap() as u32, r.distance);
        assert_eq!(conflict_count(&q.source, &q.target) as u32, r.conflicts);
        assert_eq!(canonical_pair(&q), canonical_pair(&p));
    }
}

#[test]
fn indexed_graph_bfs_matches_oracle() {
    let g = IndexedFlipGraph::build(5).unwrap();
    let (mut dist, mut order) = (Vec::new(), Vec::new());
    for i in 0..g.len() {
        g.bfs(i, &mut dist, &mut order);
        let s = g.word(i).to_string();
        for (j, &d) in dist.iter().enumerate() {
            assert_eq!(d as usize, naive_distance(&s, &g.word(j).to_string()));
        }
    }
}

fn sized_pair() -> impl Strategy<Value = (usize, u64, u64, u64)> {
    (3usize..=9, any::<u64>(), any::<u64>(), any::<u64>())
}

fn pick(n: usize, seed: u64) -> flipdist::combinatorics::Triangulation {
    random_triangulation(&mut StdRng::seed_from_u64(seed), n)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn metric_axioms((n, a, b, c) in sized_pair()) {
        let (x, y, z) = (pick(n, a), pick(n, b), pick(n, c));
        let dxy = distance(&x, &y).unwrap();
        prop_assert_eq!(dxy, distance(&y, &x).unwrap());
        prop_assert_eq!(dxy == 0, x == y);
        prop_assert!(dxy <= distance(&x, &z).unwrap() + distance(&z, &y).unwrap());
    }

    #[test]
    fn flip_is_an_involution((n, a, k, _) in sized_pair()) {
        let t = pick(n, a);
        prop_assert_eq!(neighbors(&t).len(), n - 1);
        let e = t.chords()[(k as usize) % t.chords().len()];
        let (u, mv) = flip(&t, e).unwrap();
        prop_assert!(!u.contains(e) && u.contains(mv.inserted));
        let (back, mv2) = flip(&u, mv.inserted).unwrap();
        prop_assert_eq!(back, t);
        prop_assert_eq!(mv2.inserted, e);
    }

    #[test]
    fn some_neighbor_has_fewer_conflicts((n, a, b, _) in sized_pair()) {
        let (s, t) = (pick(n, a), pick(n, b));
        prop_assume!(s != t);
        let c = conflict_count(&s, &t);
        prop_assert!(neighbors(&s).iter().any(|(_, u)| conflict_count(u, &t) < c));
    }

    #[test]
    fn greedy_between_distance_and_conflicts((n, a, b, _) in sized_pair()) {
        let (s, t) = (pick(n, a), pick(n, b));
        for tie in [TieRule::LexicographicLeast, TieRule::FirstFound] {
            let g = greedy_path(&s, &t, tie).unwrap();
            prop_assert!(g.path.validate());
            prop_assert!(g.distance <= g.length && g.length <= conflict_count(&s, &t));
            prop_assert_eq!(g.path.last(), &t);
        }
    }

    #[test]
    fn conflicts_match_geometry((n, a, b, _) in sized_pair()) {
        let (s, t) = (pick(n, a), pick(n, b));
        prop_assert_eq!(conflict_count(&s, &t), geometric_conflicts(&s, &t));
        prop_assert_eq!(conflict_count(&s, &t), conflict_count(&t, &s));
    }
}
