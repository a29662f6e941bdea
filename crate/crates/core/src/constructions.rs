//! Generators for the known pair families where greedy conflict reduction
//! or conflict-monotone geodesics fail.

use serde::Serialize;

use crate::combinatorics::{decode, Chord, PairProblem, Triangulation};
use crate::error::{Error, Result};

/// A generated pair together with how it was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: String,
    pub parameter: Option<usize>,
    #[serde(skip)]
    pub pair: PairProblem,
}

fn pair_of(s: &str, t: &str) -> PairProblem {
    PairProblem::new(decode(s).expect("fixed word is valid"), decode(t).expect("fixed word is valid"))
        .expect("fixed words have equal size")
}

/// The size-8 pair whose greedy walk overshoots and whose every geodesic
/// starts by raising conflicts.
pub fn overshoot_pair() -> PairProblem {
    pair_of("10101010101011000", "11010101101010000")
}

/// Size-9 pair where every geodesic in either direction starts with a
/// conflict increase.
pub fn bidirectional9_pair() -> PairProblem {
    pair_of("1010101100101110000", "1111110101000100000")
}

/// Pair of size `k + 7` whose forced first flip raises conflicts by `k`.
pub fn rising_pair(k: usize) -> Result<PairProblem> {
    if k < 1 {
        return Err(Error::BadParameter);
    }
    let n = k + 7;
    let s = format!("{}11000", "10".repeat(n - 2));
    let t = format!("1{}1101010000", "10".repeat(n - 5));
    PairProblem::new(decode(&s)?, decode(&t)?)
}

/// Grows both triangulations by the same fan of `m` triangles.
///
/// The new vertices go between vertex `n` and the root, which keeps its
/// role; the original polygon is closed off by the chord from `n` to the
/// root and the fan radiates from the root.
pub fn pad_with_common_triangles(p: &PairProblem, m: usize) -> PairProblem {
    if m == 0 {
        return p.clone();
    }
    let n = p.size();
    let root = n + m + 1;
    let pad = |t: &Triangulation| {
        let mut chords: Vec<Chord> =
            t.chords().iter().map(|c| if c.high() == n + 1 { Chord::new(c.low(), root) } else { *c }).collect();
        chords.extend((n..n + m).map(|v| Chord::new(v, root)));
        Triangulation::new(n + m, chords).expect("padding keeps a triangulation")
    };
    PairProblem { source: pad(&p.source), target: pad(&p.target) }
}

/// Glues `(S, T)` to a mirror image of `(T, S)` along the root side.
///
/// On the `2n + 2`-gon the first copy keeps its labels, so the old root
/// side becomes the chord `(0, n + 1)`; the second copy is reflected by
/// `v -> -v` onto vertices `n + 1 ..= 2n + 1` and `0`.
pub fn double_pair(p: &PairProblem) -> PairProblem {
    let n = p.size();
    let big = 2 * n + 2;
    let mirror = |v: usize| (big - v) % big;
    let glue = Chord::new(0, n + 1);
    let join = |a: &Triangulation, b: &Triangulation| {
        let mut chords: Vec<Chord> = a.chords().to_vec();
        chords.extend(b.chords().iter().map(|c| Chord::new(mirror(c.low()), mirror(c.high()))));
        chords.push(glue);
        Triangulation::new(2 * n, chords).expect("gluing keeps a triangulation")
    };
    PairProblem { source: join(&p.source, &p.target), target: join(&p.target, &p.source) }
}

/// Size `2k + 14` pair with no conflict-monotone geodesic in either
/// direction, every geodesic containing a rise of at least `k`.
pub fn doubled_rising_pair(k: usize) -> Result<PairProblem> {
    Ok(double_pair(&rising_pair(k)?))
}

/// Family names accepted by [`construct`].
pub const FAMILIES: &[&str] = &["overshoot", "bidirectional9", "rising", "doubled-rising", "doubled-overshoot"];

/// Builds a family by name; `rising` and `doubled-rising` need a parameter.
pub fn construct(family: &str, parameter: Option<usize>) -> Result<FamilySpec> {
    let need = || parameter.ok_or(Error::BadParameter);
    let pair = match family {
        "overshoot" => overshoot_pair(),
        "bidirectional9" => bidirectional9_pair(),
        "doubled-overshoot" => double_pair(&overshoot_pair()),
        "rising" => rising_pair(need()?)?,
        "doubled-rising" => doubled_rising_pair(need()?)?,
        other => {
            return Err(Error::Parse {
                position: 0,
                message: format!("unknown family {other:?}; expected one of {}", FAMILIES.join(", ")),
            })
        }
    };
    Ok(FamilySpec { family: family.to_string(), parameter, pair })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conflict::{classify_edges, conflict_count, exists_conflict_monotone_geodesic};
    use crate::flip_graph::distance;

    #[test]
    fn rising_one_is_the_size_eight_pair() {
        assert_eq!(rising_pair(1).unwrap(), overshoot_pair());
        assert!(rising_pair(0).is_err());
        for k in 1..6 {
            let p = rising_pair(k).unwrap();
            assert_eq!(p.size(), k + 7);
            assert_eq!(p.words().0.len(), 2 * (k + 7) + 1);
        }
    }

    #[test]
    fn padding() {
        let p = overshoot_pair();
        assert_eq!(pad_with_common_triangles(&p, 0), p);
        let q = pad_with_common_triangles(&p, 2);
        assert_eq!(q.size(), 10);
        let class = classify_edges(&q.source, &q.target).unwrap();
        assert_eq!(class.common, vec![Chord::new(8, 11), Chord::new(9, 11)]);
        assert_eq!(distance(&q.source, &q.target).unwrap(), 8);
        assert_eq!(conflict_count(&q.source, &q.target), 27);
    }

    #[test]
    fn doubling() {
        let p = overshoot_pair();
        let d = double_pair(&p);
        assert_eq!(d.size(), 16);
        let class = classify_edges(&d.source, &d.target).unwrap();
        assert_eq!(class.common, vec![Chord::new(0, 9)]);
        assert_eq!(conflict_count(&d.source, &d.target), 54);
        assert_eq!(distance(&d.source, &d.target).unwrap(), 16);
        assert!(!exists_conflict_monotone_geodesic(&d.source, &d.target).unwrap());
        assert!(!exists_conflict_monotone_geodesic(&d.target, &d.source).unwrap());
        assert_eq!(doubled_rising_pair(1).unwrap(), d);
        assert_eq!(doubled_rising_pair(2).unwrap().size(), 18);
    }

    #[test]
    fn by_name() {
        assert_eq!(construct("rising", Some(1)).unwrap().pair, overshoot_pair());
        assert!(construct("rising", None).is_err());
        assert!(construct("nonsense", None).is_err());
        assert_eq!(construct("bidirectional9", None).unwrap().pair.size(), 9);
    }
}
