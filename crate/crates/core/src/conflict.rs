//! Edge conflicts between triangulations and the analyses built on them:
//! common and one-off edges, a conflict-free lower bound on distance, the
//! greedy conflict-reduction walk, and checks on how conflicts move along
//! geodesics.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{crosses, Chord, PairProblem, Triangulation};
use crate::error::{Error, Result};
use crate::flip_graph::{decompose_on_common_edges, distance, flip, neighbors, DistanceTo, FlipPath};

fn same_size(s: &Triangulation, t: &Triangulation) -> Result<()> {
    if s.size() != t.size() {
        return Err(Error::SizeMismatch(s.size(), t.size()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConflictReport {
    pub total: usize,
    /// For each chord of the source, how many target chords it crosses.
    pub per_chord: Vec<(Chord, usize)>,
}

/// Number of crossing pairs (one chord from each side).
pub fn conflict_count(s: &Triangulation, t: &Triangulation) -> usize {
    s.chords().iter().map(|&c| t.chords().iter().filter(|&&d| crosses(c, d)).count()).sum()
}

pub fn conflicts(s: &Triangulation, t: &Triangulation) -> Result<ConflictReport> {
    same_size(s, t)?;
    let per_chord: Vec<(Chord, usize)> =
        s.chords().iter().map(|&c| (c, t.chords().iter().filter(|&&d| crosses(c, d)).count())).collect();
    let total = per_chord.iter().map(|(_, k)| k).sum();
    Ok(ConflictReport { total, per_chord })
}

/// Conflicts with `t` of each neighbor of `s`, keyed by the chord flipped.
pub fn neighbor_conflict_profile(s: &Triangulation, t: &Triangulation) -> Result<Vec<(Chord, usize)>> {
    same_size(s, t)?;
    Ok(neighbors(s).into_iter().map(|(c, u)| (c, conflict_count(&u, t))).collect())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EdgeClassification {
    pub common: Vec<Chord>,
    /// Chords of the source whose single flip produces a target chord.
    pub one_off: Vec<Chord>,
    pub other: Vec<Chord>,
}

pub fn classify_edges(s: &Triangulation, t: &Triangulation) -> Result<EdgeClassification> {
    same_size(s, t)?;
    let mut out = EdgeClassification::default();
    for &c in s.chords() {
        if t.contains(c) {
            out.common.push(c);
        } else if t.contains(flip(s, c)?.1.inserted) {
            out.one_off.push(c);
        } else {
            out.other.push(c);
        }
    }
    Ok(out)
}

/// Lower bound on the flip distance.
///
/// Every flip creates at most one new common chord, so a part of size `m`
/// with no common chords needs at least `m - 1` flips, and at least `m` when
/// no chord is one-off. The bound is evaluated on each common-edge part and
/// summed.
pub fn distance_lower_bound(s: &Triangulation, t: &Triangulation) -> Result<usize> {
    let p = PairProblem::new(s.clone(), t.clone())?;
    let mut total = 0;
    for q in decompose_on_common_edges(&p) {
        if q.source == q.target {
            continue;
        }
        let m = q.size();
        let class = classify_edges(&q.source, &q.target)?;
        let common = class.common.len();
        let mut bound = (m - 1).saturating_sub(common);
        if common == 0 && class.one_off.is_empty() {
            bound = bound.max(m);
        }
        total += bound;
    }
    Ok(total)
}

/// How the greedy walk chooses among neighbors of equal (minimal) conflict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieRule {
    /// Least tree word, with `0 < 1`.
    #[default]
    LexicographicLeast,
    /// First minimal neighbor in chord order of the flipped chord.
    FirstFound,
}

impl std::str::FromStr for TieRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" | "lexicographic-least" => Ok(TieRule::LexicographicLeast),
            "first" | "first-found" => Ok(TieRule::FirstFound),
            other => Err(Error::Parse { position: 0, message: format!("unknown tie rule {other:?}") }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyOutcome {
    pub path: FlipPath,
    pub length: usize,
    pub distance: usize,
    pub overestimate: usize,
}

/// Walks from `s` to `t`, always moving to a neighbor with the fewest
/// conflicts with `t`.
///
/// Some neighbor always has strictly fewer conflicts than the current
/// state, so the walk is bounded by the starting conflict count.
pub fn greedy_path(s: &Triangulation, t: &Triangulation, tie: TieRule) -> Result<GreedyOutcome> {
    same_size(s, t)?;
    let budget = conflict_count(s, t);
    let mut path = FlipPath::start(s.clone());
    while path.last() != t {
        if path.len() >= budget {
            return Err(Error::StepBudgetExceeded(budget));
        }
        let cur = path.last();
        let mut best: Option<(usize, Chord, Triangulation)> = None;
        for (c, u) in neighbors(cur) {
            let k = conflict_count(&u, t);
            let better = match &best {
                None => true,
                Some((bk, _, bu)) => match tie {
                    TieRule::LexicographicLeast => (k, u.to_word()) < (*bk, bu.to_word()),
                    TieRule::FirstFound => k < *bk,
                },
            };
            if better {
                best = Some((k, c, u));
            }
        }
        let (_, c, _) = best.expect("a triangulation different from the target has chords");
        let (next, mv) = flip(cur, c)?;
        path.push(mv, next);
    }
    let d = distance(s, t)?;
    let length = path.len();
    Ok(GreedyOutcome { path, length, distance: d, overestimate: length - d })
}

/// Conflicts of each state of `path` with `t`.
pub fn conflict_profile_along(path: &FlipPath, t: &Triangulation) -> Result<Vec<usize>> {
    path.states
        .iter()
        .map(|x| {
            same_size(x, t)?;
            Ok(conflict_count(x, t))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FirstStepBehavior {
    /// Smallest change in conflicts over all geodesic first moves.
    pub min_rise: i64,
    pub all_first_moves_increase: bool,
}

pub fn first_step_conflict_behavior(s: &Triangulation, t: &Triangulation) -> Result<FirstStepBehavior> {
    same_size(s, t)?;
    if s == t {
        return Err(Error::IdenticalPair);
    }
    let base = conflict_count(s, t) as i64;
    let mut oracle = DistanceTo::new(t);
    let rises: Vec<i64> = oracle.closer_neighbors(s)?.iter().map(|(_, u)| conflict_count(u, t) as i64 - base).collect();
    let min_rise = *rises.iter().min().expect("some neighbor is closer to a distinct target");
    Ok(FirstStepBehavior { min_rise, all_first_moves_increase: min_rise > 0 })
}

/// Whether some geodesic from `s` to `t` never increases its conflict count
/// with `t`.
///
/// Conflicts add up across common-edge parts and a geodesic of the whole is
/// an interleaving of geodesics of the parts, so the question is answered
/// part by part. Within a part, a depth-first search over geodesic steps
/// abandons any step that raises conflicts and remembers dead ends.
pub fn exists_conflict_monotone_geodesic(s: &Triangulation, t: &Triangulation) -> Result<bool> {
    let p = PairProblem::new(s.clone(), t.clone())?;
    for q in decompose_on_common_edges(&p) {
        if q.source == q.target {
            continue;
        }
        let mut oracle = DistanceTo::new(&q.target);
        let mut memo = HashMap::new();
        if !monotone_from(&q.source, &mut oracle, &mut memo)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn monotone_from(x: &Triangulation, oracle: &mut DistanceTo<'_>, memo: &mut HashMap<u128, bool>) -> Result<bool> {
    if x == oracle.target() {
        return Ok(true);
    }
    let key = x.to_word().packed();
    if let Some(&ans) = memo.get(&key) {
        return Ok(ans);
    }
    let here = conflict_count(x, oracle.target());
    let mut ans = false;
    for (_, y) in oracle.closer_neighbors(x)? {
        if conflict_count(&y, oracle.target()) <= here && monotone_from(&y, oracle, memo)? {
            ans = true;
            break;
        }
    }
    memo.insert(key, ans);
    Ok(ans)
}
