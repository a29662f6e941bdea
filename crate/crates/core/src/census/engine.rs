use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checkpoint::Checkpoint;
use super::graph::IndexedFlipGraph;
use crate::combinatorics::TreeWord;
use crate::conflict::TieRule;
use crate::error::{Error, Result};

/// Which ordered pairs count as one problem class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassMode {
    /// The source is taken up to rotation and reflection (its least-word
    /// image); every target is kept. This is the accounting behind the
    /// published class counts: orbits of sources times `C(n)` targets.
    #[default]
    SourceOrbit,
    /// Genuine orbits of ordered pairs under simultaneous relabeling, one
    /// representative per orbit as chosen by `canonical_pair`.
    PairOrbit,
}

impl std::str::FromStr for ClassMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "source-orbit" => Ok(ClassMode::SourceOrbit),
            "pair-orbit" => Ok(ClassMode::PairOrbit),
            other => Err(Error::Parse { position: 0, message: format!("unknown class mode {other:?}") }),
        }
    }
}

/// Largest size accepted without `force`.
pub const DEFAULT_MAX_CENSUS_SIZE: usize = 10;

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Worker threads; 0 uses the rayon default.
    pub threads: usize,
    pub tie_rule: TieRule,
    pub classes: ClassMode,
    /// Number of consecutive target words per work block.
    pub block_size: usize,
    pub checkpoint_dir: Option<PathBuf>,
    pub max_size: usize,
    pub force: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            threads: 0,
            tie_rule: TieRule::LexicographicLeast,
            classes: ClassMode::SourceOrbit,
            block_size: 512,
            checkpoint_dir: None,
            max_size: DEFAULT_MAX_CENSUS_SIZE,
            force: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CensusRecord {
    pub source: TreeWord,
    pub target: TreeWord,
    pub distance: u32,
    pub conflicts: u32,
    pub greedy_length: u32,
    pub overestimate: u32,
    /// Every geodesic first move raises the conflict count.
    pub first_step_forced_increase: bool,
    /// Some geodesic never raises the conflict count.
    pub monotone_geodesic_exists: bool,
}

/// Record in index form; sorted by `(source, target)` word order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct RawRecord {
    pub source: u32,
    pub target: u32,
    pub distance: u8,
    pub greedy_length: u8,
    pub conflicts: u16,
    pub forced_increase: bool,
    pub monotone: bool,
}

impl RawRecord {
    pub(crate) fn resolve(&self, g: &IndexedFlipGraph) -> CensusRecord {
        CensusRecord {
            source: g.word(self.source as usize),
            target: g.word(self.target as usize),
            distance: self.distance as u32,
            conflicts: self.conflicts as u32,
            greedy_length: self.greedy_length as u32,
            overestimate: (self.greedy_length - self.distance) as u32,
            first_step_forced_increase: self.forced_increase,
            monotone_geodesic_exists: self.monotone,
        }
    }
}

/// Precomputed per-size inputs shared read-only by every worker.
pub(crate) struct CensusPlan {
    pub graph: IndexedFlipGraph,
    /// Least-word representative of each source orbit, ascending.
    pub sources: Vec<u32>,
    /// For each source, the non-identity symmetries fixing it.
    stabilizers: Vec<Vec<usize>>,
    permutations: Vec<Vec<u32>>,
    pub classes: ClassMode,
    pub tie_rule: TieRule,
}

impl CensusPlan {
    pub fn new(n: usize, classes: ClassMode, tie_rule: TieRule) -> Result<Self> {
        let graph = IndexedFlipGraph::build(n)?;
        let permutations = graph.symmetry_permutations();
        let sources: Vec<u32> =
            (0..graph.len() as u32).filter(|&i| permutations.iter().all(|p| p[i as usize] >= i)).collect();
        let stabilizers = sources
            .iter()
            .map(|&s| (1..permutations.len()).filter(|&k| permutations[k][s as usize] == s).collect())
            .collect();
        Ok(CensusPlan { graph, sources, stabilizers, permutations, classes, tie_rule })
    }

    /// Expected number of records for the targets `range`.
    pub fn class_count_in(&self, range: std::ops::Range<usize>) -> usize {
        match self.classes {
            ClassMode::SourceOrbit => self.sources.len() * range.len(),
            ClassMode::PairOrbit => range.map(|t| (0..self.sources.len()).filter(|&k| self.keeps(k, t)).count()).sum(),
        }
    }

    fn keeps(&self, k: usize, t: usize) -> bool {
        match self.classes {
            ClassMode::SourceOrbit => true,
            ClassMode::PairOrbit => self.stabilizers[k].iter().all(|&g| self.permutations[g][t] as usize >= t),
        }
    }

    /// Computes every record whose target lies in `range`.
    pub fn run_block(&self, range: std::ops::Range<usize>) -> Vec<RawRecord> {
        let g = &self.graph;
        let m = g.len();
        let mut dist = Vec::with_capacity(m);
        let mut order = Vec::with_capacity(m);
        let mut conf = vec![0u16; m];
        let mut mono = vec![false; m];
        let mut out = Vec::new();
        for t in range {
            g.bfs(t, &mut dist, &mut order);
            for (x, c) in conf.iter_mut().enumerate() {
                *c = g.conflicts(x, t) as u16;
            }
            // Visit order has non-decreasing distance, so every successor is
            // settled before its predecessor.
            for &x in &order {
                let x = x as usize;
                mono[x] = x == t
                    || g.neighbors(x).iter().any(|&y| {
                        let y = y as usize;
                        dist[y] + 1 == dist[x] && conf[y] <= conf[x] && mono[y]
                    });
            }
            for (k, &s) in self.sources.iter().enumerate() {
                if !self.keeps(k, t) {
                    continue;
                }
                let s = s as usize;
                let forced = s != t
                    && g.neighbors(s)
                        .iter()
                        .filter(|&&y| dist[y as usize] + 1 == dist[s])
                        .all(|&y| conf[y as usize] > conf[s]);
                out.push(RawRecord {
                    source: s as u32,
                    target: t as u32,
                    distance: dist[s],
                    greedy_length: self.greedy_length(s, t, &conf),
                    conflicts: conf[s],
                    forced_increase: forced,
                    monotone: mono[s],
                });
            }
        }
        out.sort_unstable();
        out
    }

    fn greedy_length(&self, s: usize, t: usize, conf: &[u16]) -> u8 {
        let g = &self.graph;
        let mut cur = s;
        let mut steps = 0u8;
        while cur != t {
            let nb = g.neighbors(cur);
            // Indices follow word order, so the least index breaks ties
            // lexicographically.
            cur = match self.tie_rule {
                TieRule::LexicographicLeast => {
                    nb.iter().map(|&y| (conf[y as usize], y)).min().expect("non-target has neighbors").1 as usize
                }
                TieRule::FirstFound => {
                    let mut best = nb[0];
                    for &y in &nb[1..] {
                        if conf[y as usize] < conf[best as usize] {
                            best = y;
                        }
                    }
                    best as usize
                }
            };
            steps += 1;
        }
        steps
    }
}

/// Runs the census at size `n` and returns records sorted by
/// `(source word, target word)`.
pub fn run_census(n: usize, options: &CensusOptions) -> Result<Vec<CensusRecord>> {
    let (plan, raw) = run_census_raw(n, options)?;
    Ok(raw.iter().map(|r| r.resolve(&plan.graph)).collect())
}

pub(crate) fn run_census_raw(n: usize, options: &CensusOptions) -> Result<(CensusPlan, Vec<RawRecord>)> {
    if n < 3 {
        return Err(Error::Census(format!("size {n} is below the census minimum of 3")));
    }
    if n > options.max_size && !options.force {
        return Err(Error::SizeGuard { size: n, max: options.max_size });
    }
    let plan = CensusPlan::new(n, options.classes, options.tie_rule)?;
    let m = plan.graph.len();
    let block = options.block_size.max(1);
    let blocks: Vec<(usize, std::ops::Range<usize>)> =
        (0..m.div_ceil(block)).map(|b| (b, b * block..((b + 1) * block).min(m))).collect();

    let checkpoint = match &options.checkpoint_dir {
        Some(dir) => Some(Checkpoint::open(dir, n, options, m)?),
        None => None,
    };
    let done = match &checkpoint {
        Some(c) => c.completed_blocks()?,
        None => Default::default(),
    };

    let work = |(id, range): &(usize, std::ops::Range<usize>)| -> Result<Vec<RawRecord>> {
        if done.contains(id) {
            let ck = checkpoint.as_ref().expect("completed blocks come from a checkpoint");
            let recs = ck.load_block(*id, range.clone(), &plan.graph)?;
            if recs.len() != plan.class_count_in(range.clone()) {
                return Err(Error::Checkpoint(format!("block {id} holds {} records", recs.len())));
            }
            return Ok(recs);
        }
        let recs = plan.run_block(range.clone());
        if let Some(ck) = &checkpoint {
            ck.store_block(*id, &recs, &plan.graph)?;
        }
        Ok(recs)
    };

    let parts: Vec<Vec<RawRecord>> = if options.threads == 1 {
        blocks.iter().map(work).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::Census(e.to_string()))?;
        pool.install(|| blocks.par_iter().map(work).collect::<Result<_>>())?
    };
    let mut raw: Vec<RawRecord> = parts.into_iter().flatten().collect();
    raw.sort_unstable();
    Ok((plan, raw))
}
