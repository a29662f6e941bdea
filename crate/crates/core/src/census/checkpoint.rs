//! Resumable census runs.
//!
//! A checkpoint directory holds `census.meta` (the run parameters),
//! `completed.txt` (one finished block id per line) and one
//! `block-NNNNNN.csv` file per finished block, in the census CSV format
//! without a header.

use std::collections::BTreeSet;
use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use super::engine::{CensusOptions, RawRecord};
use super::graph::IndexedFlipGraph;
use super::output::{csv_line, parse_csv_line};
use crate::error::{Error, Result};

pub(crate) struct Checkpoint {
    dir: PathBuf,
    log: Mutex<File>,
}

fn meta_text(n: usize, options: &CensusOptions, vertices: usize) -> String {
    format!(
        "size={n}\ntie_rule={:?}\nclasses={:?}\nblock_size={}\ntriangulations={vertices}\n",
        options.tie_rule, options.classes, options.block_size
    )
}

impl Checkpoint {
    pub fn open(dir: &Path, n: usize, options: &CensusOptions, vertices: usize) -> Result<Self> {
        fs::create_dir_all(dir)?;
        let meta = dir.join("census.meta");
        let expected = meta_text(n, options, vertices);
        if meta.exists() {
            let found = fs::read_to_string(&meta)?;
            if found != expected {
                return Err(Error::Checkpoint(format!(
                    "{} was written by a run with different parameters",
                    meta.display()
                )));
            }
        } else {
            fs::write(&meta, expected)?;
        }
        let log = OpenOptions::new().create(true).append(true).open(dir.join("completed.txt"))?;
        Ok(Checkpoint { dir: dir.to_path_buf(), log: Mutex::new(log) })
    }

    fn block_path(&self, id: usize) -> PathBuf {
        self.dir.join(format!("block-{id:06}.csv"))
    }

    pub fn completed_blocks(&self) -> Result<BTreeSet<usize>> {
        let text = fs::read_to_string(self.dir.join("completed.txt"))?;
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.trim().parse::<usize>().map_err(|_| Error::Checkpoint(format!("bad block id line {l:?}"))))
            .collect()
    }

    pub fn store_block(&self, id: usize, records: &[RawRecord], graph: &IndexedFlipGraph) -> Result<()> {
        let mut text = String::new();
        for r in records {
            text.push_str(&csv_line(&r.resolve(graph)));
            text.push('\n');
        }
        let path = self.block_path(id);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &path)?;
        let mut log = self.log.lock().map_err(|_| Error::Checkpoint("log lock poisoned".into()))?;
        writeln!(log, "{id}")?;
        log.flush()?;
        Ok(())
    }

    /// Reloads a finished block, checking that every record's target falls
    /// inside the block.
    pub fn load_block(&self, id: usize, range: Range<usize>, graph: &IndexedFlipGraph) -> Result<Vec<RawRecord>> {
        let path = self.block_path(id);
        let text = fs::read_to_string(&path).map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        let mut out = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let rec = parse_csv_line(line)
                .map_err(|e| Error::Checkpoint(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
            let source = graph.index_of(&rec.source);
            let target = graph.index_of(&rec.target);
            let (Some(source), Some(target)) = (source, target) else {
                return Err(Error::Checkpoint(format!("{}:{}: word of the wrong size", path.display(), lineno + 1)));
            };
            if !range.contains(&target) {
                return Err(Error::Checkpoint(format!(
                    "{}:{}: target outside block boundaries",
                    path.display(),
                    lineno + 1
                )));
            }
            out.push(RawRecord {
                source: source as u32,
                target: target as u32,
                distance: rec.distance as u8,
                greedy_length: rec.greedy_length as u8,
                conflicts: rec.conflicts as u16,
                forced_increase: rec.first_step_forced_increase,
                monotone: rec.monotone_geodesic_exists,
            });
        }
        out.sort_unstable();
        Ok(out)
    }
}
