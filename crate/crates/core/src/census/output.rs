use std::io::Write;

use super::engine::CensusRecord;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str =
    "s_word,t_word,distance,conflicts,greedy_length,overestimate,first_step_forced_increase,monotone_geodesic_exists";

pub fn csv_line(r: &CensusRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        r.source,
        r.target,
        r.distance,
        r.conflicts,
        r.greedy_length,
        r.overestimate,
        r.first_step_forced_increase as u8,
        r.monotone_geodesic_exists as u8
    )
}

pub fn parse_csv_line(line: &str) -> Result<CensusRecord> {
    let fields: Vec<&str> = line.trim_end().split(',').collect();
    let bad = |position: usize, message: &str| Error::Parse { position, message: message.to_string() };
    if fields.len() != 8 {
        return Err(bad(0, &format!("expected 8 fields, found {}", fields.len())));
    }
    let num = |i: usize| fields[i].parse::<u32>().map_err(|_| bad(i, &format!("bad number {:?}", fields[i])));
    let flag = |i: usize| match fields[i] {
        "0" => Ok(false),
        "1" => Ok(true),
        other => Err(bad(i, &format!("bad flag {other:?}"))),
    };
    let rec = CensusRecord {
        source: fields[0].parse().map_err(|e| bad(0, &format!("{e}")))?,
        target: fields[1].parse().map_err(|e| bad(1, &format!("{e}")))?,
        distance: num(2)?,
        conflicts: num(3)?,
        greedy_length: num(4)?,
        overestimate: num(5)?,
        first_step_forced_increase: flag(6)?,
        monotone_geodesic_exists: flag(7)?,
    };
    if rec.greedy_length < rec.distance || rec.overestimate != rec.greedy_length - rec.distance {
        return Err(bad(5, "overestimate inconsistent with greedy length and distance"));
    }
    Ok(rec)
}

/// Writes the header and one line per record.
pub fn write_csv<W: Write>(mut out: W, records: &[CensusRecord]) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", csv_line(r))?;
    }
    out.flush()?;
    Ok(())
}
