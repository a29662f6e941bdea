//! Exhaustive census of pair problems at one size: exact distance, greedy
//! outcome and conflict behavior for every class, folded into summary
//! statistics.

mod checkpoint;
mod engine;
mod graph;
mod output;
mod summary;

pub use engine::{run_census, CensusOptions, CensusRecord, ClassMode, DEFAULT_MAX_CENSUS_SIZE};
pub use graph::{IndexedFlipGraph, MAX_INDEXED_SIZE};
pub use output::{csv_line, parse_csv_line, write_csv, CSV_HEADER};
pub use summary::{aggregate, CensusSummary};
