use std::collections::BTreeMap;
use std::fmt::Write;

use num_rational::Ratio;
use serde::Serialize;

use super::engine::CensusRecord;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusSummary {
    pub size: usize,
    pub class_count: u64,
    /// Classes where every geodesic first move raises conflicts.
    pub conflict_increase_class_count: u64,
    /// Classes with no conflict-monotone geodesic at all.
    pub no_monotone_geodesic_count: u64,
    /// Greedy overestimate -> number of classes.
    pub histogram: BTreeMap<u32, u64>,
    pub total_overestimate: u64,
    pub total_distance: u64,
    /// Exact mean overestimate as a reduced fraction `p/q`.
    pub mean_overestimate_exact: String,
    pub mean_overestimate: f64,
    /// Mean of overestimate / distance over classes with positive distance.
    pub mean_relative_overestimate: f64,
    /// Total overestimate divided by total distance.
    pub overestimate_over_total_distance: f64,
    pub fraction_correct: f64,
}

impl CensusSummary {
    pub fn mean_overestimate_ratio(&self) -> Ratio<u64> {
        Ratio::new(self.total_overestimate, self.class_count)
    }

    /// `key = value` lines, histogram entries as `overestimate.K = count`.
    pub fn to_key_value(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "size = {}", self.size);
        let _ = writeln!(s, "class_count = {}", self.class_count);
        let _ = writeln!(s, "conflict_increase_class_count = {}", self.conflict_increase_class_count);
        let _ = writeln!(s, "no_monotone_geodesic_count = {}", self.no_monotone_geodesic_count);
        for (k, v) in &self.histogram {
            let _ = writeln!(s, "overestimate.{k} = {v}");
        }
        let _ = writeln!(s, "total_overestimate = {}", self.total_overestimate);
        let _ = writeln!(s, "total_distance = {}", self.total_distance);
        let _ = writeln!(s, "mean_overestimate_exact = {}", self.mean_overestimate_exact);
        let _ = writeln!(s, "mean_overestimate = {:.7}", self.mean_overestimate);
        let _ = writeln!(s, "mean_relative_overestimate = {:.7}", self.mean_relative_overestimate);
        let _ = writeln!(s, "overestimate_over_total_distance = {:.7}", self.overestimate_over_total_distance);
        let _ = writeln!(s, "fraction_correct = {:.7}", self.fraction_correct);
        s
    }
}

/// Folds a complete record set for one size into summary statistics.
///
/// `expected_classes`, when given, guards against truncated input.
pub fn aggregate(records: &[CensusRecord], expected_classes: Option<u64>) -> Result<CensusSummary> {
    let first = records.first().ok_or_else(|| Error::Census("no records to aggregate".into()))?;
    let size = first.source.size();
    let mut histogram = BTreeMap::new();
    let (mut forced, mut no_mono, mut total_over, mut total_dist) = (0u64, 0u64, 0u64, 0u64);
    let mut relative_sum = 0f64;
    let mut relative_count = 0u64;
    for r in records {
        if r.source.size() != size || r.target.size() != size {
            return Err(Error::Census("records of different sizes".into()));
        }
        if r.greedy_length < r.distance || r.overestimate != r.greedy_length - r.distance {
            return Err(Error::Census(format!("inconsistent record {} {}", r.source, r.target)));
        }
        *histogram.entry(r.overestimate).or_insert(0u64) += 1;
        forced += r.first_step_forced_increase as u64;
        no_mono += !r.monotone_geodesic_exists as u64;
        total_over += r.overestimate as u64;
        total_dist += r.distance as u64;
        if r.distance > 0 {
            relative_sum += r.overestimate as f64 / r.distance as f64;
            relative_count += 1;
        }
    }
    let class_count = records.len() as u64;
    if let Some(expected) = expected_classes {
        if expected != class_count {
            return Err(Error::Census(format!("expected {expected} classes, found {class_count}")));
        }
    }
    let mean = Ratio::new(total_over, class_count);
    Ok(CensusSummary {
        size,
        class_count,
        conflict_increase_class_count: forced,
        no_monotone_geodesic_count: no_mono,
        total_overestimate: total_over,
        total_distance: total_dist,
        mean_overestimate_exact: format!("{}/{}", mean.numer(), mean.denom()),
        mean_overestimate: total_over as f64 / class_count as f64,
        mean_relative_overestimate: if relative_count == 0 { 0.0 } else { relative_sum / relative_count as f64 },
        overestimate_over_total_distance: if total_dist == 0 { 0.0 } else { total_over as f64 / total_dist as f64 },
        fraction_correct: *histogram.get(&0).unwrap_or(&0) as f64 / class_count as f64,
        histogram,
    })
}
