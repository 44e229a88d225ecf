use super::kmeans::Clustering;
use super::ranges::{assign_mode, GroupRanges, ModeCandidate};
use super::records::{Mode, WidthRecord};
use crate::error::{Error, Result};
use serde::Serialize;

/// One cluster, summarized: members in input order, centroid, and the
/// observed width span.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupSummary {
    pub group: usize,
    pub centroid: f64,
    pub width_lo: f64,
    pub width_hi: f64,
    pub instruments: Vec<String>,
}

/// One input record with its cluster and ranked mode candidates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecordReport {
    pub instrument: String,
    pub mode: Mode,
    pub width: f64,
    pub group: usize,
    pub candidates: Vec<ModeCandidate>,
    pub out_of_range: bool,
}

/// Full clustering report: per-group summaries plus per-record rows, which
/// double as (instrument, width, group) plot data.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupReport {
    pub groups: Vec<GroupSummary>,
    pub records: Vec<RecordReport>,
    pub sse: f64,
}

/// Tabulates a clustering. When `ranges` is given, each record also gets
/// ranked mode candidates.
pub fn group_report(
    records: &[WidthRecord],
    clustering: &Clustering,
    ranges: Option<&GroupRanges>,
) -> Result<GroupReport> {
    if records.len() != clustering.assignments.len() {
        return Err(Error::InvalidConfig(format!(
            "{} records but {} assignments",
            records.len(),
            clustering.assignments.len()
        )));
    }

    let k = clustering.centroids.len();
    let mut groups: Vec<GroupSummary> = (0..k)
        .map(|group| GroupSummary {
            group,
            centroid: clustering.centroids[group],
            width_lo: f64::INFINITY,
            width_hi: f64::NEG_INFINITY,
            instruments: Vec::new(),
        })
        .collect();
    let mut rows = Vec::with_capacity(records.len());
    for (record, &group) in records.iter().zip(&clustering.assignments) {
        let summary = &mut groups[group];
        summary.width_lo = summary.width_lo.min(record.width);
        summary.width_hi = summary.width_hi.max(record.width);
        summary.instruments.push(record.instrument.clone());
        let (candidates, out_of_range) = match ranges {
            Some(r) => {
                let a = assign_mode(record.width, r)?;
                (a.candidates, a.out_of_range)
            }
            None => (Vec::new(), false),
        };
        rows.push(RecordReport {
            instrument: record.instrument.clone(),
            mode: record.mode,
            width: record.width,
            group,
            candidates,
            out_of_range,
        });
    }
    Ok(GroupReport {
        groups,
        records: rows,
        sse: clustering.sse,
    })
}
