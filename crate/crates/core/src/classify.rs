//! Width clustering, mode assignment, and listener-confusion tallies.
//!
//! Spectral widths separate string instruments by how they are excited:
//! deterministic 1-D k-means ([`cluster_widths`]) recovers the groups,
//! [`assign_mode`] maps a width onto named playing-mode bands, and
//! [`ConfusionMatrix`] tallies listening-test responses.

mod confusion;
mod kmeans;
mod ranges;
mod records;
mod report;

pub use confusion::{format_percent, render_percentage_table, ConfusionMatrix};
pub use kmeans::{cluster_values, cluster_widths, Clustering};
pub use ranges::{assign_mode, GroupRange, GroupRanges, ModeAssignment, ModeCandidate};
pub use records::{
    load_responses, load_width_records, read_responses, read_width_records, Mode, Response,
    WidthRecord,
};
pub use report::{group_report, GroupReport, GroupSummary, RecordReport};
