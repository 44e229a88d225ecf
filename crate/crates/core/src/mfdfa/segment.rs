use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// How the profile is tiled with non-overlapping windows of one scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Segmentation {
    /// Tile from the start, then again from the end, so the trailing
    /// remainder (N mod s samples) is not discarded. 2*floor(N/s) segments;
    /// the two tilings overlap when s does not divide N.
    #[default]
    BothEnds,
    /// Tile from the start only: floor(N/s) segments, remainder dropped.
    ForwardOnly,
}

impl std::fmt::Display for Segmentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Segmentation::BothEnds => write!(f, "both-ends"),
            Segmentation::ForwardOnly => write!(f, "forward-only"),
        }
    }
}

impl std::str::FromStr for Segmentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "both-ends" => Ok(Segmentation::BothEnds),
            "forward-only" => Ok(Segmentation::ForwardOnly),
            other => Err(Error::InvalidConfig(format!(
                "segmentation must be 'both-ends' or 'forward-only', got '{other}'"
            ))),
        }
    }
}

/// Half-open [start, end) windows of length `scale`, forward tiling first,
/// then (for BothEnds) the end-anchored tiling in ascending order.
pub fn segment_bounds(
    len: usize,
    scale: usize,
    segmentation: Segmentation,
) -> Result<Vec<(usize, usize)>> {
    if scale == 0 {
        return Err(Error::InvalidConfig("scale must be >= 1".into()));
    }
    if scale > len {
        return Err(Error::ScaleExceedsSignal { scale, len });
    }
    let n_s = len / scale;
    let mut bounds = Vec::with_capacity(match segmentation {
        Segmentation::BothEnds => 2 * n_s,
        Segmentation::ForwardOnly => n_s,
    });
    for v in 0..n_s {
        bounds.push((v * scale, (v + 1) * scale));
    }
    if segmentation == Segmentation::BothEnds {
        let tail_start = len - n_s * scale;
        for v in 0..n_s {
            bounds.push((tail_start + v * scale, tail_start + (v + 1) * scale));
        }
    }
    Ok(bounds)
}
