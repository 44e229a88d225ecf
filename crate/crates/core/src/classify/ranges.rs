use super::records::Mode;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// One named width interval tied to a playing mode. Intervals are closed
/// and may overlap.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupRange {
    pub id: String,
    pub mode: Mode,
    pub lo: f64,
    pub hi: f64,
}

impl GroupRange {
    pub fn contains(&self, width: f64) -> bool {
        (self.lo..=self.hi).contains(&width)
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Zero inside the interval, distance to the nearer endpoint outside.
    pub fn distance(&self, width: f64) -> f64 {
        if width < self.lo {
            self.lo - width
        } else if width > self.hi {
            width - self.hi
        } else {
            0.0
        }
    }
}

/// The width-to-mode lookup table: a list of group intervals, checkable
/// against any W.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupRanges {
    pub groups: Vec<GroupRange>,
}

impl GroupRanges {
    /// The built-in five instrument groups: two low plucked bands, a struck
    /// band around 0.5, and overlapping plucked/bowed bands above 0.8.
    pub fn builtin() -> GroupRanges {
        let g = |id: &str, mode, lo, hi| GroupRange {
            id: id.to_string(),
            mode,
            lo,
            hi,
        };
        GroupRanges {
            groups: vec![
                g("G1", Mode::Plucked, 0.55, 0.75),
                g("G2", Mode::Plucked, 0.35, 0.50),
                g("G3", Mode::Plucked, 0.80, 0.85),
                g("G4", Mode::Bowed, 0.80, 0.90),
                g("G5", Mode::Struck, 0.50, 0.55),
            ],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.groups.is_empty() {
            return Err(Error::InvalidConfig("no group ranges defined".into()));
        }
        for g in &self.groups {
            if !g.lo.is_finite() || !g.hi.is_finite() || g.lo >= g.hi {
                return Err(Error::InvalidConfig(format!(
                    "group {} interval [{}, {}] is not a well-formed range",
                    g.id, g.lo, g.hi
                )));
            }
        }
        Ok(())
    }

    pub fn from_toml(text: &str) -> Result<GroupRanges> {
        let ranges: GroupRanges = toml::from_str(text)
            .map_err(|e| Error::InvalidConfig(format!("group ranges file: {e}")))?;
        ranges.validate()?;
        Ok(ranges)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<GroupRanges> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }
}

/// One candidate group for a width, with its ranking distance: distance
/// from the interval midpoint when the width is inside the interval,
/// distance to the interval itself otherwise.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModeCandidate {
    pub group_id: String,
    pub mode: Mode,
    pub distance: f64,
}

/// Candidate groups for a width, best first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModeAssignment {
    pub candidates: Vec<ModeCandidate>,
    /// True when no interval contains the width; `candidates` then holds
    /// only the nearest group.
    pub out_of_range: bool,
}

/// Ranks every group whose interval contains `width` by distance from the
/// interval midpoint (ties keep table order). A width outside every
/// interval gets the nearest group, flagged out-of-range.
pub fn assign_mode(width: f64, ranges: &GroupRanges) -> Result<ModeAssignment> {
    ranges.validate()?;
    if !width.is_finite() {
        return Err(Error::InvalidConfig(format!("non-finite width {width}")));
    }
    let mut candidates: Vec<ModeCandidate> = ranges
        .groups
        .iter()
        .filter(|g| g.contains(width))
        .map(|g| ModeCandidate {
            group_id: g.id.clone(),
            mode: g.mode,
            distance: (width - g.midpoint()).abs(),
        })
        .collect();
    if candidates.is_empty() {
        // First-in-table wins distance ties.
        let mut nearest = &ranges.groups[0];
        for g in &ranges.groups[1..] {
            if g.distance(width) < nearest.distance(width) {
                nearest = g;
            }
        }
        return Ok(ModeAssignment {
            candidates: vec![ModeCandidate {
                group_id: nearest.id.clone(),
                mode: nearest.mode,
                distance: nearest.distance(width),
            }],
            out_of_range: true,
        });
    }
    candidates.sort_by(|a, b| a.distance.partial_cmp(&b.distance).unwrap());
    Ok(ModeAssignment {
        candidates,
        out_of_range: false,
    })
}
