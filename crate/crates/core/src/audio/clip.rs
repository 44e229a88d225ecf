use crate::error::{Error, Result};
use crate::signal::Signal;

/// Decoded audio: one `Vec<f64>` per channel, all the same length, samples
/// nominally in [-1, 1).
#[derive(Debug, Clone, PartialEq)]
pub struct AudioClip {
    pub channels: Vec<Vec<f64>>,
    pub sample_rate: u32,
    /// Where the clip came from, for labeling output; empty when synthesized
    /// in memory.
    pub source_path: String,
}

impl AudioClip {
    /// Frames per channel.
    pub fn len(&self) -> usize {
        self.channels.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn duration_seconds(&self) -> f64 {
        self.len() as f64 / f64::from(self.sample_rate)
    }

    /// Averages all channels into one. A clip that is already mono is
    /// returned unchanged.
    pub fn mixdown_mono(&self) -> AudioClip {
        if self.channels.len() <= 1 {
            return self.clone();
        }
        let n = self.len();
        let scale = 1.0 / self.channels.len() as f64;
        let mut mixed = vec![0.0; n];
        for channel in &self.channels {
            for (acc, &v) in mixed.iter_mut().zip(channel) {
                *acc += v;
            }
        }
        for v in &mut mixed {
            *v *= scale;
        }
        AudioClip {
            channels: vec![mixed],
            sample_rate: self.sample_rate,
            source_path: self.source_path.clone(),
        }
    }

    /// Rescales so the largest absolute sample is 1. Digital silence cannot
    /// be normalized and is reported as an error rather than divided by zero.
    pub fn normalize_peak(&self) -> Result<AudioClip> {
        let peak = self
            .channels
            .iter()
            .flatten()
            .fold(0.0f64, |m, &v| m.max(v.abs()));
        if peak == 0.0 {
            return Err(Error::SilentClip);
        }
        let mut out = self.clone();
        for channel in &mut out.channels {
            for v in channel {
                *v /= peak;
            }
        }
        Ok(out)
    }

    /// Cuts `duration` seconds starting at `start` seconds, both rounded to
    /// the nearest sample. The window must lie inside the clip.
    pub fn extract_segment(&self, start: f64, duration: f64) -> Result<AudioClip> {
        if !start.is_finite() || !duration.is_finite() || start < 0.0 || duration <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "segment start {start} s / duration {duration} s out of domain"
            )));
        }
        let rate = f64::from(self.sample_rate);
        let first = (start * rate).round() as usize;
        let count = (duration * rate).round() as usize;
        if count == 0 {
            return Err(Error::EmptySegment);
        }
        let end = first
            .checked_add(count)
            .ok_or(Error::SegmentExceedsClip)?;
        if end > self.len() {
            return Err(Error::SegmentExceedsClip);
        }
        Ok(AudioClip {
            channels: self
                .channels
                .iter()
                .map(|c| c[first..end].to_vec())
                .collect(),
            sample_rate: self.sample_rate,
            source_path: self.source_path.clone(),
        })
    }

    /// Converts a mono clip into an analysis signal.
    pub fn into_signal(self) -> Result<Signal> {
        match self.channels.len() {
            1 => {
                let mut channels = self.channels;
                Signal::new(channels.pop().unwrap(), f64::from(self.sample_rate))
            }
            n => Err(Error::NotMono { channels: n }),
        }
    }
}
