//! Multifractal detrended fluctuation analysis.
//!
//! The pipeline turns a signal into a singularity spectrum in five steps:
//! cumulative mean-removed profile, segmentation at each scale, polynomial
//! detrending of every segment, q-order aggregation of the squared
//! fluctuations, and log-log regression per q. The generalized Hurst
//! exponents h(q) then yield tau(q) = q h(q) - 1 and, via a Legendre
//! transform, the (alpha, f) cloud whose fitted quadratic zero crossings
//! define the spectral width W.

mod detrend;
mod fluctuation;
mod profile;
mod scaling;
mod segment;
mod spectrum;
mod surrogate;

pub use detrend::{local_fluctuation, Detrender, MAX_DETREND_ORDER};
pub use fluctuation::{qth_order_fluctuation, FluctuationSurface, Q_ZERO_EPS};
pub use profile::{compute_profile, Profile};
pub use scaling::{fit_hurst, tau_from_hurst, HurstCurve, ScalingExponents};
pub use segment::{segment_bounds, Segmentation};
pub use spectrum::{
    fit_quadratic_width, singularity_spectrum, SingularitySpectrum, SpectrumPoints,
    DEGENERATE_SPREAD,
};
pub use surrogate::shuffle_surrogate;

use crate::error::{Error, Result};
use crate::signal::Signal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Default variance floor: segments whose F^2 falls below it are raised to
/// it (and counted), keeping negative-q moments finite on near-silent data.
pub const DEFAULT_VARIANCE_FLOOR: f64 = 1e-30;

/// More than this fraction of floored segments at any scale flags the
/// result as unreliable.
pub const FLOORED_WARNING_FRACTION: f64 = 0.01;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MfdfaConfig {
    /// Segment lengths, strictly increasing; each must satisfy
    /// detrend_order + 2 <= s <= N/4 for the signal analyzed.
    pub scales: Vec<usize>,
    /// Moment orders, strictly increasing; 0 is evaluated as the
    /// geometric-mean limit.
    pub q_grid: Vec<f64>,
    /// Polynomial order removed from each segment of the profile (0..=3).
    pub detrend_order: usize,
    pub segmentation: Segmentation,
    pub variance_floor: f64,
    /// If set, the quadratic width fit uses only points with f >= this.
    pub fit_window: Option<f64>,
}

impl MfdfaConfig {
    /// Defaults for a signal of `len` samples: 20 log-spaced scales in
    /// [16, len/4], q from -5 to 5 in steps of 0.25, linear detrending,
    /// both-ends segmentation.
    pub fn default_for_len(len: usize) -> Result<Self> {
        Ok(Self {
            scales: Self::default_scales(len)?,
            q_grid: Self::default_q_grid(),
            detrend_order: 1,
            segmentation: Segmentation::BothEnds,
            variance_floor: DEFAULT_VARIANCE_FLOOR,
            fit_window: None,
        })
    }

    pub fn default_scales(len: usize) -> Result<Vec<usize>> {
        if len < 64 {
            return Err(Error::SignalTooShort { len, min: 64 });
        }
        log_spaced_scales(16, len / 4, 20)
    }

    pub fn default_q_grid() -> Vec<f64> {
        (-20..=20).map(|i| f64::from(i) * 0.25).collect()
    }

    pub fn validate_for_len(&self, len: usize) -> Result<()> {
        if self.scales.len() < 3 {
            return Err(Error::InvalidConfig(format!(
                "need at least 3 scales, got {}",
                self.scales.len()
            )));
        }
        if !self.scales.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidConfig(
                "scales must be strictly increasing".into(),
            ));
        }
        if self.detrend_order > MAX_DETREND_ORDER {
            return Err(Error::InvalidConfig(format!(
                "detrend order {} exceeds maximum {MAX_DETREND_ORDER}",
                self.detrend_order
            )));
        }
        let min_scale = self.scales[0];
        if min_scale < self.detrend_order + 2 {
            return Err(Error::InvalidConfig(format!(
                "minimum scale {min_scale} too small for detrend order {} (need >= {})",
                self.detrend_order,
                self.detrend_order + 2
            )));
        }
        let max_scale = *self.scales.last().unwrap();
        if len < 4 * max_scale {
            return Err(Error::InvalidConfig(format!(
                "maximum scale {max_scale} exceeds length/4 = {} (signal of {len})",
                len / 4
            )));
        }
        if self.q_grid.len() < 2 {
            return Err(Error::InvalidConfig(format!(
                "need at least 2 q values, got {}",
                self.q_grid.len()
            )));
        }
        if self.q_grid.iter().any(|q| !q.is_finite()) {
            return Err(Error::InvalidConfig("q values must be finite".into()));
        }
        if !self.q_grid.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidConfig(
                "q grid must be strictly increasing".into(),
            ));
        }
        if !(self.variance_floor.is_finite() && self.variance_floor > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "variance floor must be finite and positive, got {}",
                self.variance_floor
            )));
        }
        if let Some(w) = self.fit_window {
            if !w.is_finite() {
                return Err(Error::InvalidConfig(
                    "fit window threshold must be finite".into(),
                ));
            }
        }
        Ok(())
    }
}

/// `count` log-spaced integers spanning [lo, hi], deduplicated after
/// rounding (small ranges yield fewer than `count` scales).
pub fn log_spaced_scales(lo: usize, hi: usize, count: usize) -> Result<Vec<usize>> {
    if lo == 0 || hi < lo {
        return Err(Error::InvalidConfig(format!(
            "invalid scale range {lo}..{hi}"
        )));
    }
    if count == 0 {
        return Err(Error::InvalidConfig("scale count must be >= 1".into()));
    }
    if count == 1 || lo == hi {
        return Ok(vec![lo]);
    }
    let (ln_lo, ln_hi) = ((lo as f64).ln(), (hi as f64).ln());
    let mut scales: Vec<usize> = (0..count)
        .map(|i| {
            let t = i as f64 / (count - 1) as f64;
            (ln_lo + t * (ln_hi - ln_lo)).exp().round() as usize
        })
        .map(|s| s.clamp(lo, hi))
        .collect();
    scales.dedup();
    Ok(scales)
}

/// `count` linearly spaced values spanning [lo, hi].
pub fn linear_grid(lo: f64, hi: f64, count: usize) -> Result<Vec<f64>> {
    if !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err(Error::InvalidConfig(format!(
            "invalid grid range {lo}..{hi}"
        )));
    }
    if count == 0 {
        return Err(Error::InvalidConfig("grid count must be >= 1".into()));
    }
    if count == 1 || lo == hi {
        return Ok(vec![lo]);
    }
    Ok((0..count)
        .map(|i| {
            let t = i as f64 / (count - 1) as f64;
            lo + t * (hi - lo)
        })
        .collect())
}

/// Everything the pipeline produces, including intermediates for
/// inspection and the exact configuration that was run.
#[derive(Debug, Clone, PartialEq)]
pub struct MfdfaAnalysis {
    pub config: MfdfaConfig,
    pub surface: FluctuationSurface,
    pub hurst: HurstCurve,
    pub scaling: ScalingExponents,
    pub points: SpectrumPoints,
    pub spectrum: SingularitySpectrum,
    pub warnings: Vec<String>,
}

struct ScaleRow {
    values: Vec<f64>,
    segments: usize,
    floored: usize,
}

/// The fluctuation-surface half of the pipeline: profile, segmentation,
/// detrending, and q-order aggregation at every scale, plus any
/// variance-floor warnings. Deterministic: bit-identical across runs and
/// worker counts (per-scale work is independent and each segment list is
/// summed in a fixed order).
pub fn mfdfa_surface(
    signal: &Signal,
    config: &MfdfaConfig,
) -> Result<(FluctuationSurface, Vec<String>)> {
    config.validate_for_len(signal.len())?;
    let profile = compute_profile(&signal.samples)?;

    let rows: Vec<ScaleRow> = config
        .scales
        .par_iter()
        .map(|&scale| analyze_scale(&profile.values, scale, config))
        .collect::<Result<_>>()?;

    let mut warnings = Vec::new();
    for (si, row) in rows.iter().enumerate() {
        let fraction = row.floored as f64 / row.segments as f64;
        if fraction > FLOORED_WARNING_FRACTION {
            warnings.push(format!(
                "variance floor applied to {} of {} segments at scale {}",
                row.floored, row.segments, config.scales[si]
            ));
        }
    }

    let surface = FluctuationSurface {
        scales: config.scales.clone(),
        q_grid: config.q_grid.clone(),
        values: (0..config.q_grid.len())
            .map(|qi| rows.iter().map(|r| r.values[qi]).collect())
            .collect(),
        segment_counts: rows.iter().map(|r| r.segments).collect(),
    };
    Ok((surface, warnings))
}

/// Full pipeline: [`mfdfa_surface`], then the h(q) regression, tau, the
/// Legendre points, and the quadratic width fit.
pub fn mfdfa(signal: &Signal, config: &MfdfaConfig) -> Result<MfdfaAnalysis> {
    let (surface, warnings) = mfdfa_surface(signal, config)?;
    let hurst = fit_hurst(&surface)?;
    let scaling = tau_from_hurst(&hurst);
    let points = singularity_spectrum(&hurst)?;
    let spectrum = fit_quadratic_width(&points, config.fit_window)?;

    Ok(MfdfaAnalysis {
        config: config.clone(),
        surface,
        hurst,
        scaling,
        points,
        spectrum,
        warnings,
    })
}

fn analyze_scale(profile: &[f64], scale: usize, config: &MfdfaConfig) -> Result<ScaleRow> {
    let bounds = segment_bounds(profile.len(), scale, config.segmentation)?;
    let detrender = Detrender::new(scale, config.detrend_order)?;

    let mut squared = Vec::with_capacity(bounds.len());
    let mut floored = 0_usize;
    let mut all_zero = true;
    for &(start, end) in &bounds {
        let f2 = detrender.mean_square_residual(&profile[start..end]);
        if f2 != 0.0 {
            all_zero = false;
        }
        if f2 < config.variance_floor {
            floored += 1;
            squared.push(config.variance_floor);
        } else {
            squared.push(f2);
        }
    }
    // A constant profile (constant input signal) has no fluctuations to
    // scale; flooring everything would only manufacture a flat surface.
    if all_zero {
        return Err(Error::DegenerateVariance);
    }

    let values = config
        .q_grid
        .iter()
        .map(|&q| qth_order_fluctuation(&squared, q))
        .collect::<Result<Vec<f64>>>()?;

    Ok(ScaleRow {
        values,
        segments: bounds.len(),
        floored,
    })
}
