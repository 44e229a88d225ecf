//! Multifractal detrended fluctuation analysis of audio signals.
//!
//! The pipeline starts from a mono [`Signal`], runs MFDFA over a grid of
//! scales and moment orders ([`mfdfa`]), and reduces the resulting
//! singularity spectrum to a single width `W` — a timbre descriptor that
//! separates plucked, struck, and bowed string instruments. The crate also
//! provides WAV ingest ([`audio`]), synthetic reference signals with known
//! multifractal properties ([`synth`]), and width clustering plus
//! listener-confusion tallies ([`classify`]).
//!
//! ```
//! use mfwidth_core::{mfdfa, synth, MfdfaConfig};
//!
//! let signal = synth::gen_binomial_cascade(&synth::CascadeSpec {
//!     levels: 14,
//!     multiplier: 0.75,
//!     assignment: synth::CascadeAssignment::LeftHeavy,
//! })?;
//! let analysis = mfdfa::mfdfa(&signal, &MfdfaConfig::default_for_len(signal.len())?)?;
//! assert!(analysis.spectrum.width > 1.0);
//! # Ok::<(), mfwidth_core::Error>(())
//! ```

pub mod audio;
pub mod classify;
mod error;
pub mod mfdfa;
mod signal;
pub mod synth;

pub use audio::AudioClip;
pub use classify::{
    ConfusionMatrix, GroupRanges, GroupReport, Mode, Response, WidthRecord,
};
pub use error::{Error, Result};
pub use mfdfa::{
    FluctuationSurface, HurstCurve, MfdfaAnalysis, MfdfaConfig, ScalingExponents, Segmentation,
    SingularitySpectrum, SpectrumPoints,
};
pub use signal::Signal;
