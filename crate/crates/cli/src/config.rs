//! Analysis settings assembled from, in falling precedence: explicit
//! flags, the --config TOML file, the MFWIDTH_JOBS environment variable
//! (worker count only), and built-in defaults.

use crate::args::AnalyzeArgs;
use crate::grid::{QSpec, ScaleSpec};
use crate::UsageError;
use mfwidth_core::mfdfa::DEFAULT_VARIANCE_FLOOR;
use mfwidth_core::Segmentation;
use serde::Deserialize;
use std::env::VarError;

pub const DEFAULT_START_SECONDS: f64 = 0.0;
pub const DEFAULT_DURATION_SECONDS: f64 = 30.0;

/// The --config file carries the same keys as the analyze flags.
#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct FileConfig {
    scales: Option<String>,
    q: Option<String>,
    order: Option<usize>,
    segmentation: Option<String>,
    variance_floor: Option<f64>,
    fit_window: Option<f64>,
    start: Option<f64>,
    duration: Option<f64>,
    raw: Option<bool>,
    jobs: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Resolved {
    pub scales: Option<ScaleSpec>,
    pub q: Option<QSpec>,
    pub order: usize,
    pub segmentation: Segmentation,
    pub variance_floor: f64,
    pub fit_window: Option<f64>,
    pub start: f64,
    pub duration: f64,
    pub raw: bool,
    pub jobs: Option<usize>,
}

pub fn resolve(args: &AnalyzeArgs) -> Result<Resolved, UsageError> {
    let file = load_file(args)?;

    let file_scales = parse_with(file.scales.as_deref(), "config key 'scales'")?;
    let file_q = parse_with(file.q.as_deref(), "config key 'q'")?;
    let file_segmentation = file
        .segmentation
        .as_deref()
        .map(|s| {
            s.parse::<Segmentation>()
                .map_err(|e| UsageError(format!("config key 'segmentation': {e}")))
        })
        .transpose()?;

    let jobs = match args.jobs.or(file.jobs) {
        Some(j) => Some(j),
        None => env_jobs()?,
    };
    if jobs == Some(0) {
        return Err(UsageError("worker count must be >= 1".into()));
    }

    Ok(Resolved {
        scales: args.scales.clone().or(file_scales),
        q: args.q.clone().or(file_q),
        order: args.order.or(file.order).unwrap_or(1),
        segmentation: args
            .segmentation
            .or(file_segmentation)
            .unwrap_or(Segmentation::BothEnds),
        variance_floor: args
            .variance_floor
            .or(file.variance_floor)
            .unwrap_or(DEFAULT_VARIANCE_FLOOR),
        fit_window: args.fit_window.or(file.fit_window),
        start: args.start.or(file.start).unwrap_or(DEFAULT_START_SECONDS),
        duration: args
            .duration
            .or(file.duration)
            .unwrap_or(DEFAULT_DURATION_SECONDS),
        raw: args.raw || file.raw.unwrap_or(false),
        jobs,
    })
}

fn load_file(args: &AnalyzeArgs) -> Result<FileConfig, UsageError> {
    let Some(path) = &args.config else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("config file {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| UsageError(format!("config file {}: {e}", path.display())))
}

fn parse_with<T>(field: Option<&str>, what: &str) -> Result<Option<T>, UsageError>
where
    T: std::str::FromStr<Err = String>,
{
    field
        .map(|s| s.parse::<T>().map_err(|e| UsageError(format!("{what}: {e}"))))
        .transpose()
}

fn env_jobs() -> Result<Option<usize>, UsageError> {
    match std::env::var("MFWIDTH_JOBS") {
        Ok(value) => value.trim().parse().map(Some).map_err(|_| {
            UsageError(format!("MFWIDTH_JOBS must be a worker count, got '{value}'"))
        }),
        Err(VarError::NotPresent) => Ok(None),
        Err(VarError::NotUnicode(_)) => {
            Err(UsageError("MFWIDTH_JOBS is not valid UTF-8".into()))
        }
    }
}
