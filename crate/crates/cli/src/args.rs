use crate::grid::{QSpec, ScaleSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mfwidth_core::Segmentation;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "mfwidth",
    version,
    about = "Multifractal spectral width analysis for audio and synthetic signals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze WAV or raw sample files and emit one record per file
    Analyze(AnalyzeArgs),
    /// Generate a reference signal plus a metadata sidecar
    Synth(SynthArgs),
    /// Group spectral widths and rank playing-mode candidates
    Cluster(ClusterArgs),
    /// Tally a listener-response table into a confusion matrix
    Confusion(ConfusionArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Input files; order fixes output order
    #[arg(required = true)]
    pub paths: Vec<PathBuf>,

    /// Scale grid: log-spaced lo:hi:count, or a comma-separated list
    #[arg(long)]
    pub scales: Option<ScaleSpec>,

    /// Moment grid: linear lo:hi:count, or a comma-separated list
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<QSpec>,

    /// Detrending polynomial order
    #[arg(long)]
    pub order: Option<usize>,

    /// Segment tiling: both-ends or forward-only
    #[arg(long)]
    pub segmentation: Option<Segmentation>,

    /// Smallest admissible squared fluctuation per segment
    #[arg(long)]
    pub variance_floor: Option<f64>,

    /// Keep only spectrum points with f >= this value in the width fit
    #[arg(long)]
    pub fit_window: Option<f64>,

    /// Seconds into each clip where the analyzed window starts
    #[arg(long)]
    pub start: Option<f64>,

    /// Length of the analyzed window in seconds
    #[arg(long)]
    pub duration: Option<f64>,

    /// Treat inputs as headerless little-endian f64 samples (whole file)
    #[arg(long)]
    pub raw: bool,

    /// Worker threads (default: MFWIDTH_JOBS, else all cores)
    #[arg(long)]
    pub jobs: Option<usize>,

    /// TOML file with the same keys as these flags
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// json for full records (one per line), csv for a summary table
    #[arg(long, value_enum, default_value_t = RecordFormat::Json)]
    pub format: RecordFormat,

    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecordFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[command(subcommand)]
    pub kind: SynthKind,
}

#[derive(Debug, Subcommand)]
pub enum SynthKind {
    /// Unit-variance white Gaussian noise
    Noise {
        /// Sample count
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: SynthOut,
    },
    /// Fractional Gaussian noise with a target Hurst exponent
    Fgn {
        /// Hurst parameter, strictly inside (0, 1)
        #[arg(long)]
        hurst: f64,
        /// Sample count
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: SynthOut,
    },
    /// Binomial multiplicative cascade
    Cascade {
        /// Multiplier handed to the heavier child, strictly inside (0.5, 1)
        #[arg(long)]
        a: f64,
        /// Halving depth; the signal has 2^levels samples
        #[arg(long)]
        levels: u32,
        /// Randomize which child is heavier (omitted: always the left)
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: SynthOut,
    },
}

#[derive(Debug, Args)]
pub struct SynthOut {
    /// Sample file to write; metadata goes to '<out>.json'
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ClusterArgs {
    /// CSV with header instrument,mode,width
    pub widths: PathBuf,

    /// Number of groups
    #[arg(long, default_value_t = 5)]
    pub k: usize,

    /// TOML file of mode ranges replacing the built-in table
    #[arg(long)]
    pub ranges: Option<PathBuf>,

    /// json for the full report, csv for a per-record table
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,

    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Also write plot data (instrument,width,group) to this CSV
    #[arg(long)]
    pub plot_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ConfusionArgs {
    /// CSV with header listener_id,instrument,true_mode,perceived_mode
    pub responses: PathBuf,

    /// text for tables, json for counts plus percentages
    #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
    pub format: MatrixFormat,

    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Text,
    Json,
}
