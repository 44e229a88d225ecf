use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Unified error type for analysis, synthesis, ingest, and classification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("signal too short: {len} samples (minimum {min})")]
    SignalTooShort { len: usize, min: usize },

    #[error("non-finite sample at index {index}")]
    NonFiniteSample { index: usize },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("scale exceeds signal: scale {scale} > {len} samples")]
    ScaleExceedsSignal { scale: usize, len: usize },

    #[error("degenerate segment variance")]
    DegenerateVariance,

    #[error("non-positive fluctuation at q={q}, scale={scale}")]
    NonPositiveFluctuation { q: f64, scale: usize },

    #[error("spectrum not concave / width undefined")]
    SpectrumNotConcave,

    #[error("circulant embedding not positive semi-definite")]
    EmbeddingNotPsd,

    #[error("unsupported encoding: {0}")]
    UnsupportedEncoding(String),

    #[error("malformed container: {0}")]
    MalformedContainer(String),

    #[error("silent clip")]
    SilentClip,

    #[error("segment exceeds clip")]
    SegmentExceedsClip,

    #[error("empty segment")]
    EmptySegment,

    #[error("clip must be mono (found {channels} channels)")]
    NotMono { channels: usize },

    #[error("fewer distinct values than k ({distinct} < {k})")]
    FewerDistinctValues { distinct: usize, k: usize },

    #[error("csv line {line}: {msg}")]
    CsvData { line: u64, msg: String },

    #[error("unknown mode '{0}'")]
    UnknownMode(String),

    #[error("no responses")]
    NoResponses,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
