use crate::args::{AnalyzeArgs, RecordFormat};
use crate::config::{self, Resolved};
use crate::record::{self, AnalysisRecord, SUMMARY_HEADER};
use anyhow::Context;
use mfwidth_core::audio::load_wav;
use mfwidth_core::mfdfa::{mfdfa, MfdfaConfig};
use mfwidth_core::{Error, Signal};
use rayon::prelude::*;
use std::io::Write;
use std::path::Path;

pub fn run(args: AnalyzeArgs) -> anyhow::Result<u8> {
    let resolved = config::resolve(&args)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(resolved.jobs.unwrap_or(0))
        .build()
        .context("building worker pool")?;

    // Files are analyzed in parallel but collated in input order, so the
    // output is identical for any worker count.
    let records: Vec<AnalysisRecord> = pool.install(|| {
        args.paths
            .par_iter()
            .map(|path| analyze_one(path, &resolved))
            .collect()
    });

    let mut sink = open_sink(args.out.as_deref())?;
    match args.format {
        RecordFormat::Json => {
            for record in &records {
                serde_json::to_writer(&mut sink, record)?;
                sink.write_all(b"\n")?;
            }
        }
        RecordFormat::Csv => {
            let mut writer = csv::Writer::from_writer(sink);
            writer.write_record(SUMMARY_HEADER)?;
            for record in &records {
                writer.write_record(record::summary_row(record))?;
            }
            writer.flush()?;
        }
    }

    Ok(if records.iter().any(AnalysisRecord::is_error) {
        2
    } else {
        0
    })
}

pub fn open_sink(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(
            std::fs::File::create(p)
                .with_context(|| format!("creating output file {}", p.display()))?,
        ),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn analyze_one(path: &Path, resolved: &Resolved) -> AnalysisRecord {
    try_analyze(path, resolved).unwrap_or_else(|error| AnalysisRecord::Error {
        source: path.display().to_string(),
        error: error.to_string(),
    })
}

fn try_analyze(path: &Path, resolved: &Resolved) -> mfwidth_core::Result<AnalysisRecord> {
    let (signal, window) = if resolved.raw {
        (read_raw(path)?, None)
    } else {
        let clip = load_wav(path)?
            .mixdown_mono()
            .normalize_peak()?
            .extract_segment(resolved.start, resolved.duration)?;
        (clip.into_signal()?, Some((resolved.start, resolved.duration)))
    };

    let config = build_config(resolved, signal.len())?;
    let analysis = mfdfa(&signal, &config)?;
    Ok(record::record_from_analysis(
        path.display().to_string(),
        signal.sample_rate,
        signal.len(),
        window,
        &analysis,
    ))
}

/// Headerless little-endian f64 samples, the format `synth` writes.
fn read_raw(path: &Path) -> mfwidth_core::Result<Signal> {
    let bytes = std::fs::read(path)?;
    if bytes.len() % 8 != 0 {
        return Err(Error::MalformedContainer(format!(
            "raw sample file length {} is not a multiple of 8",
            bytes.len()
        )));
    }
    let samples = bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    Signal::new(samples, 1.0)
}

fn build_config(resolved: &Resolved, len: usize) -> mfwidth_core::Result<MfdfaConfig> {
    Ok(MfdfaConfig {
        scales: match &resolved.scales {
            Some(spec) => spec.resolve()?,
            None => MfdfaConfig::default_scales(len)?,
        },
        q_grid: match &resolved.q {
            Some(spec) => spec.resolve()?,
            None => MfdfaConfig::default_q_grid(),
        },
        detrend_order: resolved.order,
        segmentation: resolved.segmentation,
        variance_floor: resolved.variance_floor,
        fit_window: resolved.fit_window,
    })
}
