//! Per-file analysis records: a full JSON document per input, or a compact
//! CSV summary row. The config echo inside an ok record is the complete
//! recipe for reproducing the run bit for bit.

use mfwidth_core::mfdfa::{MfdfaAnalysis, MfdfaConfig};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum AnalysisRecord {
    Ok(Box<AnalysisOk>),
    Error { source: String, error: String },
}

impl AnalysisRecord {
    pub fn is_error(&self) -> bool {
        matches!(self, AnalysisRecord::Error { .. })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisOk {
    pub source: String,
    pub sample_rate: f64,
    pub samples: usize,
    pub config: ConfigEcho,
    pub hurst: HurstTable,
    /// tau(q) parallel to hurst.q.
    pub tau: Vec<f64>,
    pub spectrum: SpectrumEcho,
    pub warnings: Vec<String>,
}

/// How the analyzed series was obtained plus every pipeline knob, with
/// grids fully resolved. Feeding the scale and q lists back through the
/// corresponding flags reproduces the record exactly.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub raw: bool,
    /// Window position for decoded audio; absent for raw sample input.
    pub start_seconds: Option<f64>,
    pub duration_seconds: Option<f64>,
    #[serde(flatten)]
    pub mfdfa: MfdfaConfig,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HurstTable {
    pub q: Vec<f64>,
    pub h: Vec<f64>,
    pub r_squared: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumEcho {
    pub alpha: Vec<f64>,
    pub f_alpha: Vec<f64>,
    pub alpha0: f64,
    pub coeff_a: f64,
    pub coeff_b: f64,
    pub coeff_c: f64,
    pub width: f64,
    pub alpha1: f64,
    pub alpha2: f64,
}

pub fn record_from_analysis(
    source: String,
    sample_rate: f64,
    samples: usize,
    window: Option<(f64, f64)>,
    analysis: &MfdfaAnalysis,
) -> AnalysisRecord {
    AnalysisRecord::Ok(Box::new(AnalysisOk {
        source,
        sample_rate,
        samples,
        config: ConfigEcho {
            raw: window.is_none(),
            start_seconds: window.map(|(start, _)| start),
            duration_seconds: window.map(|(_, duration)| duration),
            mfdfa: analysis.config.clone(),
        },
        hurst: HurstTable {
            q: analysis.hurst.q_grid.clone(),
            h: analysis.hurst.h.clone(),
            r_squared: analysis.hurst.r_squared.clone(),
        },
        tau: analysis.scaling.tau.clone(),
        spectrum: SpectrumEcho {
            alpha: analysis.points.alpha.clone(),
            f_alpha: analysis.points.f_alpha.clone(),
            alpha0: analysis.spectrum.alpha0,
            coeff_a: analysis.spectrum.coeff_a,
            coeff_b: analysis.spectrum.coeff_b,
            coeff_c: analysis.spectrum.coeff_c,
            width: analysis.spectrum.width,
            alpha1: analysis.spectrum.alpha1,
            alpha2: analysis.spectrum.alpha2,
        },
        warnings: analysis.warnings.clone(),
    }))
}

pub const SUMMARY_HEADER: [&str; 8] = [
    "source",
    "status",
    "samples",
    "sample_rate",
    "width",
    "alpha0",
    "h_at_q2",
    "detail",
];

/// One CSV row per record: numbers for ok records (h_at_q2 blank when 2 is
/// not on the q grid), the error text for failed ones. Warnings are folded
/// into the detail column separated by '; '.
pub fn summary_row(record: &AnalysisRecord) -> [String; 8] {
    match record {
        AnalysisRecord::Ok(ok) => {
            let h2 = ok
                .hurst
                .q
                .iter()
                .position(|&q| q == 2.0)
                .map(|i| ok.hurst.h[i].to_string())
                .unwrap_or_default();
            [
                ok.source.clone(),
                "ok".into(),
                ok.samples.to_string(),
                ok.sample_rate.to_string(),
                ok.spectrum.width.to_string(),
                ok.spectrum.alpha0.to_string(),
                h2,
                ok.warnings.join("; "),
            ]
        }
        AnalysisRecord::Error { source, error } => [
            source.clone(),
            "error".into(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            error.clone(),
        ],
    }
}
