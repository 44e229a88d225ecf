use crate::args::{SynthArgs, SynthKind};
use anyhow::Context;
use mfwidth_core::synth::{
    cascade_delta_alpha, cascade_hurst_oracle, gen_binomial_cascade, gen_fgn, gen_white_noise,
    CascadeAssignment, CascadeSpec, FgnSpec,
};
use mfwidth_core::Signal;
use serde::Serialize;
use std::path::{Path, PathBuf};

/// Sidecar metadata: generation parameters plus the analytic values an
/// analysis of the file should recover.
#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Metadata {
    Noise {
        samples: usize,
        seed: u64,
        /// Uncorrelated noise scales with exponent 1/2 at every q.
        hurst_oracle: f64,
        width_oracle: f64,
    },
    Fgn {
        samples: usize,
        seed: u64,
        hurst: f64,
        /// Lag-1 autocorrelation 2^(2H-1) - 1 implied by the target H.
        lag1_autocorrelation: f64,
    },
    Cascade {
        samples: usize,
        multiplier: f64,
        levels: u32,
        /// Heavy-child placement: fixed left, or coin-flipped per node.
        assignment: String,
        /// Analytic spectrum span alpha_max - alpha_min.
        delta_alpha: f64,
        hurst_oracle_q2: f64,
        alpha_peak: f64,
    },
}

pub fn run(args: SynthArgs) -> anyhow::Result<u8> {
    let (signal, metadata, out) = match args.kind {
        SynthKind::Noise { n, seed, out } => {
            let signal = gen_white_noise(n, seed)?;
            let metadata = Metadata::Noise {
                samples: signal.len(),
                seed,
                hurst_oracle: 0.5,
                width_oracle: 0.0,
            };
            (signal, metadata, out.out)
        }
        SynthKind::Fgn {
            hurst,
            n,
            seed,
            out,
        } => {
            let signal = gen_fgn(&FgnSpec {
                hurst,
                len: n,
                seed,
            })?;
            let metadata = Metadata::Fgn {
                samples: signal.len(),
                seed,
                hurst,
                lag1_autocorrelation: (2.0_f64).powf(2.0 * hurst - 1.0) - 1.0,
            };
            (signal, metadata, out.out)
        }
        SynthKind::Cascade {
            a,
            levels,
            seed,
            out,
        } => {
            let assignment = match seed {
                Some(seed) => CascadeAssignment::SeededRandom { seed },
                None => CascadeAssignment::LeftHeavy,
            };
            let signal = gen_binomial_cascade(&CascadeSpec {
                levels,
                multiplier: a,
                assignment,
            })?;
            let metadata = Metadata::Cascade {
                samples: signal.len(),
                multiplier: a,
                levels,
                assignment: match seed {
                    Some(seed) => format!("seeded:{seed}"),
                    None => "left-heavy".into(),
                },
                delta_alpha: cascade_delta_alpha(a),
                hurst_oracle_q2: cascade_hurst_oracle(a, 2.0),
                alpha_peak: cascade_hurst_oracle(a, 0.0),
            };
            (signal, metadata, out.out)
        }
    };

    write_samples(&out, &signal)?;
    let sidecar = sidecar_path(&out);
    let json = serde_json::to_string_pretty(&metadata)?;
    std::fs::write(&sidecar, format!("{json}\n"))
        .with_context(|| format!("writing metadata {}", sidecar.display()))?;
    println!("{json}");
    Ok(0)
}

fn write_samples(path: &Path, signal: &Signal) -> anyhow::Result<()> {
    let mut bytes = Vec::with_capacity(signal.len() * 8);
    for sample in &signal.samples {
        bytes.extend_from_slice(&sample.to_le_bytes());
    }
    std::fs::write(path, bytes)
        .with_context(|| format!("writing sample file {}", path.display()))
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sidecar_appends_json_suffix() {
        assert_eq!(
            sidecar_path(Path::new("/tmp/x.f64")),
            PathBuf::from("/tmp/x.f64.json")
        );
    }

    #[test]
    fn sample_files_are_exact_le_f64() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.f64");
        let signal = Signal::new(vec![1.5, -2.0], 1.0).unwrap();
        write_samples(&path, &signal).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        assert_eq!(bytes.len(), 16);
        assert_eq!(f64::from_le_bytes(bytes[0..8].try_into().unwrap()), 1.5);
        assert_eq!(f64::from_le_bytes(bytes[8..16].try_into().unwrap()), -2.0);
    }
}
