use crate::error::{Error, Result};
use crate::signal::Signal;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rustfft::{num_complex::Complex, FftPlanner};

#[derive(Debug, Clone, PartialEq)]
pub struct FgnSpec {
    /// Hurst parameter, strictly inside (0, 1).
    pub hurst: f64,
    pub len: usize,
    pub seed: u64,
}

/// Eigenvalues more negative than -tol * max are a genuine embedding
/// failure; anything above is rounding noise and is clamped to zero.
const PSD_TOLERANCE: f64 = 1e-8;

/// Fractional Gaussian noise by circulant embedding of the exact
/// autocovariance gamma(k) = ((k+1)^2H - 2 k^2H + |k-1|^2H) / 2.
///
/// The covariance is embedded in a 2N-circulant whose eigenvalues come from
/// one FFT; complex Gaussians weighted by those eigenvalues transform back
/// into a series with exactly the target covariance (no filter truncation).
/// Deterministic per seed.
pub fn gen_fgn(spec: &FgnSpec) -> Result<Signal> {
    if !(spec.hurst.is_finite() && 0.0 < spec.hurst && spec.hurst < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "hurst parameter must lie in (0, 1), got {}",
            spec.hurst
        )));
    }
    if spec.len < 2 {
        return Err(Error::SignalTooShort {
            len: spec.len,
            min: 2,
        });
    }

    let n = spec.len;
    let m = 2 * n;
    let two_h = 2.0 * spec.hurst;
    let gamma: Vec<f64> = (0..=n)
        .map(|k| {
            let k = k as f64;
            0.5 * ((k + 1.0).powf(two_h) - 2.0 * k.powf(two_h)
                + (k - 1.0).abs().powf(two_h))
        })
        .collect();

    // First row of the symmetric circulant: gamma(0..N), then mirrored.
    let mut row: Vec<Complex<f64>> = Vec::with_capacity(m);
    row.extend(gamma.iter().map(|&g| Complex::new(g, 0.0)));
    row.extend(gamma[1..n].iter().rev().map(|&g| Complex::new(g, 0.0)));
    debug_assert_eq!(row.len(), m);

    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(m);
    fft.process(&mut row);

    let max_eig = row.iter().map(|c| c.re).fold(f64::NEG_INFINITY, f64::max);
    let mut eigenvalues = Vec::with_capacity(m);
    for c in &row {
        if c.re < -PSD_TOLERANCE * max_eig.max(1.0) {
            return Err(Error::EmbeddingNotPsd);
        }
        eigenvalues.push(c.re.max(0.0));
    }

    // Hermitian-symmetric Gaussian spectrum with variance lambda_k.
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut draw = || -> f64 { StandardNormal.sample(&mut rng) };
    let mut spectrum = vec![Complex::new(0.0, 0.0); m];
    spectrum[0] = Complex::new(eigenvalues[0].sqrt() * draw(), 0.0);
    for k in 1..m / 2 {
        let scale = (eigenvalues[k] / 2.0).sqrt();
        let re = scale * draw();
        let im = scale * draw();
        spectrum[k] = Complex::new(re, im);
        spectrum[m - k] = Complex::new(re, -im);
    }
    spectrum[m / 2] = Complex::new(eigenvalues[m / 2].sqrt() * draw(), 0.0);

    fft.process(&mut spectrum);
    let norm = 1.0 / (m as f64).sqrt();
    let samples = spectrum[..n].iter().map(|c| c.re * norm).collect();
    Signal::new(samples, 1.0)
}
