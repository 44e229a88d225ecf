use crate::error::{Error, Result};

/// Cumulative sum of the mean-removed signal. Turns noise-like data into a
/// random-walk-like series whose local fluctuations carry the scaling.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub values: Vec<f64>,
}

/// Y(i) = sum_{k<=i} (x_k - mean(x)). The terminal value is zero up to
/// rounding (|Y(N-1)| stays within ~1e-9 * N for unit-scale data).
pub fn compute_profile(samples: &[f64]) -> Result<Profile> {
    if samples.len() < 2 {
        return Err(Error::SignalTooShort {
            len: samples.len(),
            min: 2,
        });
    }
    if let Some(index) = samples.iter().position(|s| !s.is_finite()) {
        return Err(Error::NonFiniteSample { index });
    }
    let mean = samples.iter().sum::<f64>() / samples.len() as f64;
    let mut acc = 0.0;
    let values = samples
        .iter()
        .map(|&x| {
            acc += x - mean;
            acc
        })
        .collect();
    Ok(Profile { values })
}
