use crate::error::{Error, Result};

/// q-order aggregate of per-segment squared fluctuations:
/// F_q = (mean of (F^2)^(q/2))^(1/q), with the q -> 0 limit
/// F_0 = exp(mean(ln F^2) / 2) (the geometric mean of F).
///
/// Every input must be strictly positive; callers floor values beforehand
/// (see `MfdfaConfig::variance_floor`).
pub fn qth_order_fluctuation(squared: &[f64], q: f64) -> Result<f64> {
    if squared.is_empty() {
        return Err(Error::InvalidConfig(
            "no segments to aggregate".into(),
        ));
    }
    if squared.iter().any(|&v| v <= 0.0) {
        return Err(Error::DegenerateVariance);
    }
    let n = squared.len() as f64;
    if q.abs() < Q_ZERO_EPS {
        let log_sum: f64 = squared.iter().map(|&v| v.ln()).sum();
        Ok((log_sum / (2.0 * n)).exp())
    } else {
        let sum: f64 = squared.iter().map(|&v| v.powf(q / 2.0)).sum();
        Ok((sum / n).powf(1.0 / q))
    }
}

/// |q| below this uses the geometric-mean limit. Far smaller than any grid
/// step in practice, so q = ±1e-4 still exercises the generic branch.
pub const Q_ZERO_EPS: f64 = 1e-9;

/// F_q(s) on a scales x q grid, with per-scale segment counts.
/// `values[qi][si]` is F at `q_grid[qi]`, `scales[si]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FluctuationSurface {
    pub scales: Vec<usize>,
    pub q_grid: Vec<f64>,
    pub values: Vec<Vec<f64>>,
    pub segment_counts: Vec<usize>,
}
