use super::fluctuation::FluctuationSurface;
use crate::error::{Error, Result};

/// Generalized Hurst exponents: per q, the slope of ln F_q(s) vs ln s,
/// with the regression intercept and coefficient of determination.
#[derive(Debug, Clone, PartialEq)]
pub struct HurstCurve {
    pub q_grid: Vec<f64>,
    pub h: Vec<f64>,
    pub intercept: Vec<f64>,
    pub r_squared: Vec<f64>,
}

/// Mass scaling exponents tau(q) = q * h(q) - 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingExponents {
    pub q_grid: Vec<f64>,
    pub tau: Vec<f64>,
}

/// Ordinary least squares of ln F_q(s) on ln s, one fit per q row.
pub fn fit_hurst(surface: &FluctuationSurface) -> Result<HurstCurve> {
    let m = surface.scales.len();
    if m < 3 {
        return Err(Error::InvalidConfig(format!(
            "hurst fit needs at least 3 scales, got {m}"
        )));
    }
    let log_s: Vec<f64> = surface.scales.iter().map(|&s| (s as f64).ln()).collect();
    let mean_x = log_s.iter().sum::<f64>() / m as f64;
    let sxx: f64 = log_s.iter().map(|x| (x - mean_x) * (x - mean_x)).sum();

    let mut h = Vec::with_capacity(surface.q_grid.len());
    let mut intercept = Vec::with_capacity(surface.q_grid.len());
    let mut r_squared = Vec::with_capacity(surface.q_grid.len());

    for (qi, &q) in surface.q_grid.iter().enumerate() {
        let row = &surface.values[qi];
        let mut log_f = Vec::with_capacity(m);
        for (si, &f) in row.iter().enumerate() {
            if !f.is_finite() || f <= 0.0 {
                return Err(Error::NonPositiveFluctuation {
                    q,
                    scale: surface.scales[si],
                });
            }
            log_f.push(f.ln());
        }
        let mean_y = log_f.iter().sum::<f64>() / m as f64;
        let sxy: f64 = log_s
            .iter()
            .zip(&log_f)
            .map(|(x, y)| (x - mean_x) * (y - mean_y))
            .sum();
        let slope = sxy / sxx;
        let icept = mean_y - slope * mean_x;

        let ss_tot: f64 = log_f.iter().map(|y| (y - mean_y) * (y - mean_y)).sum();
        let ss_res: f64 = log_s
            .iter()
            .zip(&log_f)
            .map(|(x, y)| {
                let r = y - (slope * x + icept);
                r * r
            })
            .sum();
        // A flat row is fit perfectly by its own mean.
        let r2 = if ss_tot > 0.0 {
            (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
        } else {
            1.0
        };
        h.push(slope);
        intercept.push(icept);
        r_squared.push(r2);
    }

    Ok(HurstCurve {
        q_grid: surface.q_grid.clone(),
        h,
        intercept,
        r_squared,
    })
}

pub fn tau_from_hurst(curve: &HurstCurve) -> ScalingExponents {
    ScalingExponents {
        q_grid: curve.q_grid.clone(),
        tau: curve
            .q_grid
            .iter()
            .zip(&curve.h)
            .map(|(&q, &h)| q * h - 1.0)
            .collect(),
    }
}
