use super::scaling::HurstCurve;
use crate::error::{Error, Result};
use serde::Serialize;

/// (alpha, f) pairs of the singularity spectrum, in q order. Kept alongside
/// their q values so downstream fits can break ties deterministically.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumPoints {
    pub q_grid: Vec<f64>,
    pub alpha: Vec<f64>,
    pub f_alpha: Vec<f64>,
}

/// Quadratic summary of the spectrum: f ~ A(alpha - alpha0)^2 +
/// B(alpha - alpha0) + C, with the width W = alpha1 - alpha2 between the
/// fitted zero crossings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularitySpectrum {
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

/// Below this spread of alpha values (and |A|) the spectrum is treated as a
/// point: a monofractal reports width 0 instead of a meaningless fit.
pub const DEGENERATE_SPREAD: f64 = 1e-6;

/// Legendre transform via finite differences of h(q):
/// alpha = h + q h', f = q(alpha - h) + 1, with h' from central differences
/// (one-sided at the grid ends), no smoothing.
pub fn singularity_spectrum(curve: &HurstCurve) -> Result<SpectrumPoints> {
    let n = curve.q_grid.len();
    if n < 2 {
        return Err(Error::InvalidConfig(format!(
            "singularity spectrum needs at least 2 q points, got {n}"
        )));
    }
    let q = &curve.q_grid;
    let h = &curve.h;
    let mut alpha = Vec::with_capacity(n);
    let mut f_alpha = Vec::with_capacity(n);
    for i in 0..n {
        let dh = if i == 0 {
            (h[1] - h[0]) / (q[1] - q[0])
        } else if i == n - 1 {
            (h[n - 1] - h[n - 2]) / (q[n - 1] - q[n - 2])
        } else {
            // Weighted central difference; reduces to (h[i+1]-h[i-1])/(2d)
            // on uniform grids and stays second order on non-uniform ones.
            let d0 = q[i] - q[i - 1];
            let d1 = q[i + 1] - q[i];
            let w0 = d1 / (d0 + d1);
            let w1 = d0 / (d0 + d1);
            w0 * (h[i] - h[i - 1]) / d0 + w1 * (h[i + 1] - h[i]) / d1
        };
        let a = h[i] + q[i] * dh;
        alpha.push(a);
        f_alpha.push(q[i] * (a - h[i]) + 1.0);
    }
    Ok(SpectrumPoints {
        q_grid: q.clone(),
        alpha,
        f_alpha,
    })
}

/// Least-squares quadratic through the (alpha, f) cloud, vertex-shifted to
/// alpha0 = the alpha of maximum observed f (ties resolved toward the q
/// nearest 0). `min_f` restricts the fit to points with f >= min_f.
pub fn fit_quadratic_width(
    points: &SpectrumPoints,
    min_f: Option<f64>,
) -> Result<SingularitySpectrum> {
    let selected: Vec<usize> = (0..points.alpha.len())
        .filter(|&i| min_f.is_none_or(|t| points.f_alpha[i] >= t))
        .collect();
    if selected.len() < 3 {
        return Err(Error::InvalidConfig(format!(
            "quadratic width fit needs at least 3 spectrum points, got {}",
            selected.len()
        )));
    }
    for &i in &selected {
        if !points.alpha[i].is_finite() || !points.f_alpha[i].is_finite() {
            return Err(Error::InvalidConfig(
                "non-finite spectrum point in width fit".into(),
            ));
        }
    }

    let alpha0 = select_alpha0(points, &selected);
    let spread = {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &i in &selected {
            lo = lo.min(points.alpha[i]);
            hi = hi.max(points.alpha[i]);
        }
        hi - lo
    };

    if spread < DEGENERATE_SPREAD {
        // All singularity strengths coincide: a monofractal point spectrum.
        let max_f = selected
            .iter()
            .map(|&i| points.f_alpha[i])
            .fold(f64::NEG_INFINITY, f64::max);
        return Ok(SingularitySpectrum {
            alpha: points.alpha.clone(),
            f_alpha: points.f_alpha.clone(),
            alpha0,
            coeff_a: 0.0,
            coeff_b: 0.0,
            coeff_c: max_f,
            width: 0.0,
            alpha1: alpha0,
            alpha2: alpha0,
        });
    }

    let (a, b, c) = quad_least_squares(points, &selected, alpha0)?;
    if a >= 0.0 {
        return Err(Error::SpectrumNotConcave);
    }
    let disc = b * b - 4.0 * a * c;
    if disc <= 0.0 {
        return Err(Error::SpectrumNotConcave);
    }
    let sq = disc.sqrt();
    let r1 = (-b + sq) / (2.0 * a);
    let r2 = (-b - sq) / (2.0 * a);
    let alpha1 = alpha0 + r1.max(r2);
    let alpha2 = alpha0 + r1.min(r2);

    Ok(SingularitySpectrum {
        alpha: points.alpha.clone(),
        f_alpha: points.f_alpha.clone(),
        alpha0,
        coeff_a: a,
        coeff_b: b,
        coeff_c: c,
        width: alpha1 - alpha2,
        alpha1,
        alpha2,
    })
}

/// alpha at the maximum observed f; exact ties go to the point whose q is
/// closest to 0 (f(alpha0) = 1 holds identically at q = 0).
fn select_alpha0(points: &SpectrumPoints, selected: &[usize]) -> f64 {
    let max_f = selected
        .iter()
        .map(|&i| points.f_alpha[i])
        .fold(f64::NEG_INFINITY, f64::max);
    let mut best = selected[0];
    let mut best_absq = f64::INFINITY;
    for &i in selected {
        if points.f_alpha[i] == max_f && points.q_grid[i].abs() < best_absq {
            best = i;
            best_absq = points.q_grid[i].abs();
        }
    }
    points.alpha[best]
}

fn quad_least_squares(
    points: &SpectrumPoints,
    selected: &[usize],
    alpha0: f64,
) -> Result<(f64, f64, f64)> {
    // Normal equations for f ~ a u^2 + b u + c with u = alpha - alpha0.
    let (mut s0, mut s1, mut s2, mut s3, mut s4) = (0.0_f64, 0.0, 0.0, 0.0, 0.0);
    let (mut t0, mut t1, mut t2) = (0.0_f64, 0.0, 0.0);
    for &i in selected {
        let u = points.alpha[i] - alpha0;
        let f = points.f_alpha[i];
        let u2 = u * u;
        s0 += 1.0;
        s1 += u;
        s2 += u2;
        s3 += u2 * u;
        s4 += u2 * u2;
        t0 += f;
        t1 += f * u;
        t2 += f * u2;
    }
    let m = [[s4, s3, s2], [s3, s2, s1], [s2, s1, s0]];
    let rhs = [t2, t1, t0];
    solve3(m, rhs).ok_or(Error::SpectrumNotConcave)
}

fn solve3(mut m: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<(f64, f64, f64)> {
    // Gaussian elimination with partial pivoting.
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| {
            m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap()
        })?;
        if m[pivot][col].abs() < f64::MIN_POSITIVE {
            return None;
        }
        m.swap(col, pivot);
        b.swap(col, pivot);
        let pivot_row = m[col];
        for row in (col + 1)..3 {
            let factor = m[row][col] / pivot_row[col];
            for (entry, p) in m[row][col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= factor * p;
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = [0.0_f64; 3];
    for i in (0..3).rev() {
        let mut v = b[i];
        for k in (i + 1)..3 {
            v -= m[i][k] * x[k];
        }
        if m[i][i] == 0.0 {
            return None;
        }
        x[i] = v / m[i][i];
    }
    Some((x[0], x[1], x[2]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn points_from(alpha: Vec<f64>, f_alpha: Vec<f64>) -> SpectrumPoints {
        let n = alpha.len();
        // Synthetic q ordering for hand-built clouds: symmetric about 0.
        let q_grid = (0..n)
            .map(|i| i as f64 - (n as f64 - 1.0) / 2.0)
            .collect();
        SpectrumPoints {
            q_grid,
            alpha,
            f_alpha,
        }
    }

    #[test]
    fn exact_parabola_recovered() {
        // f = 1 - (alpha - 0.8)^2 sampled at 11 points: zero crossings at
        // 1.8 and -0.2, width exactly 2.
        let alpha: Vec<f64> = (0..11).map(|i| 0.3 + 0.1 * i as f64).collect();
        let f: Vec<f64> = alpha.iter().map(|a| 1.0 - (a - 0.8) * (a - 0.8)).collect();
        let spec = fit_quadratic_width(&points_from(alpha, f), None).unwrap();
        assert!((spec.width - 2.0).abs() < 1e-9, "width {}", spec.width);
        assert!((spec.alpha1 - 1.8).abs() < 1e-9);
        assert!((spec.alpha2 + 0.2).abs() < 1e-9);
        assert!((spec.coeff_a + 1.0).abs() < 1e-9);
        assert!((spec.coeff_c - 1.0).abs() < 1e-9);
    }

    #[test]
    fn asymmetric_parabola_width() {
        // f = 1 + 0.1 u - u^2 about the true vertex: roots differ by
        // sqrt(0.01 + 4) regardless of where alpha0 lands.
        let center = 0.9;
        let alpha: Vec<f64> = (0..13).map(|i| center + 0.05 * (i as f64 - 6.0)).collect();
        let f: Vec<f64> = alpha
            .iter()
            .map(|a| {
                let u = a - center;
                1.0 + 0.1 * u - u * u
            })
            .collect();
        let spec = fit_quadratic_width(&points_from(alpha, f), None).unwrap();
        assert!(
            (spec.width - 4.01_f64.sqrt()).abs() < 1e-9,
            "width {}",
            spec.width
        );
    }

    #[test]
    fn collapsed_cloud_reports_zero_width() {
        let alpha = vec![0.5; 9];
        let f: Vec<f64> = (0..9).map(|i| 1.0 - 0.01 * (i as f64 - 4.0).abs()).collect();
        let spec = fit_quadratic_width(&points_from(alpha, f), None).unwrap();
        assert_eq!(spec.width, 0.0);
        assert_eq!(spec.alpha1, spec.alpha2);
        assert_eq!(spec.coeff_a, 0.0);
    }

    #[test]
    fn convex_cloud_rejected() {
        let alpha: Vec<f64> = (0..9).map(|i| 0.1 * i as f64).collect();
        let f: Vec<f64> = alpha.iter().map(|a| (a - 0.4) * (a - 0.4)).collect();
        assert!(matches!(
            fit_quadratic_width(&points_from(alpha, f), None),
            Err(Error::SpectrumNotConcave)
        ));
    }

    #[test]
    fn fit_window_restricts_points() {
        // Outliers below the window must not drag the fit.
        let mut alpha: Vec<f64> = (0..11).map(|i| 0.3 + 0.1 * i as f64).collect();
        let mut f: Vec<f64> = alpha.iter().map(|a| 1.0 - (a - 0.8) * (a - 0.8)).collect();
        alpha.push(3.0);
        f.push(-20.0);
        let spec = fit_quadratic_width(&points_from(alpha, f), Some(0.0)).unwrap();
        assert!((spec.width - 2.0).abs() < 1e-9);
    }

    #[test]
    fn too_few_points_rejected() {
        let p = points_from(vec![0.4, 0.5], vec![0.9, 1.0]);
        assert!(fit_quadratic_width(&p, None).is_err());
        let p = points_from(vec![0.4, 0.5, 0.6, 0.7], vec![0.2, 1.0, 0.2, 0.1]);
        assert!(fit_quadratic_width(&p, Some(0.5)).is_err());
    }

    #[test]
    fn alpha0_tie_prefers_q_nearest_zero() {
        // Two points share the maximum f; the one at q closest to 0 wins.
        let points = SpectrumPoints {
            q_grid: vec![-2.0, -1.0, 0.5, 2.0],
            alpha: vec![0.9, 0.7, 0.5, 0.3],
            f_alpha: vec![0.8, 1.0, 1.0, 0.8],
        };
        assert_eq!(select_alpha0(&points, &[0, 1, 2, 3]), 0.5);
    }

    #[test]
    fn legendre_of_linear_h_is_point_spectrum() {
        // Constant h: alpha = h everywhere, f = 1 everywhere.
        let curve = HurstCurve {
            q_grid: (-4..=4).map(|i| i as f64).collect(),
            h: vec![0.62; 9],
            intercept: vec![0.0; 9],
            r_squared: vec![1.0; 9],
        };
        let pts = singularity_spectrum(&curve).unwrap();
        for (a, f) in pts.alpha.iter().zip(&pts.f_alpha) {
            assert!((a - 0.62).abs() < 1e-15);
            assert!((f - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn single_q_point_rejected() {
        let curve = HurstCurve {
            q_grid: vec![2.0],
            h: vec![0.5],
            intercept: vec![0.0],
            r_squared: vec![1.0],
        };
        assert!(singularity_spectrum(&curve).is_err());
    }
}
