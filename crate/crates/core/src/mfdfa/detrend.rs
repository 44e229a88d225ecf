use crate::error::{Error, Result};
use std::ops::Range;

pub const MAX_DETREND_ORDER: usize = 3;

/// Least-squares polynomial detrender for fixed-length segments.
///
/// The abscissa is centered at the segment midpoint, which makes the Gram
/// matrix well conditioned even at scales of several hundred thousand
/// samples and lets one Cholesky factorization serve every segment of a
/// scale (the matrix depends only on scale and order, not on the data).
#[derive(Debug, Clone)]
pub struct Detrender {
    scale: usize,
    order: usize,
    /// Lower-triangular Cholesky factor of the Gram matrix, row-major.
    chol: [[f64; 4]; 4],
}

impl Detrender {
    pub fn new(scale: usize, order: usize) -> Result<Self> {
        if order > MAX_DETREND_ORDER {
            return Err(Error::InvalidConfig(format!(
                "detrend order {order} exceeds maximum {MAX_DETREND_ORDER}"
            )));
        }
        if scale < order + 2 {
            return Err(Error::InvalidConfig(format!(
                "scale {scale} too small for detrend order {order} (need >= {})",
                order + 2
            )));
        }
        let dim = order + 1;
        // Power sums of the centered abscissa; odd sums vanish by symmetry.
        let mut power_sums = [0.0_f64; 7];
        let mid = (scale as f64 - 1.0) / 2.0;
        for i in 0..scale {
            let t = i as f64 - mid;
            let mut p = 1.0;
            for s in power_sums.iter_mut().take(2 * order + 1) {
                *s += p;
                p *= t;
            }
        }
        let mut gram = [[0.0_f64; 4]; 4];
        for (r, row) in gram.iter_mut().enumerate().take(dim) {
            row[..dim].copy_from_slice(&power_sums[r..r + dim]);
        }
        let chol = cholesky(&gram, dim)?;
        Ok(Self { scale, order, chol })
    }

    pub fn scale(&self) -> usize {
        self.scale
    }

    /// Mean squared residual of `segment` about its fitted polynomial:
    /// F^2 = (1/s) * sum_i (y_i - p(t_i))^2. `segment` must have exactly
    /// `scale` samples.
    pub fn mean_square_residual(&self, segment: &[f64]) -> f64 {
        debug_assert_eq!(segment.len(), self.scale);
        let dim = self.order + 1;
        let mid = (self.scale as f64 - 1.0) / 2.0;

        let mut moments = [0.0_f64; 4];
        for (i, &y) in segment.iter().enumerate() {
            let t = i as f64 - mid;
            let mut p = 1.0;
            for m in moments.iter_mut().take(dim) {
                *m += y * p;
                p *= t;
            }
        }
        let coeffs = solve_chol(&self.chol, &moments, dim);

        let mut rss = 0.0;
        for (i, &y) in segment.iter().enumerate() {
            let t = i as f64 - mid;
            // Horner evaluation, highest coefficient first.
            let mut fit = coeffs[dim - 1];
            for d in (0..dim - 1).rev() {
                fit = fit * t + coeffs[d];
            }
            let r = y - fit;
            rss += r * r;
        }
        rss / self.scale as f64
    }
}

/// F^2 for one segment of a profile. Convenience wrapper over [`Detrender`]
/// for callers working with a single window.
pub fn local_fluctuation(profile: &[f64], range: Range<usize>, order: usize) -> Result<f64> {
    if range.start >= range.end || range.end > profile.len() {
        return Err(Error::InvalidConfig(format!(
            "segment {}..{} out of bounds for profile of {} values",
            range.start,
            range.end,
            profile.len()
        )));
    }
    let detrender = Detrender::new(range.end - range.start, order)?;
    Ok(detrender.mean_square_residual(&profile[range]))
}

fn cholesky(gram: &[[f64; 4]; 4], dim: usize) -> Result<[[f64; 4]; 4]> {
    let mut l = [[0.0_f64; 4]; 4];
    for j in 0..dim {
        let mut d = gram[j][j];
        for &v in &l[j][..j] {
            d -= v * v;
        }
        if d <= 0.0 {
            return Err(Error::InvalidConfig(
                "detrend basis is numerically singular".into(),
            ));
        }
        l[j][j] = d.sqrt();
        for i in (j + 1)..dim {
            let mut v = gram[i][j];
            for (lik, ljk) in l[i][..j].iter().zip(&l[j][..j]) {
                v -= lik * ljk;
            }
            l[i][j] = v / l[j][j];
        }
    }
    Ok(l)
}

fn solve_chol(l: &[[f64; 4]; 4], b: &[f64; 4], dim: usize) -> [f64; 4] {
    let mut y = [0.0_f64; 4];
    for i in 0..dim {
        let mut v = b[i];
        for k in 0..i {
            v -= l[i][k] * y[k];
        }
        y[i] = v / l[i][i];
    }
    let mut x = [0.0_f64; 4];
    for i in (0..dim).rev() {
        let mut v = y[i];
        for k in (i + 1)..dim {
            v -= l[k][i] * x[k];
        }
        x[i] = v / l[i][i];
    }
    x
}
