//! Independent oracles shared by the integration tests: a naive
//! least-squares detrender, a brute-force optimal 1-D partitioner, an
//! independently-fitted quadratic width, and the bundled instrument-width
//! fixture. These deliberately avoid the library's own numerics so that
//! agreement is evidence, not tautology.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};

/// Mean-square residual of an order-`order` polynomial fit over
/// `profile[lo..hi]`, via SVD least squares on the raw Vandermonde basis —
/// a different abscissa and solver than the library's.
pub fn naive_mean_square_residual(profile: &[f64], lo: usize, hi: usize, order: usize) -> f64 {
    let s = hi - lo;
    let a = DMatrix::from_fn(s, order + 1, |r, c| (r as f64).powi(c as i32));
    let y = DVector::from_fn(s, |r, _| profile[lo + r]);
    let svd = a.clone().svd(true, true);
    let coeffs = svd.solve(&y, 1e-13).expect("SVD solve");
    let residual = &a * coeffs - y;
    residual.norm_squared() / s as f64
}

/// Optimal SSE over all contiguous partitions of `sorted` into `k` runs,
/// by exhaustive enumeration of the C(n-1, k-1) cut placements.
pub struct OptimalPartition {
    pub sse: f64,
    /// k+1 boundary indices into the sorted slice.
    pub bounds: Vec<usize>,
}

pub fn optimal_contiguous_partition(sorted: &[f64], k: usize) -> OptimalPartition {
    assert!(k >= 1 && k <= sorted.len());
    let n = sorted.len();
    // Prefix sums make each run's SSE O(1).
    let mut sum = vec![0.0; n + 1];
    let mut sum2 = vec![0.0; n + 1];
    for (i, &v) in sorted.iter().enumerate() {
        sum[i + 1] = sum[i] + v;
        sum2[i + 1] = sum2[i] + v * v;
    }
    let run_sse = |lo: usize, hi: usize| -> f64 {
        let m = (hi - lo) as f64;
        let s = sum[hi] - sum[lo];
        (sum2[hi] - sum2[lo] - s * s / m).max(0.0)
    };

    let mut best = OptimalPartition {
        sse: f64::INFINITY,
        bounds: Vec::new(),
    };
    let mut cuts = vec![0usize; k + 1];
    cuts[k] = n;
    fn recurse(
        sorted_len: usize,
        k: usize,
        level: usize,
        cuts: &mut Vec<usize>,
        run_sse: &dyn Fn(usize, usize) -> f64,
        best: &mut OptimalPartition,
    ) {
        if level == k {
            let sse: f64 = (0..k).map(|i| run_sse(cuts[i], cuts[i + 1])).sum();
            if sse < best.sse {
                best.sse = sse;
                best.bounds = cuts.clone();
            }
            return;
        }
        let lo = cuts[level - 1] + 1;
        let hi = sorted_len - (k - level) + 1;
        for cut in lo..hi {
            cuts[level] = cut;
            recurse(sorted_len, k, level + 1, cuts, run_sse, best);
        }
    }
    recurse(n, k, 1, &mut cuts, &run_sse, &mut best);
    best
}

/// Fits f ≈ A·u² + B·u + C (u = α − α₀, α₀ at the max f) by SVD least
/// squares and returns the root separation √(B² − 4AC)/|A| — an
/// independent route to the spectrum width.
pub fn naive_quadratic_width(alpha: &[f64], f: &[f64]) -> Option<f64> {
    assert_eq!(alpha.len(), f.len());
    let peak = f
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())?
        .0;
    let alpha0 = alpha[peak];
    let a_mat = DMatrix::from_fn(alpha.len(), 3, |r, c| (alpha[r] - alpha0).powi(2 - c as i32));
    let y = DVector::from_column_slice(f);
    let coeffs = a_mat.svd(true, true).solve(&y, 1e-13).ok()?;
    let (a, b, c) = (coeffs[0], coeffs[1], coeffs[2]);
    if a >= 0.0 {
        return None;
    }
    let disc = b * b - 4.0 * a * c;
    (disc > 0.0).then(|| disc.sqrt() / a.abs())
}

/// α(q) = dτ/dq by central differences (one-sided at the ends) and
/// f = q·α − τ, for turning an exact τ(q) table into spectrum points.
pub fn numeric_legendre(q: &[f64], tau: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = q.len();
    assert!(n >= 2 && tau.len() == n);
    let mut alpha = vec![0.0; n];
    for i in 0..n {
        alpha[i] = if i == 0 {
            (tau[1] - tau[0]) / (q[1] - q[0])
        } else if i == n - 1 {
            (tau[n - 1] - tau[n - 2]) / (q[n - 1] - q[n - 2])
        } else {
            (tau[i + 1] - tau[i - 1]) / (q[i + 1] - q[i - 1])
        };
    }
    let f = (0..n).map(|i| q[i] * alpha[i] - tau[i]).collect();
    (alpha, f)
}

/// 26 string instruments with measured spectral widths and their expected
/// group labels (1-5), the clustering fixture used across the tests.
pub const INSTRUMENT_WIDTHS: [(&str, usize, &str, f64); 26] = [
    ("Banjo", 1, "plucked", 0.672),
    ("Cittern", 1, "plucked", 0.630),
    ("Dotara", 1, "plucked", 0.643),
    ("Ektara", 1, "plucked", 0.723),
    ("Harp", 1, "plucked", 0.686),
    ("Hawaian Guitar", 1, "plucked", 0.632),
    ("Kora", 1, "plucked", 0.626),
    ("Mohan Veena", 1, "plucked", 0.717),
    ("Spanish Guitar", 1, "plucked", 0.749),
    ("English Guitar", 1, "plucked", 0.716),
    ("Portuguese Guitar", 1, "plucked", 0.584),
    ("Harpichord", 1, "plucked", 0.675),
    ("Sarod", 1, "plucked", 0.702),
    ("Murchang", 1, "plucked", 0.715),
    ("Sitar", 2, "plucked", 0.428),
    ("Veena", 2, "plucked", 0.483),
    ("Rudra Veena", 2, "plucked", 0.387),
    ("Surbahar", 2, "plucked", 0.495),
    ("Tanpura", 2, "plucked", 0.506),
    ("Mandolin", 3, "plucked", 0.824),
    ("Mandriola", 3, "plucked", 0.812),
    ("Esraj", 4, "bowed", 0.803),
    ("Rawanhata", 4, "bowed", 0.896),
    ("Sarengi", 4, "bowed", 0.912),
    ("Piano", 5, "struck", 0.531),
    ("Santoor", 5, "struck", 0.515),
];

pub fn fixture_records() -> Vec<mfwidth_core::WidthRecord> {
    use std::str::FromStr;
    INSTRUMENT_WIDTHS
        .iter()
        .map(|&(name, _, mode, width)| mfwidth_core::WidthRecord {
            instrument: name.to_string(),
            mode: mfwidth_core::Mode::from_str(mode).unwrap(),
            width,
        })
        .collect()
}

/// Deterministic hash noise, seedable, dependency-free: a different source
/// than the library's generators.
pub fn hash_noise(n: usize, seed: u64) -> Vec<f64> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1);
    (0..n)
        .map(|_| {
            // splitmix64 step
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^= z >> 31;
            let u = (z >> 11) as f64 / (1u64 << 53) as f64;
            u - 0.5
        })
        .collect()
}
