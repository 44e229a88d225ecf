//! End-to-end properties of the analysis pipeline that cut across modules:
//! an independent reconstruction of the whole fluctuation surface, affine
//! invariance of the scaling exponents, totality over randomized
//! configurations, and the qualitative separation between synthetic
//! signal families.

mod common;

use mfwidth_core::mfdfa::{fit_hurst, mfdfa, mfdfa_surface, shuffle_surrogate, MfdfaConfig};
use mfwidth_core::synth::{gen_binomial_cascade, gen_white_noise, CascadeAssignment, CascadeSpec};
use mfwidth_core::{Segmentation, Signal};
use proptest::prelude::*;

fn noise_signal(len: usize, seed: u64) -> Signal {
    Signal::new(common::hash_noise(len, seed), 1.0).unwrap()
}

/// Recompute one F_q(s) cell from scratch: cumulative profile, explicit
/// window enumeration, SVD least-squares residuals, and a directly coded
/// power mean. Shares no numerics with the library path.
fn naive_surface_cell(
    samples: &[f64],
    scale: usize,
    q: f64,
    order: usize,
    segmentation: Segmentation,
) -> f64 {
    let mean = samples.iter().sum::<f64>() / samples.len() as f64;
    let mut profile = Vec::with_capacity(samples.len());
    let mut acc = 0.0;
    for &x in samples {
        acc += x - mean;
        profile.push(acc);
    }

    let n = profile.len();
    let n_s = n / scale;
    let mut starts: Vec<usize> = (0..n_s).map(|v| v * scale).collect();
    if segmentation == Segmentation::BothEnds {
        starts.extend((0..n_s).map(|v| n - (v + 1) * scale));
    }

    let variances: Vec<f64> = starts
        .iter()
        .map(|&lo| common::naive_mean_square_residual(&profile, lo, lo + scale, order))
        .collect();
    let m = variances.len() as f64;
    if q == 0.0 {
        (variances.iter().map(|v| v.ln()).sum::<f64>() / (2.0 * m)).exp()
    } else {
        (variances.iter().map(|v| v.powf(q / 2.0)).sum::<f64>() / m).powf(1.0 / q)
    }
}

#[test]
fn surface_matches_independent_reconstruction() {
    let signal = noise_signal(160, 11);
    for segmentation in [Segmentation::BothEnds, Segmentation::ForwardOnly] {
        for order in [1usize, 2] {
            let config = MfdfaConfig {
                scales: vec![8, 10, 16, 27, 40],
                q_grid: vec![-3.0, -1.0, 0.0, 0.5, 2.0, 4.0],
                detrend_order: order,
                segmentation,
                variance_floor: 1e-30,
                fit_window: None,
            };
            let (surface, warnings) = mfdfa_surface(&signal, &config).unwrap();
            assert!(warnings.is_empty());
            for (qi, &q) in config.q_grid.iter().enumerate() {
                for (si, &scale) in config.scales.iter().enumerate() {
                    let expected =
                        naive_surface_cell(&signal.samples, scale, q, order, segmentation);
                    let got = surface.values[qi][si];
                    let rel = (got - expected).abs() / expected;
                    assert!(
                        rel < 1e-10,
                        "{segmentation} order {order} q {q} scale {scale}: {got} vs {expected}"
                    );
                }
            }
        }
    }
}

#[test]
fn sample_rate_does_not_affect_analysis() {
    let values = common::hash_noise(4096, 3);
    let config = MfdfaConfig::default_for_len(values.len()).unwrap();
    let a = mfdfa(&Signal::new(values.clone(), 1.0).unwrap(), &config).unwrap();
    let b = mfdfa(&Signal::new(values, 44_100.0).unwrap(), &config).unwrap();
    assert_eq!(a.surface.values, b.surface.values);
    assert_eq!(a.spectrum, b.spectrum);
}

/// Shuffling a multifractal cascade destroys its temporal correlations, so
/// the estimated spectrum must narrow — while the heavy-tailed value
/// distribution keeps the shuffled width well above zero.
#[test]
fn shuffle_narrows_cascade_spectrum() {
    let signal = gen_binomial_cascade(&CascadeSpec {
        levels: 14,
        multiplier: 0.75,
        assignment: CascadeAssignment::LeftHeavy,
    })
    .unwrap();
    let config = MfdfaConfig::default_for_len(signal.len()).unwrap();
    let original = mfdfa(&signal, &config).unwrap().spectrum.width;

    for seed in 0..4 {
        let shuffled = shuffle_surrogate(&signal, seed);
        let width = mfdfa(&shuffled, &config).unwrap().spectrum.width;
        assert!(
            width < original,
            "seed {seed}: shuffled width {width} >= original {original}"
        );
        assert!(width > 0.3, "seed {seed}: shuffled width {width} collapsed");
    }
}

/// A strongly multifractal cascade and a monofractal noise sit on opposite
/// sides of a wide margin, which is the contrast the width statistic is
/// built to expose.
#[test]
fn cascade_and_noise_widths_are_separated() {
    let cascade = gen_binomial_cascade(&CascadeSpec {
        levels: 14,
        multiplier: 0.75,
        assignment: CascadeAssignment::LeftHeavy,
    })
    .unwrap();
    let config = MfdfaConfig::default_for_len(cascade.len()).unwrap();
    let wide = mfdfa(&cascade, &config).unwrap().spectrum.width;

    let noise = gen_white_noise(1 << 14, 2).unwrap();
    let narrow = mfdfa(&noise, &config).unwrap().spectrum.width;

    assert!(wide > 1.0, "cascade width {wide} unexpectedly narrow");
    assert!(narrow < 0.6, "noise width {narrow} unexpectedly broad");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// h(q) is invariant under x -> a*x + b for any a != 0: the offset
    /// cancels in the mean-centered profile and the gain shifts every
    /// ln F_q(s) by the same constant, leaving all slopes untouched.
    #[test]
    fn hurst_invariant_under_affine_rescaling(
        seed in any::<u64>(),
        len in 128usize..=512,
        gain in prop_oneof![0.25f64..4.0, -4.0f64..-0.25],
        offset in -10.0f64..10.0,
    ) {
        let values = common::hash_noise(len, seed);
        let rescaled: Vec<f64> = values.iter().map(|&x| gain * x + offset).collect();
        let config = MfdfaConfig {
            scales: vec![8, 12, 16, 24, 32],
            q_grid: (-4..=4).map(f64::from).collect(),
            detrend_order: 1,
            segmentation: Segmentation::BothEnds,
            variance_floor: 1e-30,
            fit_window: None,
        };
        let base = fit_hurst(&mfdfa_surface(&Signal::new(values, 1.0).unwrap(), &config)?.0)?;
        let moved = fit_hurst(&mfdfa_surface(&Signal::new(rescaled, 1.0).unwrap(), &config)?.0)?;
        for (a, b) in base.h.iter().zip(&moved.h) {
            prop_assert!((a - b).abs() < 1e-6, "h drifted: {a} vs {b}");
        }
    }

    /// Any structurally valid configuration either yields an analysis whose
    /// every reported number is finite, or a typed error — never NaN and
    /// never a panic.
    #[test]
    fn analysis_is_finite_or_a_typed_error(
        seed in any::<u64>(),
        scale_set in prop::collection::btree_set(6usize..=256, 3..8),
        q_set in prop::collection::btree_set(-40i32..=40, 2..12),
        order in 0usize..=3,
        forward in any::<bool>(),
    ) {
        let signal = noise_signal(1024, seed);
        let config = MfdfaConfig {
            scales: scale_set.into_iter().collect(),
            q_grid: q_set.into_iter().map(|i| f64::from(i) / 4.0).collect(),
            detrend_order: order,
            segmentation: if forward {
                Segmentation::ForwardOnly
            } else {
                Segmentation::BothEnds
            },
            variance_floor: 1e-30,
            fit_window: None,
        };
        // Extreme q grids can legitimately break the concave-fit step; the
        // contract there is a typed error, so only Ok results are inspected.
        if let Ok(analysis) = mfdfa(&signal, &config) {
            prop_assert!(analysis.hurst.h.iter().all(|v| v.is_finite()));
            prop_assert!(analysis.scaling.tau.iter().all(|v| v.is_finite()));
            prop_assert!(analysis.points.alpha.iter().all(|v| v.is_finite()));
            prop_assert!(analysis.points.f_alpha.iter().all(|v| v.is_finite()));
            prop_assert!(analysis.spectrum.width.is_finite());
            prop_assert!(analysis.spectrum.width >= 0.0);
            prop_assert!(analysis.spectrum.alpha0.is_finite());
        }
    }
}
