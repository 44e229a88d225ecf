use crate::error::{Error, Result};
use crate::signal::Signal;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// i.i.d. unit-variance Gaussian samples. Deterministic per seed.
pub fn gen_white_noise(len: usize, seed: u64) -> Result<Signal> {
    if len < 2 {
        return Err(Error::SignalTooShort { len, min: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = (0..len)
        .map(|_| StandardNormal.sample(&mut rng))
        .collect();
    Signal::new(samples, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moments_match_unit_normal() {
        let s = gen_white_noise(1 << 16, 0).unwrap();
        let n = s.len() as f64;
        let mean = s.samples.iter().sum::<f64>() / n;
        let var = s.samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
        assert!(mean.abs() < 0.02, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "variance {var}");
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            gen_white_noise(512, 9).unwrap().samples,
            gen_white_noise(512, 9).unwrap().samples
        );
        assert_ne!(
            gen_white_noise(512, 9).unwrap().samples,
            gen_white_noise(512, 10).unwrap().samples
        );
    }

    #[test]
    fn too_short_rejected() {
        assert!(gen_white_noise(1, 0).is_err());
    }
}
