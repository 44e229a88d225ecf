use crate::error::{Error, Result};
use crate::signal::Signal;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How the multiplier pair (a, 1-a) is handed to the two children at each
/// split. Either way the multiset of leaf masses is identical; only the
/// arrangement differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CascadeAssignment {
    /// Factor a always goes left: the canonical self-similar arrangement.
    LeftHeavy,
    /// A fair coin per split decides which child gets a. Deterministic per
    /// seed.
    SeededRandom { seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CascadeSpec {
    /// Number of halvings; the series has 2^levels samples.
    pub levels: u32,
    /// Mass fraction a in (0.5, 1) kept by one child per split.
    pub multiplier: f64,
    pub assignment: CascadeAssignment,
}

const MAX_LEVELS: u32 = 30;

/// Binomial multiplicative cascade: unit mass split k times, each split
/// sending fraction a to one child and 1-a to the other. Total mass stays
/// (a + (1-a))^k = 1 up to rounding.
pub fn gen_binomial_cascade(spec: &CascadeSpec) -> Result<Signal> {
    if spec.levels < 1 {
        return Err(Error::InvalidConfig("cascade needs at least 1 level".into()));
    }
    if spec.levels > MAX_LEVELS {
        return Err(Error::InvalidConfig(format!(
            "cascade of {} levels exceeds maximum {MAX_LEVELS} (2^{} samples)",
            spec.levels, spec.levels
        )));
    }
    let a = spec.multiplier;
    if !(a.is_finite() && 0.5 < a && a < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "cascade multiplier must lie in (0.5, 1), got {a}"
        )));
    }

    let mut rng = match spec.assignment {
        CascadeAssignment::LeftHeavy => None,
        CascadeAssignment::SeededRandom { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut mass = vec![1.0_f64];
    for _ in 0..spec.levels {
        let mut next = Vec::with_capacity(mass.len() * 2);
        for &parent in &mass {
            let a_left = match rng.as_mut() {
                None => true,
                Some(r) => r.random::<bool>(),
            };
            if a_left {
                next.push(parent * a);
                next.push(parent * (1.0 - a));
            } else {
                next.push(parent * (1.0 - a));
                next.push(parent * a);
            }
        }
        mass = next;
    }
    Signal::new(mass, 1.0)
}

/// Analytic generalized Hurst exponent of the binomial cascade:
/// h(q) = 1/q - log2(a^q + (1-a)^q) / q, with the q -> 0 limit
/// -log2(a(1-a)) / 2. Valid for a in (0.5, 1).
pub fn cascade_hurst_oracle(a: f64, q: f64) -> f64 {
    debug_assert!(0.5 < a && a < 1.0);
    if q.abs() < 1e-9 {
        -(a * (1.0 - a)).log2() / 2.0
    } else {
        (1.0 - (a.powf(q) + (1.0 - a).powf(q)).log2()) / q
    }
}

/// Analytic mass exponent tau(q) = q h(q) - 1 = -log2(a^q + (1-a)^q).
pub fn cascade_tau_oracle(a: f64, q: f64) -> f64 {
    debug_assert!(0.5 < a && a < 1.0);
    -(a.powf(q) + (1.0 - a).powf(q)).log2()
}

/// Analytic singularity strength alpha(q) = d tau / d q
/// = -(a^q ln a + (1-a)^q ln(1-a)) / ((a^q + (1-a)^q) ln 2).
pub fn cascade_alpha_oracle(a: f64, q: f64) -> f64 {
    debug_assert!(0.5 < a && a < 1.0);
    let b = 1.0 - a;
    let (aq, bq) = (a.powf(q), b.powf(q));
    -(aq * a.ln() + bq * b.ln()) / ((aq + bq) * std::f64::consts::LN_2)
}

/// Full analytic spectrum width: alpha(-inf) - alpha(+inf) = log2(a/(1-a)).
pub fn cascade_delta_alpha(a: f64) -> f64 {
    debug_assert!(0.5 < a && a < 1.0);
    (a / (1.0 - a)).log2()
}
