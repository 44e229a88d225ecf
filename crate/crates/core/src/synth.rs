//! Synthetic reference signals with exactly known scaling behavior, used to
//! validate the analysis pipeline end to end.

mod cascade;
mod fgn;
mod noise;

pub use cascade::{
    cascade_alpha_oracle, cascade_delta_alpha, cascade_hurst_oracle, cascade_tau_oracle,
    gen_binomial_cascade, CascadeAssignment, CascadeSpec,
};
pub use fgn::{gen_fgn, FgnSpec};
pub use noise::gen_white_noise;
