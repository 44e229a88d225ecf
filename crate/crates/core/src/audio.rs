//! WAV ingest and clip preparation.
//!
//! [`load_wav`] decodes integer-PCM RIFF/WAVE files; [`AudioClip`] carries
//! the decoded channels and offers mixdown, peak normalization, and
//! segment extraction before analysis.

mod clip;
mod wav;

pub use clip::AudioClip;
pub use wav::{decode_wav, encode_wav_pcm16, load_wav, write_wav_pcm16};
