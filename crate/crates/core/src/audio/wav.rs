use super::clip::AudioClip;
use crate::error::{Error, Result};
use std::path::Path;

/// Reads a RIFF/WAVE file holding integer PCM (8/16/24/32-bit, any channel
/// count, any rate). Samples are scaled to [-1, 1) by the type's full
/// negative range (16-bit divides by 32768; 8-bit is unsigned and offset by
/// 128). Compressed or float streams are rejected as unsupported.
pub fn load_wav(path: impl AsRef<Path>) -> Result<AudioClip> {
    let bytes = std::fs::read(&path)?;
    let mut clip = decode_wav(&bytes)?;
    clip.source_path = path.as_ref().display().to_string();
    Ok(clip)
}

pub fn decode_wav(bytes: &[u8]) -> Result<AudioClip> {
    if bytes.len() < 12 || &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
        return Err(Error::MalformedContainer(
            "missing RIFF/WAVE header".into(),
        ));
    }

    let mut fmt: Option<Format> = None;
    let mut data: Option<&[u8]> = None;
    let mut offset = 12;
    while offset < bytes.len() {
        if offset + 8 > bytes.len() {
            return Err(Error::MalformedContainer("truncated chunk header".into()));
        }
        let id = &bytes[offset..offset + 4];
        let size = u32::from_le_bytes(bytes[offset + 4..offset + 8].try_into().unwrap()) as usize;
        let body_start = offset + 8;
        let body_end = body_start
            .checked_add(size)
            .ok_or_else(|| Error::MalformedContainer("chunk size overflow".into()))?;
        if body_end > bytes.len() {
            return Err(Error::MalformedContainer(format!(
                "chunk '{}' extends past end of file",
                String::from_utf8_lossy(id)
            )));
        }
        let body = &bytes[body_start..body_end];
        match id {
            b"fmt " => fmt = Some(parse_fmt(body)?),
            b"data" => data = Some(body),
            _ => {}
        }
        // Chunks are word-aligned; odd sizes carry one pad byte.
        offset = body_end + (size & 1);
    }

    let fmt = fmt.ok_or_else(|| Error::MalformedContainer("missing fmt chunk".into()))?;
    let data = data.ok_or_else(|| Error::MalformedContainer("missing data chunk".into()))?;
    decode_pcm(&fmt, data)
}

struct Format {
    channels: usize,
    sample_rate: u32,
    bits: u16,
}

const WAVE_FORMAT_PCM: u16 = 0x0001;
const WAVE_FORMAT_IEEE_FLOAT: u16 = 0x0003;
const WAVE_FORMAT_EXTENSIBLE: u16 = 0xFFFE;

fn parse_fmt(body: &[u8]) -> Result<Format> {
    if body.len() < 16 {
        return Err(Error::MalformedContainer("fmt chunk too short".into()));
    }
    let mut tag = u16::from_le_bytes([body[0], body[1]]);
    let channels = u16::from_le_bytes([body[2], body[3]]) as usize;
    let sample_rate = u32::from_le_bytes(body[4..8].try_into().unwrap());
    let bits = u16::from_le_bytes([body[14], body[15]]);

    if tag == WAVE_FORMAT_EXTENSIBLE {
        // The real format code is the first word of the subformat GUID.
        if body.len() < 40 {
            return Err(Error::MalformedContainer(
                "extensible fmt chunk too short".into(),
            ));
        }
        tag = u16::from_le_bytes([body[24], body[25]]);
    }
    match tag {
        WAVE_FORMAT_PCM => {}
        WAVE_FORMAT_IEEE_FLOAT => {
            return Err(Error::UnsupportedEncoding(
                "IEEE float samples (integer PCM only)".into(),
            ))
        }
        other => {
            return Err(Error::UnsupportedEncoding(format!(
                "format tag {other:#06x} (integer PCM only)"
            )))
        }
    }
    if channels == 0 {
        return Err(Error::MalformedContainer("zero channels".into()));
    }
    if sample_rate == 0 {
        return Err(Error::MalformedContainer("zero sample rate".into()));
    }
    if !matches!(bits, 8 | 16 | 24 | 32) {
        return Err(Error::UnsupportedEncoding(format!(
            "{bits}-bit samples (8/16/24/32-bit integer PCM only)"
        )));
    }
    Ok(Format {
        channels,
        sample_rate,
        bits,
    })
}

fn decode_pcm(fmt: &Format, data: &[u8]) -> Result<AudioClip> {
    let bytes_per_sample = (fmt.bits / 8) as usize;
    let block = bytes_per_sample * fmt.channels;
    if !data.len().is_multiple_of(block) {
        return Err(Error::MalformedContainer(format!(
            "data chunk of {} bytes is not a whole number of {}-byte frames",
            data.len(),
            block
        )));
    }
    let frames = data.len() / block;
    let mut channels = vec![Vec::with_capacity(frames); fmt.channels];
    for frame in 0..frames {
        for (ch, channel) in channels.iter_mut().enumerate() {
            let at = frame * block + ch * bytes_per_sample;
            let v = match fmt.bits {
                8 => (f64::from(data[at]) - 128.0) / 128.0,
                16 => f64::from(i16::from_le_bytes([data[at], data[at + 1]])) / 32768.0,
                24 => {
                    let raw = (u32::from(data[at]))
                        | (u32::from(data[at + 1]) << 8)
                        | (u32::from(data[at + 2]) << 16);
                    // Sign-extend 24 to 32 bits.
                    let v = ((raw << 8) as i32) >> 8;
                    f64::from(v) / 8_388_608.0
                }
                32 => {
                    let v = i32::from_le_bytes([
                        data[at],
                        data[at + 1],
                        data[at + 2],
                        data[at + 3],
                    ]);
                    f64::from(v) / 2_147_483_648.0
                }
                _ => unreachable!("bits validated in parse_fmt"),
            };
            channel.push(v);
        }
    }
    Ok(AudioClip {
        channels,
        sample_rate: fmt.sample_rate,
        source_path: String::new(),
    })
}

/// Writes a clip as 16-bit integer PCM. Samples are scaled by 32768,
/// rounded, and clamped; values decoded from 16-bit PCM round-trip
/// bit-exactly.
pub fn write_wav_pcm16(path: impl AsRef<Path>, clip: &AudioClip) -> Result<()> {
    std::fs::write(path, encode_wav_pcm16(clip)?)?;
    Ok(())
}

pub fn encode_wav_pcm16(clip: &AudioClip) -> Result<Vec<u8>> {
    let channels = clip.channels.len();
    if channels == 0 {
        return Err(Error::MalformedContainer("clip has no channels".into()));
    }
    let frames = clip.channels[0].len();
    if clip.channels.iter().any(|c| c.len() != frames) {
        return Err(Error::MalformedContainer(
            "channels differ in length".into(),
        ));
    }
    let block = 2 * channels;
    let data_len = frames * block;
    let mut out = Vec::with_capacity(44 + data_len);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_len as u32).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&WAVE_FORMAT_PCM.to_le_bytes());
    out.extend_from_slice(&(channels as u16).to_le_bytes());
    out.extend_from_slice(&clip.sample_rate.to_le_bytes());
    out.extend_from_slice(&(clip.sample_rate * block as u32).to_le_bytes());
    out.extend_from_slice(&(block as u16).to_le_bytes());
    out.extend_from_slice(&16u16.to_le_bytes());
    out.extend_from_slice(b"data");
    out.extend_from_slice(&(data_len as u32).to_le_bytes());
    for frame in 0..frames {
        for channel in &clip.channels {
            let v = (channel[frame] * 32768.0).round().clamp(-32768.0, 32767.0) as i16;
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    Ok(out)
}
