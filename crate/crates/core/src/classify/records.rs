use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::io;
use std::path::Path;
use std::str::FromStr;

/// How a string instrument is excited. `Unknown` labels width records whose
/// playing mode has not been established; listener responses must use one of
/// the three concrete modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Plucked,
    Struck,
    Bowed,
    Unknown,
}

impl Mode {
    /// Row/column index in a confusion matrix; `None` for `Unknown`.
    pub fn index(self) -> Option<usize> {
        match self {
            Mode::Plucked => Some(0),
            Mode::Struck => Some(1),
            Mode::Bowed => Some(2),
            Mode::Unknown => None,
        }
    }

    pub const CORE: [Mode; 3] = [Mode::Plucked, Mode::Struck, Mode::Bowed];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Plucked => "plucked",
            Mode::Struck => "struck",
            Mode::Bowed => "bowed",
            Mode::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s.trim() {
            "plucked" => Ok(Mode::Plucked),
            "struck" => Ok(Mode::Struck),
            "bowed" => Ok(Mode::Bowed),
            "unknown" => Ok(Mode::Unknown),
            other => Err(Error::UnknownMode(other.to_string())),
        }
    }
}

/// One labeled spectral width: an instrument, its (possibly unknown) playing
/// mode, and the fitted width W.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WidthRecord {
    pub instrument: String,
    pub mode: Mode,
    pub width: f64,
}

/// One listening-test answer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Response {
    pub listener_id: String,
    pub instrument: String,
    pub true_mode: Mode,
    pub perceived_mode: Mode,
}

const WIDTH_HEADER: [&str; 3] = ["instrument", "mode", "width"];
const RESPONSE_HEADER: [&str; 4] = ["listener_id", "instrument", "true_mode", "perceived_mode"];

/// Reads a widths CSV (`instrument,mode,width`). Errors name the 1-based
/// line of the offending row.
pub fn read_width_records(reader: impl io::Read) -> Result<Vec<WidthRecord>> {
    let mut csv = csv::Reader::from_reader(reader);
    check_header(&mut csv, &WIDTH_HEADER)?;
    let mut out = Vec::new();
    for row in csv.records() {
        let (record, line) = unwrap_row(row)?;
        if record.len() != 3 {
            return Err(Error::CsvData {
                line,
                msg: format!("expected 3 fields, found {}", record.len()),
            });
        }
        if record[0].trim().is_empty() {
            return Err(Error::CsvData {
                line,
                msg: "empty instrument name".into(),
            });
        }
        let mode = Mode::from_str(&record[1]).map_err(|e| Error::CsvData {
            line,
            msg: e.to_string(),
        })?;
        let width: f64 = record[2].trim().parse().map_err(|_| Error::CsvData {
            line,
            msg: format!("width '{}' is not a number", &record[2]),
        })?;
        if !width.is_finite() || width <= 0.0 {
            return Err(Error::CsvData {
                line,
                msg: format!("width {width} must be a positive finite number"),
            });
        }
        out.push(WidthRecord {
            instrument: record[0].to_string(),
            mode,
            width,
        });
    }
    Ok(out)
}

pub fn load_width_records(path: impl AsRef<Path>) -> Result<Vec<WidthRecord>> {
    read_width_records(std::fs::File::open(path)?)
}

/// Reads a responses CSV (`listener_id,instrument,true_mode,perceived_mode`).
/// Both mode columns must name one of the three playing modes.
pub fn read_responses(reader: impl io::Read) -> Result<Vec<Response>> {
    let mut csv = csv::Reader::from_reader(reader);
    check_header(&mut csv, &RESPONSE_HEADER)?;
    let mut out = Vec::new();
    for row in csv.records() {
        let (record, line) = unwrap_row(row)?;
        if record.len() != 4 {
            return Err(Error::CsvData {
                line,
                msg: format!("expected 4 fields, found {}", record.len()),
            });
        }
        let parse_mode = |field: &str, name: &str| -> Result<Mode> {
            match Mode::from_str(field) {
                Ok(Mode::Unknown) => Err(Error::CsvData {
                    line,
                    msg: format!("{name} must be plucked, struck, or bowed"),
                }),
                Ok(mode) => Ok(mode),
                Err(e) => Err(Error::CsvData {
                    line,
                    msg: e.to_string(),
                }),
            }
        };
        out.push(Response {
            listener_id: record[0].to_string(),
            instrument: record[1].to_string(),
            true_mode: parse_mode(&record[2], "true_mode")?,
            perceived_mode: parse_mode(&record[3], "perceived_mode")?,
        });
    }
    Ok(out)
}

pub fn load_responses(path: impl AsRef<Path>) -> Result<Vec<Response>> {
    read_responses(std::fs::File::open(path)?)
}

fn check_header<R: io::Read>(csv: &mut csv::Reader<R>, expected: &[&str]) -> Result<()> {
    let headers = csv.headers().map_err(csv_error)?;
    let got: Vec<&str> = headers.iter().map(str::trim).collect();
    if got != expected {
        return Err(Error::CsvData {
            line: 1,
            msg: format!(
                "header must be '{}', found '{}'",
                expected.join(","),
                got.join(",")
            ),
        });
    }
    Ok(())
}

fn unwrap_row(
    row: std::result::Result<csv::StringRecord, csv::Error>,
) -> Result<(csv::StringRecord, u64)> {
    let record = row.map_err(csv_error)?;
    let line = record.position().map_or(0, csv::Position::line);
    Ok((record, line))
}

fn csv_error(e: csv::Error) -> Error {
    Error::CsvData {
        line: e.position().map_or(0, csv::Position::line),
        msg: e.to_string(),
    }
}
