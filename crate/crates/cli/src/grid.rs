//! Grid specifications for the scale and q flags: either `lo:hi:count`
//! (scales log-spaced, q linear) or an explicit comma-separated list, so a
//! resolved grid echoed in an output record can be passed straight back in.

use mfwidth_core::mfdfa::{linear_grid, log_spaced_scales};
use mfwidth_core::Result;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScaleSpec {
    Range { lo: usize, hi: usize, count: usize },
    List(Vec<usize>),
}

impl ScaleSpec {
    pub fn resolve(&self) -> Result<Vec<usize>> {
        match self {
            ScaleSpec::Range { lo, hi, count } => log_spaced_scales(*lo, *hi, *count),
            ScaleSpec::List(scales) => Ok(scales.clone()),
        }
    }
}

impl FromStr for ScaleSpec {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        if text.contains(':') {
            let [lo, hi, count] = three_fields(text)?;
            Ok(ScaleSpec::Range {
                lo: parse_field(lo, "scale lower bound")?,
                hi: parse_field(hi, "scale upper bound")?,
                count: parse_field(count, "scale count")?,
            })
        } else {
            let scales = text
                .split(',')
                .map(|f| parse_field::<usize>(f, "scale"))
                .collect::<std::result::Result<_, _>>()?;
            Ok(ScaleSpec::List(scales))
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum QSpec {
    Range { lo: f64, hi: f64, count: usize },
    List(Vec<f64>),
}

impl QSpec {
    pub fn resolve(&self) -> Result<Vec<f64>> {
        match self {
            QSpec::Range { lo, hi, count } => linear_grid(*lo, *hi, *count),
            QSpec::List(q) => Ok(q.clone()),
        }
    }
}

impl FromStr for QSpec {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        if text.contains(':') {
            let [lo, hi, count] = three_fields(text)?;
            Ok(QSpec::Range {
                lo: parse_field(lo, "q lower bound")?,
                hi: parse_field(hi, "q upper bound")?,
                count: parse_field(count, "q count")?,
            })
        } else {
            let q = text
                .split(',')
                .map(|f| parse_field::<f64>(f, "q value"))
                .collect::<std::result::Result<_, _>>()?;
            Ok(QSpec::List(q))
        }
    }
}

fn three_fields(text: &str) -> std::result::Result<[&str; 3], String> {
    let fields: Vec<&str> = text.split(':').collect();
    match <[&str; 3]>::try_from(fields) {
        Ok(f) => Ok(f),
        Err(_) => Err(format!(
            "grid spec '{text}' must be lo:hi:count or a comma-separated list"
        )),
    }
}

fn parse_field<T: FromStr>(field: &str, what: &str) -> std::result::Result<T, String> {
    field
        .trim()
        .parse()
        .map_err(|_| format!("invalid {what} '{}'", field.trim()))
}
