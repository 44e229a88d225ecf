use crate::analyze::open_sink;
use crate::args::{ConfusionArgs, MatrixFormat};
use anyhow::Context;
use mfwidth_core::classify::load_responses;
use mfwidth_core::ConfusionMatrix;
use std::io::Write;

pub fn run(args: ConfusionArgs) -> anyhow::Result<u8> {
    let responses = load_responses(&args.responses)
        .with_context(|| format!("responses file {}", args.responses.display()))?;
    let matrix = ConfusionMatrix::from_responses(&responses)?;

    let mut sink = open_sink(args.out.as_deref())?;
    match args.format {
        MatrixFormat::Text => {
            writeln!(sink, "row percentages:")?;
            writeln!(sink, "{}", matrix.render_percentages())?;
            writeln!(sink, "counts:")?;
            write!(sink, "{}", matrix.render_counts())?;
        }
        MatrixFormat::Json => {
            serde_json::to_writer_pretty(&mut sink, &matrix)?;
            sink.write_all(b"\n")?;
        }
    }
    Ok(0)
}
