use crate::analyze::open_sink;
use crate::args::{ClusterArgs, ReportFormat};
use crate::UsageError;
use anyhow::Context;
use mfwidth_core::classify::{cluster_widths, group_report, load_width_records};
use mfwidth_core::{GroupRanges, GroupReport};
use std::io::Write;

pub fn run(args: ClusterArgs) -> anyhow::Result<u8> {
    if args.k == 0 {
        return Err(UsageError("cluster count k must be >= 1".into()).into());
    }
    let ranges = match &args.ranges {
        Some(path) => GroupRanges::load(path)
            .with_context(|| format!("range file {}", path.display()))?,
        None => GroupRanges::builtin(),
    };

    let records = load_width_records(&args.widths)
        .with_context(|| format!("widths file {}", args.widths.display()))?;
    let clustering = cluster_widths(&records, args.k)?;
    let report = group_report(&records, &clustering, Some(&ranges))?;

    let mut sink = open_sink(args.out.as_deref())?;
    match args.format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut sink, &report)?;
            sink.write_all(b"\n")?;
        }
        ReportFormat::Csv => write_report_csv(sink, &report)?,
    }

    if let Some(plot) = &args.plot_out {
        let sink = open_sink(Some(plot))?;
        write_plot_csv(sink, &report)?;
    }
    Ok(0)
}

/// Spreadsheet view: one row per record with its group and the strongest
/// mode suggestion; the full ranked candidate list lives in the JSON form.
fn write_report_csv(sink: Box<dyn Write>, report: &GroupReport) -> anyhow::Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record([
        "instrument",
        "mode",
        "width",
        "group",
        "suggested_group",
        "suggested_mode",
        "suggested_distance",
        "out_of_range",
    ])?;
    for record in &report.records {
        let top = record.candidates.first();
        writer.write_record([
            record.instrument.clone(),
            record.mode.to_string(),
            record.width.to_string(),
            record.group.to_string(),
            top.map(|c| c.group_id.clone()).unwrap_or_default(),
            top.map(|c| c.mode.to_string()).unwrap_or_default(),
            top.map(|c| c.distance.to_string()).unwrap_or_default(),
            record.out_of_range.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

/// Width-versus-group scatter data, one row per record in input order.
fn write_plot_csv(sink: Box<dyn Write>, report: &GroupReport) -> anyhow::Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(["instrument", "width", "group"])?;
    for record in &report.records {
        writer.write_record([
            record.instrument.clone(),
            record.width.to_string(),
            record.group.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}
