use super::records::{Mode, Response};
use crate::error::{Error, Result};
use serde::Serialize;

/// 3×3 listener-confusion tally: rows are the true playing mode, columns
/// the perceived one, both in the order plucked, struck, bowed.
/// Percentages are row-normalized; a row with no responses has no defined
/// percentages and is flagged instead.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfusionMatrix {
    pub counts: [[u64; 3]; 3],
    pub row_totals: [u64; 3],
    /// `None` for cells of an empty row.
    pub percentages: [[Option<f64>; 3]; 3],
}

impl ConfusionMatrix {
    pub fn from_responses(responses: &[Response]) -> Result<ConfusionMatrix> {
        if responses.is_empty() {
            return Err(Error::NoResponses);
        }
        let mut counts = [[0u64; 3]; 3];
        for r in responses {
            let (Some(t), Some(p)) = (r.true_mode.index(), r.perceived_mode.index()) else {
                return Err(Error::UnknownMode("unknown".into()));
            };
            counts[t][p] += 1;
        }
        Ok(Self::from_counts(counts))
    }

    pub fn from_counts(counts: [[u64; 3]; 3]) -> ConfusionMatrix {
        let mut row_totals = [0u64; 3];
        let mut percentages = [[None; 3]; 3];
        for (t, row) in counts.iter().enumerate() {
            let total: u64 = row.iter().sum();
            row_totals[t] = total;
            if total > 0 {
                for (p, &c) in row.iter().enumerate() {
                    percentages[t][p] = Some(100.0 * c as f64 / total as f64);
                }
            }
        }
        ConfusionMatrix {
            counts,
            row_totals,
            percentages,
        }
    }

    /// True modes with no responses at all.
    pub fn empty_rows(&self) -> Vec<Mode> {
        Mode::CORE
            .iter()
            .copied()
            .filter(|m| self.row_totals[m.index().unwrap()] == 0)
            .collect()
    }

    /// Renders the percentage table; empty rows show `-` in every cell.
    pub fn render_percentages(&self) -> String {
        let cells = self.percentages.map(|row| {
            row.map(|cell| cell.map_or_else(|| "-".to_string(), format_percent))
        });
        render_table(&cells)
    }

    /// Renders the raw counts table.
    pub fn render_counts(&self) -> String {
        let cells = self.counts.map(|row| row.map(|c| c.to_string()));
        render_table(&cells)
    }
}

/// Renders a stored percentage matrix in the same layout as
/// [`ConfusionMatrix::render_percentages`].
pub fn render_percentage_table(rows: &[[f64; 3]; 3]) -> String {
    let cells = rows.map(|row| row.map(format_percent));
    render_table(&cells)
}

/// Two decimal places with trailing zeros (and a bare point) trimmed:
/// 73.137… → "73.14", 22.0 → "22", 0.0 → "0".
pub fn format_percent(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn render_table(cells: &[[String; 3]; 3]) -> String {
    const CORNER: &str = "true \\ perceived";
    let labels: Vec<&str> = Mode::CORE.iter().map(|m| m.as_str()).collect();
    let label_width = CORNER.len().max(labels.iter().map(|l| l.len()).max().unwrap());
    let mut col_widths = [0usize; 3];
    for (c, width) in col_widths.iter_mut().enumerate() {
        *width = labels[c]
            .len()
            .max(cells.iter().map(|row| row[c].len()).max().unwrap());
    }

    let mut out = String::new();
    out.push_str(&format!("{CORNER:<label_width$}"));
    for (c, label) in labels.iter().enumerate() {
        out.push_str(&format!("  {label:>width$}", width = col_widths[c]));
    }
    out.push('\n');
    for (r, row) in cells.iter().enumerate() {
        out.push_str(&format!("{:<label_width$}", labels[r]));
        for (c, cell) in row.iter().enumerate() {
            out.push_str(&format!("  {cell:>width$}", width = col_widths[c]));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn response(true_mode: Mode, perceived: Mode) -> Response {
        Response {
            listener_id: "L1".into(),
            instrument: "X".into(),
            true_mode,
            perceived_mode: perceived,
        }
    }

    #[test]
    fn tally_and_row_percentages() {
        let m = ConfusionMatrix::from_counts([[3, 1, 0], [0, 4, 0], [0, 0, 4]]);
        assert_eq!(m.row_totals, [4, 4, 4]);
        assert_eq!(m.percentages[0], [Some(75.0), Some(25.0), Some(0.0)]);
        assert_eq!(m.percentages[1], [Some(0.0), Some(100.0), Some(0.0)]);
        assert_eq!(m.percentages[2], [Some(0.0), Some(0.0), Some(100.0)]);
    }

    #[test]
    fn from_responses_counts_each_answer() {
        let rs = vec![
            response(Mode::Plucked, Mode::Plucked),
            response(Mode::Plucked, Mode::Bowed),
            response(Mode::Struck, Mode::Struck),
            response(Mode::Plucked, Mode::Plucked),
        ];
        let m = ConfusionMatrix::from_responses(&rs).unwrap();
        assert_eq!(m.counts[0], [2, 0, 1]);
        assert_eq!(m.counts[1], [0, 1, 0]);
        assert_eq!(m.counts[2], [0, 0, 0]);
        assert_eq!(m.empty_rows(), vec![Mode::Bowed]);
        assert_eq!(m.percentages[2], [None, None, None]);
    }

    #[test]
    fn duplicate_responses_double_counts() {
        let one = vec![response(Mode::Bowed, Mode::Bowed)];
        let two = vec![
            response(Mode::Bowed, Mode::Bowed),
            response(Mode::Bowed, Mode::Bowed),
        ];
        let m1 = ConfusionMatrix::from_responses(&one).unwrap();
        let m2 = ConfusionMatrix::from_responses(&two).unwrap();
        assert_eq!(m1.counts[2][2] * 2, m2.counts[2][2]);
        assert_eq!(m1.percentages, m2.percentages);
    }

    #[test]
    fn single_response_is_one_full_cell() {
        let m = ConfusionMatrix::from_responses(&[response(Mode::Struck, Mode::Bowed)]).unwrap();
        assert_eq!(m.percentages[1][2], Some(100.0));
        assert_eq!(m.empty_rows(), vec![Mode::Plucked, Mode::Bowed]);
    }

    #[test]
    fn no_responses_rejected() {
        assert!(matches!(
            ConfusionMatrix::from_responses(&[]),
            Err(Error::NoResponses)
        ));
    }

    #[test]
    fn unknown_mode_rejected() {
        let rs = vec![response(Mode::Unknown, Mode::Plucked)];
        assert!(matches!(
            ConfusionMatrix::from_responses(&rs),
            Err(Error::UnknownMode(_))
        ));
    }

    #[test]
    fn nonempty_rows_sum_to_hundred() {
        let m = ConfusionMatrix::from_counts([[7, 11, 3], [1, 1, 1], [0, 0, 0]]);
        for row in 0..2 {
            let sum: f64 = m.percentages[row].iter().map(|c| c.unwrap()).sum();
            assert!((sum - 100.0).abs() < 0.05);
        }
    }

    #[test]
    fn percent_formatting_trims_zeros() {
        assert_eq!(format_percent(73.137), "73.14");
        assert_eq!(format_percent(23.14), "23.14");
        assert_eq!(format_percent(3.71), "3.71");
        assert_eq!(format_percent(22.0), "22");
        assert_eq!(format_percent(0.0), "0");
        assert_eq!(format_percent(95.0), "95");
        assert_eq!(format_percent(100.0), "100");
        assert_eq!(format_percent(0.005), "0.01");
    }

    #[test]
    fn rendered_table_holds_cells_verbatim() {
        let text = render_percentage_table(&[
            [73.14, 23.14, 3.71],
            [22.0, 78.0, 0.0],
            [4.0, 1.0, 95.0],
        ]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].contains("plucked") && lines[0].contains("bowed"));
        let row1: Vec<&str> = lines[1].split_whitespace().collect();
        assert_eq!(row1, vec!["plucked", "73.14", "23.14", "3.71"]);
        let row2: Vec<&str> = lines[2].split_whitespace().collect();
        assert_eq!(row2, vec!["struck", "22", "78", "0"]);
        let row3: Vec<&str> = lines[3].split_whitespace().collect();
        assert_eq!(row3, vec!["bowed", "4", "1", "95"]);
    }

    #[test]
    fn empty_row_renders_dashes() {
        let m = ConfusionMatrix::from_counts([[1, 0, 0], [0, 0, 0], [0, 0, 1]]);
        let text = m.render_percentages();
        let struck_line = text.lines().nth(2).unwrap();
        assert_eq!(
            struck_line.split_whitespace().collect::<Vec<_>>(),
            vec!["struck", "-", "-", "-"]
        );
    }
}
