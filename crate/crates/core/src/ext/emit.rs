use std::fmt::Write as _;

use super::chart::{Dot, ExtChart};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChartFormat {
    Csv,
    Text,
    Svg,
}

impl std::str::FromStr for ChartFormat {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ChartFormat::Csv),
            "txt" | "text" => Ok(ChartFormat::Text),
            "svg" => Ok(ChartFormat::Svg),
            other => Err(crate::error::ParseError::new(format!(
                "unsupported chart format {other:?} (expected csv, txt, or svg)"
            ))),
        }
    }
}

/// Renders a chart deterministically: identical charts produce
/// byte-identical documents.
pub fn emit_chart(chart: &ExtChart, format: ChartFormat) -> String {
    match format {
        ChartFormat::Csv => emit_csv(chart),
        ChartFormat::Text => emit_text(chart),
        ChartFormat::Svg => emit_svg(chart),
    }
}

/// `s,t,dim` lines for nonzero entries, sorted by (stem, s).
fn emit_csv(chart: &ExtChart) -> String {
    let mut rows: Vec<(u32, u32, usize)> = chart
        .dims
        .iter()
        .filter(|(_, &d)| d > 0)
        .map(|(&(s, t), &d)| (s, t, d))
        .collect();
    rows.sort_by_key(|&(s, t, _)| (t - s, s));
    let mut out = String::from("s,t,dim\n");
    for (s, t, d) in rows {
        writeln!(out, "{s},{t},{d}").unwrap();
    }
    out
}

/// Stem range rendered: only stems whose full column fits inside the
/// computed (max_s, max_t) window.
fn stem_range(chart: &ExtChart) -> u32 {
    chart.max_t.saturating_sub(chart.max_s)
}

fn emit_text(chart: &ExtChart) -> String {
    let max_stem = stem_range(chart);
    let mut out = String::new();
    for s in (0..=chart.max_s).rev() {
        write!(out, "{s:>3} |").unwrap();
        for k in 0..=max_stem {
            let d = chart.dim(s, s + k);
            let cell = match d {
                0 => '.',
                1..=9 => char::from_digit(d as u32, 10).unwrap(),
                _ => '*',
            };
            write!(out, " {cell}").unwrap();
        }
        out.push('\n');
    }
    write!(out, "  s +").unwrap();
    for _ in 0..=max_stem {
        out.push_str("--");
    }
    out.push('\n');
    out.push_str("     ");
    for k in 0..=max_stem {
        if k % 5 == 0 {
            write!(out, "{k:<10}").unwrap();
        }
    }
    while out.ends_with(' ') {
        out.pop();
    }
    out.push('\n');
    out
}

const CELL: i64 = 36;
const PAD: i64 = 30;
const DOT_GAP: i64 = 9;

fn dot_position(chart: &ExtChart, dot: &Dot) -> (i64, i64) {
    let stem = (dot.t - dot.s) as i64;
    let n = chart.dim(dot.s, dot.t) as i64;
    let x = PAD + stem * CELL + CELL / 2 + (dot.index as i64 * 2 - (n - 1)) * DOT_GAP / 2;
    let y = PAD + (chart.max_s as i64 - dot.s as i64) * CELL + CELL / 2;
    (x, y)
}

fn emit_svg(chart: &ExtChart) -> String {
    let max_stem = stem_range(chart) as i64;
    let width = 2 * PAD + (max_stem + 1) * CELL;
    let height = 2 * PAD + (chart.max_s as i64 + 1) * CELL;
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    writeln!(out, "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>").unwrap();
    // multiplication lines underneath the dots
    if let Some(lines) = &chart.h_lines {
        let mut lines = lines.clone();
        lines.sort();
        for line in lines {
            let (x1, y1) = dot_position(chart, &line.from);
            let (x2, y2) = dot_position(chart, &line.to);
            let color = match line.j {
                0 => "#444444",
                1 => "#1f77b4",
                _ => "#d62728",
            };
            writeln!(
                out,
                "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{color}\" stroke-width=\"1.5\"/>"
            )
            .unwrap();
        }
    }
    for (&(s, t), &d) in &chart.dims {
        if t - s > max_stem as u32 {
            continue;
        }
        for index in 0..d {
            let (x, y) = dot_position(chart, &Dot { s, t, index });
            writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"black\"/>").unwrap();
        }
    }
    // axis labels every 5 stems
    for k in (0..=max_stem).step_by(5) {
        let x = PAD + k * CELL + CELL / 2;
        let y = height - PAD / 3;
        writeln!(
            out,
            "<text x=\"{x}\" y=\"{y}\" font-size=\"11\" text-anchor=\"middle\" font-family=\"monospace\">{k}</text>"
        )
        .unwrap();
    }
    for s in (0..=chart.max_s as i64).step_by(5) {
        let x = PAD / 3;
        let y = PAD + (chart.max_s as i64 - s) * CELL + CELL / 2;
        writeln!(
            out,
            "<text x=\"{x}\" y=\"{y}\" font-size=\"11\" text-anchor=\"middle\" font-family=\"monospace\">{s}</text>"
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn single_dot_chart() -> ExtChart {
        let mut dims = BTreeMap::new();
        dims.insert((0, 0), 1);
        ExtChart {
            max_s: 0,
            max_t: 0,
            dims,
            h_lines: None,
        }
    }

    #[test]
    fn csv_single_dot() {
        assert_eq!(emit_csv(&single_dot_chart()), "s,t,dim\n0,0,1\n");
    }

    #[test]
    fn csv_empty_chart_is_just_the_header() {
        let chart = ExtChart {
            max_s: 2,
            max_t: 2,
            dims: BTreeMap::new(),
            h_lines: None,
        };
        assert_eq!(emit_csv(&chart), "s,t,dim\n");
    }

    #[test]
    fn csv_sorted_by_stem_then_s() {
        let mut dims = BTreeMap::new();
        dims.insert((2, 4), 1); // stem 2
        dims.insert((0, 0), 1); // stem 0
        dims.insert((1, 1), 1); // stem 0
        let chart = ExtChart {
            max_s: 2,
            max_t: 4,
            dims,
            h_lines: None,
        };
        assert_eq!(emit_csv(&chart), "s,t,dim\n0,0,1\n1,1,1\n2,4,1\n");
    }

    #[test]
    fn text_grid_shows_tower() {
        let mut dims = BTreeMap::new();
        for s in 0..=2u32 {
            dims.insert((s, s), 1);
        }
        let chart = ExtChart {
            max_s: 2,
            max_t: 4,
            dims,
            h_lines: None,
        };
        let text = emit_text(&chart);
        // three rows of the stem-0 tower, rendered top-down
        assert!(text.starts_with("  2 | 1 . .\n  1 | 1 . .\n  0 | 1 . .\n"));
    }

    #[test]
    fn formats_parse() {
        assert_eq!("csv".parse::<ChartFormat>().unwrap(), ChartFormat::Csv);
        assert_eq!("txt".parse::<ChartFormat>().unwrap(), ChartFormat::Text);
        assert_eq!("svg".parse::<ChartFormat>().unwrap(), ChartFormat::Svg);
        assert!("pdf".parse::<ChartFormat>().is_err());
    }

    #[test]
    fn svg_is_deterministic() {
        let chart = single_dot_chart();
        assert_eq!(emit_svg(&chart), emit_svg(&chart));
        assert!(emit_svg(&chart).contains("<circle"));
    }
}
