//! Table, CSV, and JSON-lines rendering. The three formats carry the same
//! rows; only the framing differs.

use praaf::io::format_probability;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Jsonl,
}

/// One output cell.
#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Probability(f64),
    Flag(bool),
    /// Space-separated list (extension listings); quoted as one CSV field.
    List(Vec<String>),
    Empty,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Probability(p) => format_probability(*p),
            Cell::Flag(b) => if *b { "yes" } else { "no" }.to_owned(),
            Cell::List(items) => items.join(" "),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Text(s) => json_string(s),
            Cell::Probability(p) => format_probability(*p),
            Cell::Flag(b) => b.to_string(),
            Cell::List(items) => {
                let inner: Vec<String> = items.iter().map(|s| json_string(s)).collect();
                format!("[{}]", inner.join(","))
            }
            Cell::Empty => "null".to_owned(),
        }
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Renders rows under the chosen format. Column names double as JSON keys
/// and CSV headers; the table format prints an aligned header row.
pub fn render(format: OutputFormat, columns: &[&str], rows: &[Vec<Cell>]) -> String {
    match format {
        OutputFormat::Table => render_table(columns, rows),
        OutputFormat::Csv => render_csv(columns, rows),
        OutputFormat::Jsonl => render_jsonl(columns, rows),
    }
}

fn render_table(columns: &[&str], rows: &[Vec<Cell>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    let texts: Vec<Vec<String>> = rows
        .iter()
        .map(|row| row.iter().map(Cell::text).collect())
        .collect();
    for row in &texts {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if i + 1 == cells.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<width$}", width = widths[i]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    // Single-column listings read as plain output; the header would be noise.
    if columns.len() > 1 {
        let header: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
        emit(&mut out, &header);
    }
    for row in &texts {
        emit(&mut out, row);
    }
    out
}

fn render_csv(columns: &[&str], rows: &[Vec<Cell>]) -> String {
    let mut out = String::new();
    out.push_str(&columns.join(","));
    out.push('\n');
    for row in rows {
        let fields: Vec<String> = row.iter().map(|c| csv_field(&c.text())).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

fn render_jsonl(columns: &[&str], rows: &[Vec<Cell>]) -> String {
    let mut out = String::new();
    for row in rows {
        let fields: Vec<String> = columns
            .iter()
            .zip(row)
            .map(|(name, cell)| format!("{}:{}", json_string(name), cell.json()))
            .collect();
        out.push_str(&format!("{{{}}}\n", fields.join(",")));
    }
    out
}
