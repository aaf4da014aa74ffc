//! Batch processing: one cubic per input line, one record per output line,
//! in input order.

use std::io::Write;
use std::path::Path;

use sylvester_cubic::sylvester::SolveOptions;

use crate::commands::solve_from_coefficients;
use crate::literal::parse_complex;
use crate::record::SolveRecord;
use crate::{exit_code, Format};

/// Processes one non-comment input line into a record. Parse and solve
/// failures are embedded in the record, never fatal.
pub fn process_line(line_no: usize, line: &str, opts: &SolveOptions) -> SolveRecord {
    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
    let mut input = [String::new(), String::new(), String::new(), String::new()];
    for (slot, field) in input.iter_mut().zip(fields.iter()) {
        *slot = (*field).to_owned();
    }
    if fields.len() != 4 {
        return SolveRecord::failure(
            line_no,
            input,
            format!(
                "expected 4 comma-separated coefficients, found {}",
                fields.len()
            ),
        );
    }
    let mut coeffs = [sylvester_cubic::Complex::new(0.0, 0.0); 4];
    for (index, field) in fields.iter().enumerate() {
        match parse_complex(field) {
            Ok(value) => coeffs[index] = value,
            Err(e) => {
                return SolveRecord::failure(line_no, input, format!("field {}: {e}", index + 1));
            }
        }
    }
    match solve_from_coefficients(coeffs, opts) {
        Ok(solved) => SolveRecord::success(line_no, input, &solved),
        Err(e) => SolveRecord::failure(line_no, input, e.to_string()),
    }
}

fn write_record(
    out: &mut dyn Write,
    format: Format,
    record: &SolveRecord,
) -> std::io::Result<()> {
    match format {
        Format::Jsonl => writeln!(out, "{}", record.to_jsonl()),
        Format::Csv => writeln!(out, "{}", record.to_csv_row()),
        Format::Text => {
            match &record.error {
                Some(message) => writeln!(out, "line {}: error: {message}", record.line),
                None => {
                    // Compact one-line form; the structured formats carry
                    // the full detail.
                    let roots = record.roots.as_ref().expect("success record has roots");
                    writeln!(
                        out,
                        "line {}: {} roots: {} {} {}",
                        record.line,
                        record
                            .classification
                            .as_deref()
                            .expect("success record has classification"),
                        roots[0],
                        roots[1],
                        roots[2],
                    )
                }
            }
        }
    }
}

/// Runs the whole batch. Returns the process exit code: the file must be
/// readable, while per-line failures are embedded in their records.
pub fn run_batch(
    path: &Path,
    format: Format,
    opts: &SolveOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let content = match std::fs::read_to_string(path) {
        Ok(content) => content,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return exit_code::USAGE;
        }
    };
    if format == Format::Csv {
        if writeln!(out, "{}", SolveRecord::CSV_HEADER).is_err() {
            return exit_code::USAGE;
        }
    }
    for (index, raw_line) in content.lines().enumerate() {
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let record = process_line(index + 1, line, opts);
        if write_record(out, format, &record).is_err() {
            return exit_code::USAGE;
        }
    }
    exit_code::SUCCESS
}
