//! Parsing and rendering of complex literals.
//!
//! Grammar: `REAL | REAL SIGN IMAG 'i' | IMAG 'i'`, where REAL and IMAG are
//! decimal floats with optional exponent. No internal whitespace, no NaN or
//! infinity spellings. Rendering uses shortest round-trip decimals in the
//! canonical forms `a`, `bi`, `a+bi`, `a-bi`; parsing a rendered literal
//! recovers the exact same pair of doubles, signed zeros included.

use std::fmt;
use sylvester_cubic::Complex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the first offending position.
    pub offset: usize,
    /// What the parser wanted to see there.
    pub expected: &'static str,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "offset {}: expected {}", self.offset, self.expected)
    }
}

impl std::error::Error for ParseError {}

/// Scans one decimal float starting at `start`; returns the end offset.
fn scan_number(bytes: &[u8], start: usize, allow_sign: bool) -> Result<usize, ParseError> {
    let mut i = start;
    if allow_sign && i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
        i += 1;
    }
    let mantissa_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    let mut digits = i - mantissa_start;
    if i < bytes.len() && bytes[i] == b'.' {
        i += 1;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        digits = i - mantissa_start - 1;
    }
    if digits == 0 {
        return Err(ParseError {
            offset: mantissa_start,
            expected: "a digit",
        });
    }
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        i += 1;
        if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            i += 1;
        }
        let exponent_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == exponent_start {
            return Err(ParseError {
                offset: exponent_start,
                expected: "an exponent digit",
            });
        }
    }
    Ok(i)
}

fn parse_finite_f64(text: &str, offset: usize) -> Result<f64, ParseError> {
    let value: f64 = text.parse().map_err(|_| ParseError {
        offset,
        expected: "a decimal number",
    })?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(ParseError {
            offset,
            expected: "a value representable as a finite double",
        })
    }
}

/// Parses a complex literal such as `1.5`, `-2i`, or `3e-2+4.1i`.
pub fn parse_complex(text: &str) -> Result<Complex, ParseError> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError {
            offset: 0,
            expected: "a number",
        });
    }
    let first_end = scan_number(bytes, 0, true)?;
    let first = parse_finite_f64(&text[..first_end], 0)?;
    if first_end == bytes.len() {
        return Ok(Complex::new(first, 0.0));
    }
    match bytes[first_end] {
        b'i' => {
            if first_end + 1 == bytes.len() {
                Ok(Complex::new(0.0, first))
            } else {
                Err(ParseError {
                    offset: first_end + 1,
                    expected: "end of input",
                })
            }
        }
        b'+' | b'-' => {
            let negative = bytes[first_end] == b'-';
            let imag_start = first_end + 1;
            let imag_end = scan_number(bytes, imag_start, false)?;
            let magnitude = parse_finite_f64(&text[imag_start..imag_end], imag_start)?;
            if imag_end == bytes.len() || bytes[imag_end] != b'i' {
                return Err(ParseError {
                    offset: imag_end,
                    expected: "'i'",
                });
            }
            if imag_end + 1 != bytes.len() {
                return Err(ParseError {
                    offset: imag_end + 1,
                    expected: "end of input",
                });
            }
            let imag = if negative { -magnitude } else { magnitude };
            Ok(Complex::new(first, imag))
        }
        _ => Err(ParseError {
            offset: first_end,
            expected: "'+', '-', or 'i'",
        }),
    }
}

fn format_f64(x: f64) -> String {
    format!("{x}")
}

/// Folds negative zero onto positive zero so equal complex values render
/// identically.
fn canonical_component(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Renders a complex value in canonical form with shortest round-trip
/// decimals: `a`, `bi`, `a+bi`, or `a-bi`. Parsing the result recovers the
/// exact same value (signed zeros are canonicalized to +0 first).
pub fn render_complex(z: Complex) -> String {
    let re = canonical_component(z.re);
    let im = canonical_component(z.im);
    if im == 0.0 {
        format_f64(re)
    } else if re == 0.0 {
        format!("{}i", format_f64(im))
    } else if im.is_sign_negative() {
        format!("{}-{}i", format_f64(re), format_f64(-im))
    } else {
        format!("{}+{}i", format_f64(re), format_f64(im))
    }
}

/// Splits comma-separated complex literals, trimming surrounding whitespace
/// per field. Reports errors as (field index, error).
pub fn parse_complex_list<const N: usize>(
    text: &str,
) -> Result<[Complex; N], String> {
    let fields: Vec<&str> = text.split(',').collect();
    if fields.len() != N {
        return Err(format!(
            "expected {N} comma-separated values, found {}",
            fields.len()
        ));
    }
    let mut out = [Complex::new(0.0, 0.0); N];
    for (index, field) in fields.iter().enumerate() {
        out[index] = parse_complex(field.trim())
            .map_err(|e| format!("value {}: {e}", index + 1))?;
    }
    Ok(out)
}
