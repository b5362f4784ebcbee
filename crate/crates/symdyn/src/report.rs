//! Output shaping shared by the CLI: significant-digit rounding and the
//! CSV rendering of measure tables. JSON payloads carry 12 significant
//! digits, CSV 6.

use serde_json::Value;

use crate::measures::ComplexityReport;

pub const JSON_DIGITS: u32 = 12;
pub const CSV_DIGITS: u32 = 6;

/// Round to `digits` significant digits (left intact: 0, NaN, infinities).
pub fn round_sig(v: f64, digits: u32) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    let magnitude = v.abs().log10().floor();
    let scale = 10f64.powi(digits as i32 - 1 - magnitude as i32);
    (v * scale).round() / scale
}

/// Round every fractional number in a JSON tree to [`JSON_DIGITS`].
pub fn round_json(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.is_f64() {
                    if let Some(rounded) = serde_json::Number::from_f64(round_sig(f, JSON_DIGITS)) {
                        *n = rounded;
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

/// Decimal text with [`CSV_DIGITS`] significant digits.
pub fn csv_number(v: f64) -> String {
    format!("{}", round_sig(v, CSV_DIGITS))
}

/// Render a measure table as CSV with metadata in `#` comments.
pub fn complexity_csv(report: &ComplexityReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("# prefix_len: {}\n", report.prefix_len));
    match report.stable {
        Some(flag) => out.push_str(&format!("# stable: {flag}\n")),
        None => out.push_str("# stable: not assessed (fixed input)\n"),
    }
    for note in &report.notes {
        out.push_str(&format!("# note: {note}\n"));
    }
    out.push('n');
    for name in &report.names {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for (n, values) in &report.rows {
        out.push_str(&n.to_string());
        for v in values {
            out.push(',');
            if let Some(v) = v {
                out.push_str(&v.to_string());
            }
        }
        out.push('\n');
    }
    out
}
