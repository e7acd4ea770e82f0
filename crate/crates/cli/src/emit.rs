//! Deterministic serialization: CSV with 12 significant digits and LF line
//! endings, pretty JSON with stable key order.

use std::path::Path;

use serde::Serialize;

use crate::error::CliError;

/// One value rendered with 12 significant decimal digits
/// (`d.ddddddddddde±exp`). Non-finite values render as `inf`/`-inf`/`nan`.
pub fn fmt_sig(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.11e}")
    } else if v.is_nan() {
        "nan".to_string()
    } else if v > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

/// CSV document: header row plus rows, LF endings throughout. Fields
/// containing commas, quotes, or newlines are quoted.
pub fn csv_document<I>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut out = String::new();
    push_row(&mut out, header.iter().map(|s| s.to_string()));
    for row in rows {
        push_row(&mut out, row.into_iter());
    }
    out
}

fn push_row(out: &mut String, fields: impl Iterator<Item = String>) {
    let mut first = true;
    for field in fields {
        if !first {
            out.push(',');
        }
        first = false;
        if field.contains(',') || field.contains('"') || field.contains('\n') {
            out.push('"');
            out.push_str(&field.replace('"', "\"\""));
            out.push('"');
        } else {
            out.push_str(&field);
        }
    }
    out.push('\n');
}

/// Pretty JSON document with a trailing newline. Key order is stable:
/// struct fields serialize in declaration order, maps sort by key.
pub fn json_document<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

/// Compact single-line JSON for stdout summaries.
pub fn json_line<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string(value)?)
}

pub fn write_text(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig_digits_formatting() {
        assert_eq!(fmt_sig(14.137), "1.41370000000e1");
        assert_eq!(fmt_sig(0.0), "0.00000000000e0");
        assert_eq!(fmt_sig(-1.5), "-1.50000000000e0");
        assert_eq!(fmt_sig(f64::NEG_INFINITY), "-inf");
        assert_eq!(fmt_sig(f64::INFINITY), "inf");
        assert_eq!(fmt_sig(f64::NAN), "nan");
    }

    #[test]
    fn csv_quoting_and_lf() {
        let doc = csv_document(
            &["a", "b"],
            vec![
                vec!["1".to_string(), "plain".to_string()],
                vec!["2".to_string(), "has,comma".to_string()],
                vec!["3".to_string(), "has\"quote".to_string()],
            ],
        );
        assert_eq!(doc, "a,b\n1,plain\n2,\"has,comma\"\n3,\"has\"\"quote\"\n");
        assert!(!doc.contains('\r'));
    }
}
