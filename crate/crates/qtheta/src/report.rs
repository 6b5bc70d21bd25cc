//! Suite results and their json / csv / text renderings.

use serde::Serialize;
use std::io::{self, Write};

/// One evaluated identity. `equal` holds iff the canonical strings are identical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub notes: String,
}

impl SuiteResult {
    pub fn new(suite: &str, params: &[(impl AsRef<str>, impl AsRef<str>)], lhs: String, rhs: String) -> Self {
        let params = params.iter().map(|(k, v)| format!("{}={}", k.as_ref(), v.as_ref())).collect::<Vec<_>>().join(";");
        SuiteResult { suite: suite.to_string(), params, equal: lhs == rhs, lhs, rhs, notes: String::new() }
    }

    pub fn with_notes(mut self, notes: String) -> Self {
        self.notes = notes;
        self
    }

    /// Value of a `key=value` entry of `params`.
    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.split(';').find_map(|kv| kv.strip_prefix(key)?.strip_prefix('='))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn emit(results: &[SuiteResult], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in results {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["suite", "params", "lhs", "rhs", "equal"])?;
            for r in results {
                w.write_record([&r.suite, &r.params, &r.lhs, &r.rhs, &r.equal.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let ws = results.iter().map(|r| r.suite.len()).max().unwrap_or(0);
            let wp = results.iter().map(|r| r.params.len()).max().unwrap_or(0);
            for r in results {
                let status = if r.equal { "ok" } else { "MISMATCH" };
                write!(out, "{:<ws$}  {:<wp$}  {:<8}  {}", r.suite, r.params, status, r.lhs)?;
                if !r.equal {
                    write!(out, "  !=  {}", r.rhs)?;
                }
                if !r.notes.is_empty() {
                    write!(out, "  [{}]", r.notes)?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(results: &[SuiteResult], format: Format) -> String {
        let mut buf = Vec::new();
        emit(results, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn empty_json_is_empty() {
        assert_eq!(render(&[], Format::Json), "");
    }

    #[test]
    fn failing_row_is_flagged() {
        let r = SuiteResult::new("volumes", &[("n", "1")], "1".into(), "2".into());
        assert!(!r.equal);
        assert!(render(&[r], Format::Text).contains("MISMATCH"));
    }

    #[test]
    fn csv_header_and_params() {
        let r = SuiteResult::new("volumes", &[("check", "iwahori"), ("n", "2")], "x".into(), "x".into());
        assert_eq!(r.param("n"), Some("2"));
        let text = render(&[r], Format::Csv);
        assert!(text.starts_with("suite,params,lhs,rhs,equal\n"));
        assert!(text.contains("check=iwahori;n=2"));
    }
}
