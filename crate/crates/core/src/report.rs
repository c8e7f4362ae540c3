//! CSV and JSON serialization of sweep reports. Output is deterministic:
//! fixed column order, LF line endings, shortest round-trip decimals.

use std::io::Write;
use std::str::FromStr;

use crate::asymptotics::AsymptoticReport;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::domain(format!("unknown output format '{other}'"))),
        }
    }
}

pub const CSV_HEADER: &str = "n,sup_norm,normalized_ratio,argmax_t";

/// Write a report to `out` in the requested format.
pub fn emit_report<W: Write>(
    report: &AsymptoticReport,
    format: OutputFormat,
    out: &mut W,
) -> Result<()> {
    if report.records.is_empty() {
        return Err(Error::computation(
            "refusing to emit a report with no records".to_string(),
        ));
    }
    let io_err = |e: std::io::Error| Error::computation(format!("write failure: {e}"));
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}").map_err(io_err)?;
            for r in &report.records {
                writeln!(out, "{},{},{},{}", r.n, r.sup_norm, r.normalized_ratio, r.argmax_t)
                    .map_err(io_err)?;
            }
        }
        OutputFormat::Json => {
            let text = serde_json::to_string_pretty(report)
                .map_err(|e| Error::computation(format!("serialization failure: {e}")))?;
            out.write_all(text.as_bytes()).map_err(io_err)?;
            out.write_all(b"\n").map_err(io_err)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::{AsymptoticRecord, ParamSet, Verdict};
    use crate::geggen::GegenParams;

    fn sample_report(n_records: usize) -> AsymptoticReport {
        let records = (0..n_records)
            .map(|i| AsymptoticRecord {
                n: 10 * (i + 1),
                sup_norm: 1.5 * (i + 1) as f64,
                normalized_ratio: 0.25,
                argmax_t: 1.0,
            })
            .collect();
        AsymptoticReport {
            params: ParamSet::Gegen(GegenParams::new(2.0, 1.0).unwrap()),
            target_exponent: 2.0,
            fitted_exponent: 1.99,
            ratio_min: 0.2,
            ratio_max: 0.3,
            tolerance_used: 0.05,
            verdict: Verdict::Pass,
            even_fitted_exponent: None,
            odd_fitted_exponent: None,
            sub_checks: Vec::new(),
            records,
        }
    }

    #[test]
    fn csv_single_record_is_two_lines() {
        let mut buf = Vec::new();
        emit_report(&sample_report(1), OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "n,sup_norm,normalized_ratio,argmax_t\n10,1.5,0.25,1\n");
    }

    #[test]
    fn csv_round_trips() {
        let report = sample_report(3);
        let mut buf = Vec::new();
        emit_report(&report, OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        for (line, rec) in text.lines().skip(1).zip(&report.records) {
            let cols: Vec<&str> = line.split(',').collect();
            assert_eq!(cols[0].parse::<usize>().unwrap(), rec.n);
            assert_eq!(cols[1].parse::<f64>().unwrap(), rec.sup_norm);
            assert_eq!(cols[2].parse::<f64>().unwrap(), rec.normalized_ratio);
            assert_eq!(cols[3].parse::<f64>().unwrap(), rec.argmax_t);
        }
    }

    #[test]
    fn json_has_required_fields() {
        let mut buf = Vec::new();
        emit_report(&sample_report(2), OutputFormat::Json, &mut buf).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        for field in [
            "params",
            "target_exponent",
            "fitted_exponent",
            "ratio_min",
            "ratio_max",
            "tolerance_used",
            "verdict",
            "records",
        ] {
            assert!(value.get(field).is_some(), "missing field {field}");
        }
        assert_eq!(value["verdict"], "pass");
        assert_eq!(value["records"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn empty_report_rejected() {
        let mut buf = Vec::new();
        let err = emit_report(&sample_report(0), OutputFormat::Csv, &mut buf).unwrap_err();
        assert!(matches!(err, Error::Computation(_)));
        assert!(buf.is_empty());
    }
}
