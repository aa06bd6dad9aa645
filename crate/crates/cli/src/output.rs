use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use anyhow::{Context as _, Result};
use clap::ValueEnum;
use riordan_core::groupkit::AbelianType;
use riordan_core::theorems::VerificationReport;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct Context {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub timings: bool,
}

impl Context {
    pub fn emit(&self, body: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display())),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(body.as_bytes())?;
                Ok(stdout.flush()?)
            }
        }
    }

    /// Reports with elapsed times dropped unless `--timings` was given.
    pub fn scrub(&self, reports: &[VerificationReport]) -> Vec<VerificationReport> {
        reports
            .iter()
            .cloned()
            .map(|mut r| {
                if !self.timings {
                    r.elapsed = None;
                }
                r
            })
            .collect()
    }

    pub fn report_lines(&self, reports: &[VerificationReport]) -> String {
        let mut out = String::new();
        for r in reports {
            match r.elapsed.filter(|_| self.timings) {
                Some(d) => writeln!(out, "{r} ({} ms)", d.as_millis()),
                None => writeln!(out, "{r}"),
            }
            .expect("string write");
        }
        out
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

pub fn factors_json(a: &AbelianType) -> Value {
    Value::Array(a.factors().iter().map(|f| Value::String(f.to_string())).collect())
}

pub fn reports_json(reports: &[VerificationReport]) -> Value {
    serde_json::to_value(reports).expect("reports serialize")
}

/// Rows through the csv writer, so fields with commas get quoted.
pub fn csv_rows<I, R>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn reports_csv(reports: &[VerificationReport], timings: bool) -> Result<String> {
    let mut header = vec!["verdict", "claim", "parameters", "predicted", "computed"];
    if timings {
        header.push("elapsed_ms");
    }
    csv_rows(
        &header,
        reports.iter().map(|r| {
            let mut row = vec![
                r.verdict.to_string(),
                r.claim.clone(),
                r.parameter_string(),
                r.predicted.clone(),
                r.computed.clone(),
            ];
            if timings {
                row.push(r.elapsed.map(|d| d.as_millis().to_string()).unwrap_or_default());
            }
            row
        }),
    )
}

/// Reports in the selected format, with a trailing summary line in text.
pub fn render_reports(ctx: &Context, reports: &[VerificationReport]) -> Result<String> {
    let reports = ctx.scrub(reports);
    Ok(match ctx.format {
        Format::Json => pretty(&reports_json(&reports)),
        Format::Csv => reports_csv(&reports, ctx.timings)?,
        Format::Text => {
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let mut s = ctx.report_lines(&reports);
            writeln!(s, "{} checks, {failed} failed", reports.len())?;
            s
        }
    })
}

pub fn object(pairs: &[(&str, Value)]) -> Value {
    let mut m = serde_json::Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v.clone());
    }
    json!(m)
}
