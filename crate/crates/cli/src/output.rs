use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{Context, Result};
use cayley_census::census::{CensusReport, CirculantRow, ValidationRow};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p).with_context(|| format!("cannot create {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

/// CSV has no nested objects, so `per_k` is flattened to `0=3;1=0`.
#[derive(Serialize)]
struct ReportRecord<'a> {
    group: &'a str,
    order: usize,
    degree: usize,
    mode: &'a str,
    method: String,
    count: String,
    per_k: String,
    agreement: Option<bool>,
    elapsed_ms: f64,
}

impl<'a> From<&'a CensusReport> for ReportRecord<'a> {
    fn from(r: &'a CensusReport) -> Self {
        ReportRecord {
            group: &r.group,
            order: r.order,
            degree: r.degree,
            mode: r.mode.as_str(),
            method: r.method.to_string(),
            count: r.count.to_string(),
            per_k: r.per_k.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";"),
            agreement: r.agreement,
            elapsed_ms: r.elapsed_ms,
        }
    }
}

fn write_csv<T: Serialize>(out: &mut dyn Write, rows: impl IntoIterator<Item = T>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn report_line(r: &CensusReport) -> String {
    let per_k = r.per_k.iter().map(|(k, v)| format!("k={k}: {v}")).collect::<Vec<_>>().join(", ");
    let agreement = match r.agreement {
        Some(true) => "  formula and oracle agree",
        Some(false) => "  FORMULA AND ORACLE DISAGREE",
        None => "",
    };
    format!("{} (order {}) m={} {}: {} classes [{per_k}] via {}{agreement}", r.group, r.order, r.degree, r.mode, r.count, r.method)
}

pub fn reports(out: &mut dyn Write, rows: &[CensusReport], format: Format, single: bool) -> Result<()> {
    match format {
        Format::Json if single => write_json(out, &rows[0]),
        Format::Json => write_json(out, rows),
        Format::Csv => write_csv(out, rows.iter().map(ReportRecord::from)),
        Format::Text => {
            for r in rows {
                writeln!(out, "{}", report_line(r))?;
            }
            Ok(())
        }
    }
}

pub fn circulant(out: &mut dyn Write, rows: &[CirculantRow], format: Format) -> Result<()> {
    match format {
        Format::Json => write_json(out, rows),
        Format::Csv => write_csv(out, rows),
        Format::Text => {
            writeln!(out, "{:>6} {:>6} {:>10} {:>12}  erratum", "prime", "degree", "weak", "isomorphism")?;
            for r in rows {
                writeln!(out, "{:>6} {:>6} {:>10} {:>12}  {}", r.prime, r.degree, r.weak, r.isomorphism, r.erratum.as_deref().unwrap_or("-"))?;
            }
            Ok(())
        }
    }
}

pub fn validation(out: &mut dyn Write, rows: &[ValidationRow], format: Format) -> Result<()> {
    match format {
        Format::Json => write_json(out, rows),
        Format::Csv => write_csv(out, rows),
        Format::Text => {
            for r in rows {
                let status = if r.agree { "agree" } else { "DISAGREE" };
                writeln!(out, "{} m={} {}: formula {} oracle {} {status}{}", r.group, r.degree, r.mode, r.formula, r.oracle, r.error.as_deref().map(|e| format!(" ({e})")).unwrap_or_default())?;
            }
            Ok(())
        }
    }
}
