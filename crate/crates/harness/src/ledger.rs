//! Result rows and their CSV / JSON serialisation.

use std::io::Write;
use std::str::FromStr;

use anyhow::{bail, Result};
use ktdom::claims::Observation;
use ktdom::{ClaimReport, Quantity, SolveResult, VertexSet};
use serde::Serialize;

/// CSV header, in column order.
pub const COLUMNS: [&str; 10] = [
    "instance",
    "n",
    "delta",
    "k",
    "quantity",
    "value",
    "witness",
    "elapsed_ms",
    "claim",
    "verdict",
];

/// One ledger line: a solver run, a claim verdict, or both.
///
/// Witnesses are written 1-based and space-separated, as in the graph file
/// format. `elapsed_ms` stays empty unless timings were requested, so that
/// ledgers from repeated runs compare byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerRow {
    pub instance: String,
    pub n: Option<usize>,
    pub delta: Option<usize>,
    pub k: Option<usize>,
    pub quantity: Option<String>,
    pub value: Option<usize>,
    pub witness: Option<String>,
    pub elapsed_ms: Option<u128>,
    pub claim: Option<String>,
    pub verdict: Option<String>,
}

/// A row plus the free-text detail that only the JSON ledger carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetailedRow {
    #[serde(flatten)]
    pub row: LedgerRow,
    pub params: Option<String>,
    pub expected: Option<String>,
    pub observed: Option<String>,
}

impl LedgerRow {
    #[allow(clippy::too_many_arguments)]
    pub fn solved(
        instance: &str,
        n: usize,
        delta: usize,
        k: usize,
        quantity: Quantity,
        result: &SolveResult,
        timings: bool,
    ) -> Self {
        Self {
            instance: instance.to_string(),
            n: Some(n),
            delta: Some(delta),
            k: Some(k),
            quantity: Some(quantity.to_string()),
            value: Some(result.value),
            witness: Some(witness_text(&result.witness)),
            elapsed_ms: timings.then_some(result.elapsed.as_millis()),
            claim: None,
            verdict: None,
        }
    }

    fn from_observation(o: &Observation, timings: bool) -> Self {
        Self {
            instance: o.instance.clone(),
            n: Some(o.n),
            delta: Some(o.delta),
            k: Some(o.k),
            quantity: Some(o.quantity.to_string()),
            value: Some(o.value),
            witness: Some(witness_text(&o.witness)),
            elapsed_ms: timings.then_some(o.elapsed.as_millis()),
            claim: None,
            verdict: None,
        }
    }

    /// A row for a claim that could not be evaluated (timeout, size limit).
    pub fn unevaluated(claim: &str, params: &str, status: &str) -> Self {
        Self {
            instance: params.to_string(),
            n: None,
            delta: None,
            k: None,
            quantity: None,
            value: None,
            witness: None,
            elapsed_ms: None,
            claim: Some(claim.to_string()),
            verdict: Some(status.to_string()),
        }
    }
}

impl DetailedRow {
    pub fn plain(row: LedgerRow) -> Self {
        Self {
            row,
            params: None,
            expected: None,
            observed: None,
        }
    }

    pub fn from_report(report: &ClaimReport, timings: bool) -> Self {
        let mut row = match &report.observation {
            Some(o) => LedgerRow::from_observation(o, timings),
            None => LedgerRow::unevaluated("", &report.params, ""),
        };
        row.claim = Some(report.claim.to_string());
        row.verdict = Some(report.verdict.to_string());
        Self {
            row,
            params: Some(report.params.clone()),
            expected: Some(report.expected.clone()),
            observed: Some(report.observed.clone()),
        }
    }
}

pub fn witness_text(s: &VertexSet) -> String {
    s.to_one_based()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => bail!("unknown format {s:?}, expected csv or json"),
        }
    }
}

/// Writes all rows at once: CSV with a header line, or a JSON array.
pub fn write_rows(rows: &[DetailedRow], format: Format, out: impl Write) -> Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if rows.is_empty() {
                w.write_record(COLUMNS)?;
            }
            for r in rows {
                w.serialize(&r.row)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ktdom::FamilySpec;

    fn row() -> DetailedRow {
        let g = "C5".parse::<FamilySpec>().unwrap().generate().unwrap();
        let r = ktdom::upper_gamma_ktt(&g, 1).unwrap();
        DetailedRow::plain(LedgerRow::solved(
            "cycle:5",
            5,
            2,
            1,
            Quantity::UpperGamma,
            &r,
            false,
        ))
    }

    #[test]
    fn csv_layout() {
        let mut out = Vec::new();
        write_rows(&[row()], Format::Csv, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(
            text,
            "instance,n,delta,k,quantity,value,witness,elapsed_ms,claim,verdict\n\
             cycle:5,5,2,1,Gamma,3,1 2 3,,,\n"
        );
        let mut out = Vec::new();
        write_rows(&[], Format::Csv, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), COLUMNS.join(",") + "\n");
    }

    #[test]
    fn json_layout() {
        let mut out = Vec::new();
        write_rows(&[row()], Format::Json, &mut out).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v[0]["value"], 3);
        assert_eq!(v[0]["quantity"], "Gamma");
        assert!(v[0]["elapsed_ms"].is_null());
    }
}
